#ifndef GGA_ERRORS_HPP
#define GGA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gga
{

// Bad user-supplied parameters (r < 2, i out of 1..r, negative J, ...).
struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct index_out_of_range : param_error {
    using param_error::param_error;
};

struct invalid_part : param_error {
    using param_error::param_error;
};

// A requested degree lies outside the certified range of a series or ideal.
struct truncation_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Exact division by a power of q failed. On correct inputs this never
// happens, so it always indicates a wrong upstream series.
struct non_divisible : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace gga

#endif
