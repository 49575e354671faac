#ifndef GGA_GGA_HPP
#define GGA_GGA_HPP

#include <gga/errors.hpp>
#include <gga/hilbert.hpp>
#include <gga/monomial.hpp>
#include <gga/partitions.hpp>
#include <gga/recursion.hpp>
#include <gga/series.hpp>
#include <gga/serialize.hpp>

#endif
