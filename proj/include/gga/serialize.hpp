#ifndef GGA_SERIALIZE_HPP
#define GGA_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <gga/errors.hpp>
#include <gga/monomial.hpp>
#include <gga/partitions.hpp>
#include <gga/recursion.hpp>
#include <gga/series.hpp>

// JSON forms. Integers that can grow without bound travel as decimal
// strings so that no precision is lost on the way through JSON.

namespace gga
{

inline void to_json(nlohmann::ordered_json &j, const TruncatedSeries &s)
{
    std::vector<std::string> coeffs;
    coeffs.reserve(s.coeffs().size());
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(c.str());
    }
    j = nlohmann::ordered_json{{"trunc", s.trunc()}, {"coeffs", coeffs}};
}

inline void from_json(const nlohmann::ordered_json &j, TruncatedSeries &s)
{
    const auto &coeffs = j.at("coeffs");
    const int trunc = j.at("trunc").get<int>();
    if (trunc < 0 || coeffs.size() != static_cast<std::size_t>(trunc) + 1) {
        throw truncation_error("series JSON: coeffs must hold trunc + 1 entries");
    }
    std::vector<integer> c;
    c.reserve(coeffs.size());
    for (const auto &v : coeffs) {
        c.emplace_back(v.get<std::string>());
    }
    s = TruncatedSeries(std::move(c));
}

inline void to_json(nlohmann::ordered_json &j, const Partition &p)
{
    j = std::vector<int>(p.parts().begin(), p.parts().end());
}

inline void to_json(nlohmann::ordered_json &j, const Monomial &m)
{
    j = to_string(m);
}

inline void to_json(nlohmann::ordered_json &j, const MonomialIdeal &I)
{
    std::vector<std::string> gens;
    for (const auto &g : I.gens()) {
        gens.push_back(to_string(g));
    }
    j = nlohmann::ordered_json{{"min_var", I.min_var()}, {"trunc", I.trunc()}, {"gens", gens}};
}

inline void to_json(nlohmann::ordered_json &j, const Report &r)
{
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto &[key, value] : r.params) {
        params[key] = value;
    }
    j = nlohmann::ordered_json{{"check", r.check}, {"params", params}, {"pass", r.pass}};
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"degree", r.first_mismatch->degree},
                               {"lhs", r.first_mismatch->lhs.str()},
                               {"rhs", r.first_mismatch->rhs.str()},
                               {"what", r.first_mismatch->what}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["truncation"] = r.truncation;
}

inline void from_json(const nlohmann::ordered_json &j, Report &r)
{
    r.check = j.at("check").get<std::string>();
    r.params.clear();
    for (const auto &[key, value] : j.at("params").items()) {
        r.params.emplace_back(key, value.get<int>());
    }
    r.pass = j.at("pass").get<bool>();
    r.truncation = j.at("truncation").get<int>();
    const auto &m = j.at("first_mismatch");
    if (m.is_null()) {
        r.first_mismatch.reset();
    } else {
        r.first_mismatch = ReportMismatch{m.at("degree").get<int>(), integer(m.at("lhs").get<std::string>()),
                                          integer(m.at("rhs").get<std::string>()), m.value("what", std::string())};
    }
}

} // namespace gga

#endif
