#ifndef GGA_TOOLS_GGA_CLI_HPP
#define GGA_TOOLS_GGA_CLI_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <gga/gga.hpp>

namespace gga::cli
{

enum ExitCode : int { exit_pass = 0, exit_mismatch = 1, exit_usage = 2, exit_internal = 3 };

enum class Command { series, count, hilbert, verify };
enum class Format { json, table };

struct Range {
    int lo;
    int hi;
};

// "A" or "A..B".
inline Range parse_range(const std::string &text)
{
    const auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return {v, v};
        }
        const std::string lo = text.substr(0, dots);
        const std::string hi = text.substr(dots + 2);
        const int a = std::stoi(lo, &used);
        if (used != lo.size()) {
            throw std::invalid_argument(text);
        }
        const int b = std::stoi(hi, &used);
        if (used != hi.size()) {
            throw std::invalid_argument(text);
        }
        if (a > b) {
            throw param_error("empty range '" + text + "'");
        }
        return {a, b};
    } catch (const param_error &) {
        throw;
    } catch (const std::exception &) {
        throw param_error("malformed range '" + text + "', expected INT or INT..INT");
    }
}

struct RunConfig {
    Command command = Command::verify;
    std::string series_kind; // "c" or "e"
    std::string family;      // "LriJ", "Lk" or "Lkl"
    Range r{2, 2};
    std::optional<int> i; // nullopt: every 1 <= i <= r
    Range J{0, 0};
    int N = 40;
    int index = 1;
    int k = 1;
    int ell = 1;
    bool lemmas = false;
    bool ordered = false;
    Format format = Format::json;
    std::optional<std::string> out_path;
};

struct Cell {
    int r;
    int i;
    int J;
};

inline int single(const Range &range, const char *flag)
{
    if (range.lo != range.hi) {
        throw param_error(std::string(flag) + " takes a single value for this command");
    }
    return range.lo;
}

// Parameter validation and expansion to the cartesian product of ranges.
inline std::vector<Cell> expand_matrix(const RunConfig &cfg)
{
    if (cfg.r.lo < 2) {
        throw param_error("r must be at least 2 (got " + std::to_string(cfg.r.lo) + ")");
    }
    if (cfg.J.lo < 0) {
        throw param_error("J must be nonnegative (got " + std::to_string(cfg.J.lo) + ")");
    }
    if (cfg.N < 0) {
        throw param_error("N must be nonnegative (got " + std::to_string(cfg.N) + ")");
    }
    if (cfg.i && (*cfg.i < 1 || *cfg.i > cfg.r.lo)) {
        throw param_error("i must satisfy 1 <= i <= r for every r in the range (got i = " + std::to_string(*cfg.i) + ")");
    }
    std::vector<Cell> cells;
    for (int r = cfg.r.lo; r <= cfg.r.hi; ++r) {
        const int i_lo = cfg.i ? *cfg.i : 1;
        const int i_hi = cfg.i ? *cfg.i : r;
        for (int i = i_lo; i <= i_hi; ++i) {
            for (int J = cfg.J.lo; J <= cfg.J.hi; ++J) {
                cells.push_back({r, i, J});
            }
        }
    }
    return cells;
}

// The main identity for one cell, plus the lemma-level checks on request.
inline std::vector<Report> run_cell(const Cell &cell, const RunConfig &cfg)
{
    std::vector<Report> out{verify_main(cell.r, cell.i, cell.J, cfg.N)};
    if (cfg.lemmas) {
        const int ell = cell.r - cell.i + 1;
        for (int k = 2 * cell.J + 1; k <= 2 * cell.J + 3; k += 2) {
            out.push_back(verify_hp_step(cell.r, k, cell.i, cell.J, cfg.N));
        }
        for (int d = cell.J + 1; d <= cell.J + 2; ++d) {
            out.push_back(verify_hp_expansion(cell.r, cell.i, cell.J, d, cfg.N));
            out.push_back(verify_c_expansion(cell.r, ell, cell.J, d, cfg.N));
        }
        out.push_back(verify_m_equals_n(cell.r, cell.i, cell.J, cell.J + 4, cfg.N));
        out.push_back(verify_limits(cell.r, cell.i, cell.J, cfg.N));
    }
    return out;
}

inline std::string format_report(const Report &rep, Format format)
{
    if (format == Format::json) {
        return nlohmann::ordered_json(rep).dump();
    }
    std::string line = (rep.pass ? "PASS " : "FAIL ") + rep.check;
    for (const auto &[key, value] : rep.params) {
        line += ' ' + key + '=' + std::to_string(value);
    }
    line += " N=" + std::to_string(rep.truncation);
    if (rep.first_mismatch) {
        const auto &m = *rep.first_mismatch;
        line += "  [" + m.what + " at q^" + std::to_string(m.degree) + ": " + m.lhs.str() + " != " + m.rhs.str() + "]";
    }
    return line;
}

inline int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    const auto cells = expand_matrix(cfg);
    std::vector<std::vector<Report>> results(cells.size());
    std::vector<std::exception_ptr> failures(cells.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> mismatch{false};
    std::mutex out_mutex;

    const auto worker = [&] {
        for (std::size_t c = next++; c < cells.size(); c = next++) {
            try {
                results[c] = run_cell(cells[c], cfg);
            } catch (...) {
                failures[c] = std::current_exception();
                continue;
            }
            for (const auto &rep : results[c]) {
                mismatch = mismatch || !rep.pass;
            }
            if (!cfg.ordered) {
                std::string block;
                for (const auto &rep : results[c]) {
                    block += format_report(rep, cfg.format) + '\n';
                }
                const std::lock_guard lock(out_mutex);
                out << block << std::flush;
            }
        }
    };
    const std::size_t n_threads
        = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(cells.size(), 1));
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();

    int code = mismatch ? exit_mismatch : exit_pass;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cfg.ordered && !failures[c]) {
            for (const auto &rep : results[c]) {
                out << format_report(rep, cfg.format) << '\n';
            }
        }
        if (failures[c]) {
            try {
                std::rethrow_exception(failures[c]);
            } catch (const std::exception &e) {
                err << "error in cell r=" << cells[c].r << " i=" << cells[c].i << " J=" << cells[c].J << ": "
                    << e.what() << '\n';
            }
            code = exit_internal;
        }
    }
    return code;
}

inline int cmd_series(const RunConfig &cfg, std::ostream &out)
{
    const int r = single(cfg.r, "--r");
    TruncatedSeries s;
    if (cfg.series_kind == "c") {
        if (r < 2) {
            throw param_error("r must be at least 2");
        }
        s = c_series(r, cfg.index, cfg.N);
    } else if (cfg.series_kind == "e") {
        s = series_E(r, cfg.i.value_or(1), single(cfg.J, "--J"), cfg.N);
    } else {
        throw param_error("series kind must be 'c' or 'e'");
    }
    out << nlohmann::ordered_json(s).dump() << '\n';
    return exit_pass;
}

inline int cmd_count(const RunConfig &cfg, std::ostream &out)
{
    const auto params = IdentityParams::make(single(cfg.r, "--r"), cfg.i.value_or(1), single(cfg.J, "--J"), cfg.N);
    const auto strings = [](const TruncatedSeries &s) {
        std::vector<std::string> v;
        for (const auto &c : s.coeffs()) {
            v.push_back(c.str());
        }
        return v;
    };
    nlohmann::ordered_json j;
    j["params"] = {{"r", params.r()}, {"i", params.i()}, {"J", params.J()}};
    j["N"] = params.N();
    if (params.J() == 0) {
        std::vector<std::string> c, d;
        for (int n = 0; n <= params.N(); ++n) {
            c.push_back(count_C(params, n).str());
            d.push_back(count_D(params.r(), params.i(), n).str());
        }
        j["C"] = c;
        j["D"] = d;
    }
    j["E"] = strings(series_E(params.r(), params.i(), params.J(), params.N()));
    out << j.dump() << '\n';
    return exit_pass;
}

inline int cmd_hilbert(const RunConfig &cfg, std::ostream &out)
{
    const int r = single(cfg.r, "--r");
    std::optional<MonomialIdeal> ideal;
    nlohmann::ordered_json params;
    if (cfg.family == "LriJ") {
        const int i = cfg.i.value_or(1);
        const int J = single(cfg.J, "--J");
        ideal = build_L_riJ(r, i, J, cfg.N);
        params = {{"r", r}, {"i", i}, {"J", J}};
    } else if (cfg.family == "Lk") {
        ideal = build_L_k(cfg.k, r, cfg.N);
        params = {{"k", cfg.k}, {"r", r}};
    } else if (cfg.family == "Lkl") {
        ideal = build_L_k_ell(cfg.k, cfg.ell, r, cfg.N);
        params = {{"k", cfg.k}, {"ell", cfg.ell}, {"r", r}};
    } else {
        throw param_error("family must be LriJ, Lk or Lkl");
    }
    const auto brute = hp_brute(*ideal);
    const auto split = hp_split(*ideal);
    const bool agree = brute == split;
    if (cfg.format == Format::table) {
        out << "family " << cfg.family << ' ' << params.dump() << '\n';
        out << "ideal  " << to_string(*ideal) << '\n';
        out << "brute  " << nlohmann::ordered_json(brute)["coeffs"].dump() << '\n';
        out << "split  " << nlohmann::ordered_json(split)["coeffs"].dump() << '\n';
        out << (agree ? "engines agree" : "ENGINES DISAGREE") << '\n';
    } else {
        nlohmann::ordered_json j;
        j["family"] = cfg.family;
        j["params"] = params;
        j["ideal"] = *ideal;
        j["hp_brute"] = brute;
        j["hp_split"] = split;
        j["engines_agree"] = agree;
        out << j.dump(2) << '\n';
    }
    return agree ? exit_pass : exit_mismatch;
}

inline int run(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    std::ofstream file;
    std::ostream *sink = &out;
    if (cfg.out_path) {
        file.open(*cfg.out_path);
        if (!file) {
            err << "cannot open " << *cfg.out_path << " for writing\n";
            return exit_usage;
        }
        sink = &file;
    }
    try {
        switch (cfg.command) {
        case Command::series:
            return cmd_series(cfg, *sink);
        case Command::count:
            return cmd_count(cfg, *sink);
        case Command::hilbert:
            return cmd_hilbert(cfg, *sink);
        case Command::verify:
            return cmd_verify(cfg, *sink, err);
        }
    } catch (const param_error &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const non_divisible &e) {
        err << "internal arithmetic error: " << e.what() << '\n';
        return exit_internal;
    } catch (const truncation_error &e) {
        err << "internal arithmetic error: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}

// Flag parsing; everything after it goes through run().
inline int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact verification of the Gollnitz-Gordon-Andrews identities and their Hilbert-Poincare "
                 "series counterparts"};
    app.require_subcommand(1);

    std::string r_text = "2";
    std::string i_text;
    std::string J_text = "0";
    std::optional<int> N;
    std::string format = "json";
    std::string out_path;
    RunConfig cfg;

    const auto common = [&](CLI::App *sub) {
        sub->add_option("--r", r_text, "r as A or A..B");
        sub->add_option("--i", i_text, "i as K or 'all'");
        sub->add_option("--J", J_text, "J as A or A..B");
        sub->add_option("--N", N, "truncation degree");
        sub->add_option("--out", out_path, "write output to PATH instead of stdout");
        sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    };

    auto *series = app.add_subcommand("series", "print C_index (kind c) or the E generating function (kind e)");
    common(series);
    series->add_option("kind", cfg.series_kind, "c or e")->required()->check(CLI::IsMember({"c", "e"}));
    series->add_option("--index", cfg.index, "product-side index");

    auto *count = app.add_subcommand("count", "partition counts C, D (J = 0) and E for n = 0..N");
    common(count);

    auto *hilbert = app.add_subcommand("hilbert", "dump an ideal and its Hilbert-Poincare series from both engines");
    common(hilbert);
    hilbert->add_option("--family", cfg.family, "LriJ, Lk or Lkl")
        ->required()
        ->check(CLI::IsMember({"LriJ", "Lk", "Lkl"}));
    hilbert->add_option("--k", cfg.k, "ring index k");
    hilbert->add_option("--ell", cfg.ell, "ell for L_k^ell");

    auto *verify = app.add_subcommand("verify", "run identity checks over a parameter matrix");
    common(verify);
    verify->add_flag("--lemmas", cfg.lemmas, "add lemma-level checks");
    verify->add_flag("--ordered", cfg.ordered, "emit reports in parameter order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    if (series->parsed()) {
        cfg.command = Command::series;
    } else if (count->parsed()) {
        cfg.command = Command::count;
    } else if (hilbert->parsed()) {
        cfg.command = Command::hilbert;
    } else {
        cfg.command = Command::verify;
    }
    try {
        cfg.r = parse_range(r_text);
        cfg.J = parse_range(J_text);
        if (!i_text.empty() && i_text != "all") {
            cfg.i = single(parse_range(i_text), "--i");
        } else if (i_text.empty() && cfg.command != Command::verify) {
            cfg.i = 1;
        }
    } catch (const param_error &e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    cfg.N = N.value_or(cfg.command == Command::verify ? 40 : 20);
    cfg.format = format == "table" ? Format::table : Format::json;
    if (!out_path.empty()) {
        cfg.out_path = out_path;
    }
    return run(cfg, out, err);
}

} // namespace gga::cli

#endif
