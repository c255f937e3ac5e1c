#ifndef LEIBNIZ_IO_CLI_HPP
#define LEIBNIZ_IO_CLI_HPP

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "../algebra.hpp"
#include "../cohomology.hpp"
#include "../errors.hpp"
#include "../suite.hpp"
#include "document.hpp"
#include "spec.hpp"

/*
 * The `leibniz` command line. Exit codes: 0 all checks pass, 1 a
 * mathematical check failed, 2 usage or input error.
 */
namespace leibniz::io {

enum ExitCode : int { Ok = 0, CheckFailed = 1, InputError = 2 };

using ojson = nlohmann::ordered_json;

/// "2*e3 - 1/2*e4", "-x", "0".
inline std::string format_vector(const std::vector<std::string>& labels, const Vector& v)
{
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        const bool neg = v[k].sign() < 0;
        const Rational mag = neg ? -v[k] : v[k];
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (!(mag == Rational(1)))
            s += mag.str() + "*";
        s += labels[k];
    }
    return s.empty() ? "0" : s;
}

/// Worker count: --jobs wins, then LEIBNIZ_JOBS, then the hardware concurrency.
inline std::size_t resolve_jobs(int flag_value)
{
    if (flag_value > 0)
        return static_cast<std::size_t>(flag_value);
    if (const char* env = std::getenv("LEIBNIZ_JOBS"); env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1)
            throw ParseError(std::string("LEIBNIZ_JOBS must be a positive integer, got '") + env + "'");
        return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct CliOptions {
    bool json = false;
    bool timing = false;
    int jobs = 0;
    std::string spec;
    std::string path;
    std::string out = "-";
    std::size_t n_min = 4;
    std::size_t n_max = 6;
};

namespace commands {

inline int check(const CliOptions& o, std::ostream& out)
{
    const auto L = build(o.spec);
    const auto res = is_leibniz(L);
    if (o.json) {
        ojson j;
        j["command"] = "check";
        j["algebra"] = o.spec;
        j["dim"] = L.dim();
        j["leibniz"] = res.holds;
        j["triples_checked"] = res.triples_checked;
        if (res.first_failure) {
            const auto& t = *res.first_failure;
            j["first_failure"] = {{"i", t[0]}, {"j", t[1]}, {"k", t[2]}};
            j["defect"] = format_vector(L.labels(), res.defect);
        } else {
            j["first_failure"] = nullptr;
            j["defect"] = nullptr;
        }
        out << j.dump(2) << "\n";
    } else if (res.holds) {
        out << "Leibniz identity: PASS (" << res.triples_checked << " triples)\n";
    } else {
        const auto& t = *res.first_failure;
        out << "Leibniz identity: FAIL at (" << L.label(t[0]) << "," << L.label(t[1]) << "," << L.label(t[2])
            << "): [a,[b,c]] - [[a,b],c] + [[a,c],b] = " << format_vector(L.labels(), res.defect) << "\n";
    }
    return res.holds ? Ok : CheckFailed;
}

inline int props(const CliOptions& o, std::ostream& out)
{
    const auto L = build(o.spec);
    const auto lower = lower_central_series(L);
    const auto derived = derived_series(L);
    const bool filiform = is_filiform(L);
    const auto ann = right_annihilator(L).dim();
    if (o.json) {
        ojson j;
        j["command"] = "props";
        j["algebra"] = o.spec;
        j["dim"] = L.dim();
        j["lower_central_dims"] = lower.dims();
        j["derived_dims"] = derived.dims();
        j["nilpotent"] = lower.stabilized_at_zero;
        j["solvable"] = derived.stabilized_at_zero;
        j["filiform"] = filiform;
        j["right_annihilator_dim"] = ann;
        out << j.dump(2) << "\n";
    } else {
        auto yn = [](bool b) { return b ? "true" : "false"; };
        out << "dim: " << L.dim() << "\n"
            << "lower central dims: " << suite::detail::dims_string(lower.dims()) << "\n"
            << "derived dims: " << suite::detail::dims_string(derived.dims()) << "\n"
            << "nilpotent: " << yn(lower.stabilized_at_zero) << "\n"
            << "solvable: " << yn(derived.stabilized_at_zero) << "\n"
            << "filiform: " << yn(filiform) << "\n"
            << "right annihilator dim: " << ann << "\n";
    }
    return Ok;
}

inline int h2(const CliOptions& o, std::ostream& out, std::ostream& err)
{
    const auto L = build(o.spec);
    if (auto chk = is_leibniz(L); !chk) {
        const auto& t = *chk.first_failure;
        err << "h2: not a Leibniz algebra: identity fails on (" << L.label(t[0]) << "," << L.label(t[1]) << ","
            << L.label(t[2]) << ")\n";
        return CheckFailed;
    }
    const auto r = hl2(L);
    if (o.json) {
        ojson j;
        j["command"] = "h2";
        j["algebra"] = o.spec;
        j["dim"] = r.algebra_dim;
        j["dim_der"] = r.dim_der;
        j["dim_zl2"] = r.dim_zl2;
        j["dim_bl2"] = r.dim_bl2;
        j["dim_hl2"] = r.dim_hl2;
        j["bl2_in_zl2"] = r.bl2_in_zl2;
        j["rigidity"] = to_string(r.rigidity);
        out << j.dump(2) << "\n";
    } else {
        out << "dim Der: " << r.dim_der << "\n"
            << "dim ZL2: " << r.dim_zl2 << "\n"
            << "dim BL2: " << r.dim_bl2 << "\n"
            << "dim HL2: " << r.dim_hl2 << "\n"
            << "BL2 in ZL2: " << (r.bl2_in_zl2 ? "true" : "false") << "\n"
            << "rigidity: " << to_string(r.rigidity) << "\n";
    }
    return Ok;
}

inline int der(const CliOptions& o, std::ostream& out)
{
    const auto L = build(o.spec);
    const auto basis = derivations(L);
    const auto& labels = L.labels();
    if (o.json) {
        ojson j;
        j["command"] = "der";
        j["algebra"] = o.spec;
        j["dim"] = L.dim();
        j["dim_der"] = basis.size();
        j["basis"] = ojson::array();
        for (const auto& d : basis) {
            ojson m = ojson::object();
            for (std::size_t i = 0; i < L.dim(); ++i)
                if (auto img = d.image0(i); !is_zero(img))
                    m[labels[i]] = format_vector(labels, img);
            j["basis"].push_back(std::move(m));
        }
        out << j.dump(2) << "\n";
    } else {
        out << "dim Der: " << basis.size() << "\n";
        for (std::size_t b = 0; b < basis.size(); ++b) {
            out << "D" << b + 1 << ":";
            const char* sep = " ";
            for (std::size_t i = 0; i < L.dim(); ++i)
                if (auto img = basis[b].image0(i); !is_zero(img)) {
                    out << sep << labels[i] << " -> " << format_vector(labels, img);
                    sep = "; ";
                }
            out << "\n";
        }
    }
    return Ok;
}

inline int verify_paper(const CliOptions& o, std::ostream& out)
{
    if (o.n_min < 3 || o.n_min > o.n_max)
        throw ParseError("verify-paper: need 3 <= --n-min <= --n-max, got " + std::to_string(o.n_min) + " and "
                         + std::to_string(o.n_max));
    if (o.n_max > 32)
        throw ParseError("verify-paper: --n-max above 32 is not supported");
    const auto rows = suite::run(o.n_min, o.n_max, resolve_jobs(o.jobs));
    std::size_t pass = 0, fail = 0, expl = 0;
    for (const auto& r : rows)
        (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : expl)++;
    const bool ok = suite::all_pass(rows);

    if (o.json) {
        ojson j;
        j["command"] = "verify-paper";
        j["n_min"] = o.n_min;
        j["n_max"] = o.n_max;
        j["rows"] = ojson::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"n", r.n},
                                 {"claim", r.claim},
                                 {"statement", r.statement},
                                 {"computed", r.computed},
                                 {"expected", r.expected},
                                 {"status", to_string(r.status)}});
        j["summary"] = {{"pass", pass}, {"fail", fail}, {"exploratory", expl}};
        j["ok"] = ok;
        out << j.dump(2) << "\n";
    } else {
        std::size_t wc = 5, wv = 8, we = 8;
        for (const auto& r : rows) {
            wc = std::max(wc, r.claim.size());
            wv = std::max(wv, r.computed.size());
            we = std::max(we, r.expected.size());
        }
        auto line = [&](const std::string& n, const std::string& c, const std::string& v, const std::string& e,
                        const std::string& s, const std::string& st) {
            out << std::left << std::setw(3) << n << "  " << std::setw(static_cast<int>(wc)) << c << "  "
                << std::setw(static_cast<int>(wv)) << v << "  " << std::setw(static_cast<int>(we)) << e << "  "
                << std::setw(11) << s << "  " << st << "\n";
        };
        line("n", "claim", "computed", "expected", "status", "statement");
        for (const auto& r : rows)
            line(std::to_string(r.n), r.claim, r.computed, r.expected, to_string(r.status), r.statement);
        out << rows.size() << " rows: " << pass << " PASS, " << fail << " FAIL, " << expl << " EXPLORATORY\n";
    }
    return ok ? Ok : CheckFailed;
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text))
        throw ParseError(path + ": cannot write file");
}

inline int export_doc(const CliOptions& o, std::ostream& out)
{
    write_output(to_document(build(o.spec)), o.out, out);
    return Ok;
}

inline int import_doc(const CliOptions& o, std::ostream& out)
{
    write_output(to_document(load_document(o.path)), o.out, out);
    return Ok;
}

} // namespace commands

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CliOptions o;
    CLI::App app{"Exact structure-constant computations for finite-dimensional Leibniz algebras", "leibniz"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Machine-readable JSON output");
    app.add_flag("--timing", o.timing, "Append an elapsed-time footer");
    app.add_option("--jobs", o.jobs, "Worker threads (default: LEIBNIZ_JOBS or hardware concurrency)")
        ->check(CLI::PositiveNumber);

    const std::string spec_help = "F1:n=N | F2:n=N | F3:n=N,alpha=A | RF1:n=N | file:PATH";
    auto* check = app.add_subcommand("check", "Verify the Leibniz identity on all basis triples");
    check->add_option("spec", o.spec, spec_help)->required();
    auto* props = app.add_subcommand("props", "Series dimensions, nilpotency, solvability, filiformity, Ann_r");
    props->add_option("spec", o.spec, spec_help)->required();
    auto* h2 = app.add_subcommand("h2", "Derivations and second cohomology with coefficients in the algebra");
    h2->add_option("spec", o.spec, spec_help)->required();
    auto* der = app.add_subcommand("der", "Basis of the derivation algebra");
    der->add_option("spec", o.spec, spec_help)->required();
    auto* verify = app.add_subcommand("verify-paper", "Batch reproduction of the R(F_n^1) results");
    verify->add_option("--n-min", o.n_min, "Smallest n")->capture_default_str();
    verify->add_option("--n-max", o.n_max, "Largest n")->capture_default_str();
    auto* exp = app.add_subcommand("export", "Write the canonical JSON document of an algebra");
    exp->add_option("spec", o.spec, spec_help)->required();
    exp->add_option("out", o.out, "Output path, - for stdout")->capture_default_str();
    auto* imp = app.add_subcommand("import", "Validate a JSON document and re-emit it canonically");
    imp->add_option("path", o.path, "Document path")->required();
    imp->add_option("out", o.out, "Output path, - for stdout")->capture_default_str();
    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "leibniz: " << e.what() << "\n";
        return InputError;
    }

    const auto start = std::chrono::steady_clock::now();
    int code = InputError;
    try {
        if (*check)
            code = commands::check(o, out);
        else if (*props)
            code = commands::props(o, out);
        else if (*h2)
            code = commands::h2(o, out, err);
        else if (*der)
            code = commands::der(o, out);
        else if (*verify)
            code = commands::verify_paper(o, out);
        else if (*exp)
            code = commands::export_doc(o, out);
        else if (*imp)
            code = commands::import_doc(o, out);
    } catch (const ParseError& e) {
        err << "leibniz: " << e.what() << "\n";
        return InputError;
    } catch (const ParameterError& e) {
        err << "leibniz: " << e.what() << "\n";
        return InputError;
    } catch (const IndexError& e) {
        err << "leibniz: " << e.what() << "\n";
        return InputError;
    } catch (const DimensionError& e) {
        err << "leibniz: " << e.what() << "\n";
        return InputError;
    }

    if (o.timing) {
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostream& dest = o.json ? err : out;
        dest << "--- timing ---\n" << "elapsed_seconds: " << std::fixed << std::setprecision(3) << secs << "\n";
    }
    return code;
}

} // namespace leibniz::io

#endif
