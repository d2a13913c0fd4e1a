// Command-line front end: exact closed-form derivatives of cot/csc/tan/sec
// at rational multiples of pi, their oracle verification sweep, special-value
// tables, polynomial inspection, and the series decomposition checks.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "trigexact/bernoulli_euler.hpp"
#include "trigexact/closed_form.hpp"
#include "trigexact/cyclotomic.hpp"
#include "trigexact/oracle.hpp"
#include "trigexact/series.hpp"
#include "trigexact/trig.hpp"

namespace {

using nlohmann::ordered_json;
using namespace trigexact;

mpfr_prec_t digits_to_bits(int digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 32;
}

Trig parse_fn(const std::string& s) {
    const auto fn = trig_from_name(s);
    if (!fn) throw std::invalid_argument("unknown function: " + s);
    return *fn;
}

std::string exact_to_text(const ExactValue& v) {
    if (v.sum.empty()) return "0";
    return "pi^" + std::to_string(v.pi_power) + " * (" + v.sum.str() + ")";
}

std::string exact_to_latex(const ExactValue& v) {
    if (v.sum.empty()) return "0";
    return "\\pi^{" + std::to_string(v.pi_power) + "} (" + v.sum.latex() + ")";
}

ordered_json exact_to_json(const ExactValue& v, int digits) {
    ordered_json j;
    j["function"] = std::string(name(v.fn));
    j["n"] = v.n;
    j["p"] = v.p;
    j["q"] = v.q;
    j["sign"] = v.sign;
    j["pi_power"] = v.pi_power;
    ordered_json terms = ordered_json::array();
    for (const auto& t : v.sum.terms()) {
        ordered_json tj;
        tj["coeff"] = t.coeff.str();
        tj["kind"] = (t.kind == TrigKind::Cos) ? "cos" : "sin";
        tj["k"] = t.k;
        tj["d"] = t.d;
        terms.push_back(std::move(tj));
    }
    j["terms"] = std::move(terms);
    j["decimal"] = eval_exact(v, digits_to_bits(digits)).str(digits);
    return j;
}

struct EvalOptions {
    std::string fn, x;
    unsigned n = 1;
    std::string format = "text";
    int digits = 50;
};

int run_eval(const EvalOptions& opt) {
    const Trig fn = parse_fn(opt.fn);
    const Rational x = Rational::from_string(opt.x);
    const ExactValue v = deriv(fn, opt.n, x);
    if (opt.format == "text") {
        std::cout << exact_to_text(v) << "\n";
    } else if (opt.format == "latex") {
        std::cout << exact_to_latex(v) << "\n";
    } else if (opt.format == "decimal") {
        std::cout << eval_exact(v, digits_to_bits(opt.digits)).str(opt.digits)
                  << "\n";
    } else {
        std::cout << exact_to_json(v, opt.digits).dump(2) << "\n";
    }
    return 0;
}

struct VerifyOptions {
    unsigned max_n = 4;
    unsigned long max_q = 6;
    long precision = 256;
    std::string format = "text";
};

int run_verify(const VerifyOptions& opt) {
    std::vector<VerificationReport> rows;
    for (const Trig fn : {Trig::Cot, Trig::Csc, Trig::Tan, Trig::Sec}) {
        const bool half_window = !pole_at_integers(fn);
        const unsigned long q_lo = half_window ? 3 : 2;
        for (unsigned n = 1; n <= opt.max_n; ++n)
            for (unsigned long q = q_lo; q <= opt.max_q; ++q)
                for (unsigned long p = 1; half_window ? (2 * p < q) : (p < q); ++p)
                    rows.push_back(verify(fn, n,
                                          Rational(static_cast<long>(p),
                                                   static_cast<long>(q)),
                                          opt.precision));
    }
    const auto failures = static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(),
                      [](const VerificationReport& r) { return !r.pass; }));
    if (opt.format == "json") {
        ordered_json out = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json j;
            j["fn"] = std::string(name(r.fn));
            j["n"] = r.n;
            j["p"] = r.x.num().get_str();
            j["q"] = r.x.den().get_str();
            j["pass"] = r.pass;
            j["exact"] = r.exact_value.str(30);
            j["oracle"] = r.oracle_value.str(30);
            j["abs_gap"] = r.abs_gap.str(3);
            j["rel_gap"] = r.rel_gap.str(3);
            out.push_back(std::move(j));
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : rows) std::cout << r.line() << "\n";
        if (failures == 0)
            std::cout << "all " << rows.size() << " cases pass\n";
        else
            std::cout << failures << " of " << rows.size() << " cases FAIL\n";
    }
    return failures == 0 ? 0 : 1;
}

struct TableOptions {
    std::string fn;
    unsigned n_min = 1, n_max = 1;
    std::vector<std::string> xs;
    std::string format = "text";
    int digits = 20;
};

int run_table(const TableOptions& opt) {
    const Trig fn = parse_fn(opt.fn);
    std::vector<Rational> xs;
    for (const auto& s : opt.xs) xs.push_back(Rational::from_string(s));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    ordered_json json_rows = ordered_json::array();
    for (unsigned n = opt.n_min; n <= opt.n_max; ++n) {
        for (const auto& x : xs) {
            const ExactValue v = deriv(fn, n, x);
            if (opt.format == "json") {
                json_rows.push_back(exact_to_json(v, opt.digits));
            } else if (opt.format == "latex") {
                std::cout << "% " << name(fn) << " n=" << n << " x=" << x << "\n"
                          << exact_to_latex(v) << "\n";
            } else {
                std::cout << name(fn) << "\tn=" << n << "\tx=" << x.str() << "\t"
                          << exact_to_text(v) << "\t= "
                          << eval_exact(v, digits_to_bits(opt.digits)).str(opt.digits)
                          << "\n";
            }
        }
    }
    if (opt.format == "json") std::cout << json_rows.dump(2) << "\n";
    return 0;
}

struct PolyOptions {
    std::string kind;
    unsigned n = 0;
};

int run_poly(const PolyOptions& opt) {
    if (opt.kind == "bernoulli")
        std::cout << bernoulli_poly(opt.n).str() << "\n";
    else if (opt.kind == "euler")
        std::cout << euler_poly(opt.n).str() << "\n";
    else
        std::cout << cyclotomic_poly(opt.n).str() << "\n";
    return 0;
}

struct IdentitiesOptions {
    std::vector<double> s_values;
    unsigned long max_q = 8;
    double tol = 1e-10;
};

int run_identities(const IdentitiesOptions& opt) {
    std::vector<double> s_values = opt.s_values;
    if (s_values.empty()) s_values = {2.0, 3.0, 4.0};
    bool all_ok = true;
    bool header_printed = false;
    for (const double s : s_values) {
        const DecompositionReport report = check_decompositions(s, opt.max_q, opt.tol);
        if (!header_printed) {
            std::cout << report.header << "\n";
            header_printed = true;
        }
        for (const auto& row : report.rows)
            std::cout << row.identity << " s=" << row.s << " q=" << row.q
                      << " p=" << row.p << " residual=" << row.residual << "\n";
        const bool ok = report.max_residual < opt.tol;
        std::cout << "s=" << s << " max residual " << report.max_residual
                  << (ok ? " < " : " >= ") << opt.tol
                  << (ok ? " (ok)" : " (FAIL)") << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact n-th derivatives of cot/csc/tan/sec at rational "
                 "multiples of pi, with oracle verification"};
    app.require_subcommand(1);

    const std::vector<std::string> fn_names = {"cot", "csc", "tan", "sec"};
    const std::vector<std::string> formats = {"text", "json", "latex", "decimal"};

    EvalOptions eval_opt;
    auto* eval_cmd = app.add_subcommand(
        "eval", "closed-form derivative at one rational point");
    eval_cmd->add_option("--fn", eval_opt.fn, "one of cot, csc, tan, sec")
        ->required()
        ->check(CLI::IsMember(fn_names));
    eval_cmd->add_option("--n", eval_opt.n, "derivative order (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("--x", eval_opt.x, "evaluation point, rational \"p/q\"")
        ->required();
    eval_cmd->add_option("--format", eval_opt.format, "output format")
        ->check(CLI::IsMember(formats));
    eval_cmd->add_option("--digits", eval_opt.digits, "decimal significant digits")
        ->check(CLI::PositiveNumber);

    VerifyOptions verify_opt;
    auto* verify_cmd = app.add_subcommand(
        "verify", "sweep closed forms against the calculus oracle");
    verify_cmd->add_option("--max-n", verify_opt.max_n, "largest derivative order")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--max-q", verify_opt.max_q, "largest denominator")
        ->check(CLI::Range(2ul, 1000ul));
    verify_cmd->add_option("--precision", verify_opt.precision, "comparison bits")
        ->check(CLI::Range(128l, 100000l));
    verify_cmd->add_option("--format", verify_opt.format, "text or json")
        ->check(CLI::IsMember(std::vector<std::string>{"text", "json"}));

    TableOptions table_opt;
    auto* table_cmd =
        app.add_subcommand("table", "derivative table over n-range and x-list");
    table_cmd->add_option("--fn", table_opt.fn, "one of cot, csc, tan, sec")
        ->required()
        ->check(CLI::IsMember(fn_names));
    table_cmd->add_option("--n-min", table_opt.n_min, "first order")
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--n-max", table_opt.n_max, "last order")
        ->required()
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("--x", table_opt.xs, "evaluation points (repeatable)");
    table_cmd->add_option("--format", table_opt.format, "output format")
        ->check(CLI::IsMember(formats));
    table_cmd->add_option("--digits", table_opt.digits, "decimal digits in text rows")
        ->check(CLI::PositiveNumber);

    PolyOptions poly_opt;
    auto* poly_cmd =
        app.add_subcommand("poly", "print a bernoulli/euler/cyclotomic polynomial");
    poly_cmd->add_option("kind", poly_opt.kind, "bernoulli, euler, or cyclotomic")
        ->required()
        ->check(CLI::IsMember(
            std::vector<std::string>{"bernoulli", "euler", "cyclotomic"}));
    poly_cmd->add_option("n", poly_opt.n, "index")->required();

    IdentitiesOptions id_opt;
    auto* id_cmd = app.add_subcommand(
        "identities", "residuals of the series decompositions into Hurwitz sums");
    id_cmd->add_option("--s", id_opt.s_values, "s values (repeatable; default 2 3 4)");
    id_cmd->add_option("--max-q", id_opt.max_q, "largest denominator")
        ->check(CLI::Range(1ul, 64ul));
    id_cmd->add_option("--tol", id_opt.tol, "residual tolerance");

    try {
        app.parse(argc, argv);
        if (id_cmd->parsed() && !(id_opt.tol > 0)) {
            std::cerr << "error: --tol must be positive\n";
            return 1;
        }
        if (table_cmd->parsed() && table_opt.n_max < table_opt.n_min) {
            std::cerr << "error: --n-max must be >= --n-min\n";
            return 1;
        }
        if (eval_cmd->parsed()) return run_eval(eval_opt);
        if (verify_cmd->parsed()) return run_verify(verify_opt);
        if (table_cmd->parsed()) return run_table(table_opt);
        if (poly_cmd->parsed()) return run_poly(poly_opt);
        if (id_cmd->parsed()) return run_identities(id_opt);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // help exits 0; any usage problem exits 1
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
