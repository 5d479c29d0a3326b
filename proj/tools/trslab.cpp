// trslab: twisted Reed-Solomon deep-hole laboratory.
//
// Exit codes: 0 success (verify: every report PASS, SKIPPED or
// OUTSIDE-PROVED-RANGE), 1 a FAIL report, 2 usage error, 3 budget refusal
// outside verify.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trslab/char_sums.hpp"
#include "trslab/checks.hpp"
#include "trslab/codes.hpp"
#include "trslab/deep_holes.hpp"
#include "trslab/field.hpp"
#include "trslab/projective.hpp"
#include "trslab/report.hpp"

namespace {

using namespace trslab;

constexpr int kUsageError = 2;
constexpr int kBudgetRefused = 3;

std::vector<Elem> parse_vector(const Field& f, const std::string& text) {
    std::vector<Elem> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        std::size_t used = 0;
        const unsigned long v = std::stoul(item, &used);
        if (used != item.size() || v >= f.q()) throw std::invalid_argument("bad element index '" + item + "'");
        out.push_back(Elem{static_cast<std::uint32_t>(v)});
    }
    return out;
}

std::string join(std::span<const Elem> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i].v);
    }
    return out + ")";
}

std::string complex_str(Complex z) {
    std::ostringstream os;
    os.precision(10);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

Budget budget_from(std::optional<std::uint64_t> max_ops) {
    Budget b = Budget::from_env();
    if (max_ops) b.max_ops = *max_ops;
    return b;
}

int cmd_field(const std::string& spec) {
    const Field f = Field::parse(spec);
    std::cout << "field      " << f.descriptor() << "\n"
              << "p, m, q    " << f.p() << ", " << f.m() << ", " << f.q() << "\n"
              << "primitive  " << f.primitive().v << "\n";
    return 0;
}

int cmd_code(const std::string& desc, const std::string& what, std::optional<std::uint64_t> max_ops) {
    const auto code = TwistedRSCode::parse(desc);
    const Budget budget = budget_from(max_ops);
    std::cout << code.descriptor() << "  n=" << code.n() << " k=" << code.k()
              << (code.parity_check_derived() ? "  (parity check derived)" : "") << "\n";
    if (what == "radius") {
        std::cout << "covering radius " << covering_radius(code, budget) << "\n";
    } else {
        std::cout << "minimum distance " << min_distance(code, budget) << "\n";
    }
    return 0;
}

int cmd_deepholes_test(const std::string& desc, const std::string& syndrome, std::optional<std::uint64_t> max_ops) {
    const auto code = TwistedRSCode::parse(desc);
    const auto w = parse_vector(code.field(), syndrome);
    if (w.size() != code.r()) throw std::invalid_argument("syndrome must have n - k entries");
    const auto v = is_deep_hole(code, w, budget_from(max_ops));
    std::cout << join(w) << (v.is_deep_hole ? " is a deep-hole syndrome" : " is not a deep-hole syndrome") << "\n";
    if (v.witness) std::cout << "vanishing points " << join(*v.witness) << "\n";
    std::cout << "method " << to_string(v.method) << "\n";
    return 0;
}

int cmd_deepholes_enumerate(const std::string& desc, std::optional<std::uint64_t> max_ops, unsigned jobs) {
    const auto code = TwistedRSCode::parse(desc);
    const auto en = enumerate_deep_holes(code, budget_from(max_ops), jobs);
    std::cout << en.classes.size() << " deep-hole classes of " << en.classes_scanned << "\n";
    for (const auto& c : en.classes) std::cout << join(c) << "\n";
    return 0;
}

struct CharsumArgs {
    std::string field;
    std::uint32_t a = 1, b = 1, a0 = 0, a1 = 0, a2 = 1;
    std::uint64_t psi = 1;
};

int cmd_charsum(const std::string& kind, const CharsumArgs& args) {
    const Field f = Field::parse(args.field);
    auto el = [&](std::uint32_t i) {
        if (i >= f.q()) throw std::invalid_argument("element index out of range");
        return Elem{i};
    };
    if (kind == "gauss") {
        const Complex g = gauss_sum(f, args.psi, el(args.b));
        std::cout << "G = " << complex_str(g) << "  |G| = " << std::abs(g) << "  sqrt(q) = " << std::sqrt(f.q())
                  << "\n";
    } else if (kind == "quadratic") {
        const Elem b = el(args.b), a2 = el(args.a2), a1 = el(args.a1), a0 = el(args.a0);
        const Complex closed = f.even() ? quadratic_sum_closed_even(f, b, a2, a1, a0)
                                        : quadratic_sum_closed_odd(f, a2, a1, a0);
        std::cout << "closed " << complex_str(closed) << "\nbrute  "
                  << complex_str(quadratic_sum(f, f.even() ? b : f.one(), a2, a1, a0)) << "\n";
    } else if (kind == "quadric") {
        std::cout << "closed " << count_quadric(f, el(args.a1), el(args.a2), el(args.b)) << "\nbrute  "
                  << count_quadric_brute(f, el(args.a1), el(args.a2), el(args.b)) << "\n";
    } else if (kind == "cubic") {
        std::cout << "closed " << complex_str(cubic_sum(f, el(args.a))) << "\nbrute  "
                  << complex_str(cubic_sum_brute(f, el(args.a))) << "\n";
    } else if (kind == "surface-cubic") {
        std::cout << "closed " << count_surface_cubic(f, el(args.a)) << "\nbrute  "
                  << count_surface_cubic_brute(f, el(args.a)) << "\n";
    } else if (kind == "fermat-cubic") {
        const auto res = count_fermat_cubic(f, el(args.b));
        std::cout << "count " << res.count << "  lower bound " << res.lower_bound << "\n";
        if (res.nonzero_representation) {
            std::cout << "nonzero cubes " << res.nonzero_representation->first.v << ", "
                      << res.nonzero_representation->second.v << "\n";
        }
    } else {
        throw std::invalid_argument("unknown sum '" + kind + "'");
    }
    return 0;
}

struct VerifyArgs {
    std::string check;
    std::string filter = "*";
    std::string format = "text";
    std::string output;
    unsigned jobs = 1;
    std::optional<std::uint64_t> max_ops;
    std::optional<double> max_seconds;
    CheckPoint point;
    std::optional<std::size_t> k, r, s, n;
    std::optional<std::uint32_t> theta;
};

int cmd_verify(VerifyArgs& args) {
    const Format format = parse_format(args.format);
    RunOptions options;
    options.budget = budget_from(args.max_ops);
    options.max_seconds = args.max_seconds;
    options.jobs = std::max(1u, args.jobs);

    std::vector<VerificationReport> reports;
    if (!args.check.empty() && !args.point.field.empty()) {
        auto& p = args.point;
        p.k = args.k;
        p.r = args.r;
        p.s = args.s;
        p.n = args.n;
        p.theta = args.theta;
        reports.push_back(run_check(args.check, p, options));
    } else {
        if (!args.check.empty() && !find_check(args.check)) {
            throw std::invalid_argument("unknown check '" + args.check + "'");
        }
        reports = run_suite(args.check.empty() ? args.filter : args.check, options);
        if (reports.empty()) std::cerr << "warning: no check matches '" << args.filter << "'\n";
    }

    const std::string text = reports.size() == 1 && format == Format::kJson ? emit(reports.front(), format)
                                                                            : emit_all(reports, format);
    if (args.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(args.output);
        if (!out) throw std::invalid_argument("cannot write " + args.output);
        out << text;
    }
    return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Twisted Reed-Solomon deep-hole laboratory"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    std::string field_spec;
    auto* field = app.add_subcommand("field", "describe a finite field, e.g. 2^4, 2^3/1101, 17");
    field->add_option("spec", field_spec, "field descriptor")->required();

    std::string code_desc, code_what;
    std::optional<std::uint64_t> max_ops;
    auto* code = app.add_subcommand("code", "covering radius or minimum distance of a code");
    code->add_option("descriptor", code_desc, "trs:q=8:k=5:theta=1:A=full")->required();
    code->add_option("quantity", code_what, "radius or mindist")
        ->required()
        ->check(CLI::IsMember({"radius", "mindist"}));
    code->add_option("--max-ops", max_ops, "operation cap");

    std::string dh_desc, syndrome;
    unsigned dh_jobs = 1;
    auto* deep = app.add_subcommand("deepholes", "deep-hole test or enumeration for a full-length code");
    deep->add_option("descriptor", dh_desc, "code descriptor")->required();
    deep->add_option("--max-ops", max_ops, "operation cap");
    deep->require_subcommand(1);
    auto* test = deep->add_subcommand("test", "test one syndrome");
    test->add_option("--syndrome", syndrome, "comma-separated element indices")->required();
    auto* enumerate = deep->add_subcommand("enumerate", "list every deep-hole syndrome class");
    enumerate->add_option("--jobs", dh_jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string sum_kind;
    CharsumArgs sum;
    auto* charsum = app.add_subcommand("charsum", "closed form against enumeration for one character sum");
    charsum->add_option("kind", sum_kind, "gauss, quadratic, quadric, cubic, surface-cubic, fermat-cubic")
        ->required()
        ->check(CLI::IsMember({"gauss", "quadratic", "quadric", "cubic", "surface-cubic", "fermat-cubic"}));
    charsum->add_option("--field", sum.field, "field descriptor")->required();
    charsum->add_option("-a", sum.a, "element index");
    charsum->add_option("-b", sum.b, "element index");
    charsum->add_option("--a0", sum.a0, "constant coefficient");
    charsum->add_option("--a1", sum.a1, "linear coefficient");
    charsum->add_option("--a2", sum.a2, "quadratic coefficient");
    charsum->add_option("--psi", sum.psi, "multiplicative character index");

    VerifyArgs v;
    auto* verify = app.add_subcommand("verify", "run registered checks and report");
    auto* check_opt = verify->add_option("--check", v.check, "check id");
    verify->add_option("--filter", v.filter, "glob over id or group.id")->excludes(check_opt);
    verify->add_option("--format", v.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--jobs", v.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--max-ops", v.max_ops, "operation cap per search");
    verify->add_option("--max-seconds", v.max_seconds, "wall-clock cap per check")->check(CLI::PositiveNumber);
    verify->add_option("--output", v.output, "write the report here");
    auto* fopt = verify->add_option("--field", v.point.field, "single point: field descriptor")->needs(check_opt);
    verify->add_option("--k", v.k, "dimension")->needs(fopt);
    verify->add_option("--theta", v.theta, "twist index")->needs(fopt);
    verify->add_option("--r", v.r, "redundancy")->needs(fopt);
    verify->add_option("--s", v.s, "RS dimension")->needs(fopt);
    verify->add_option("--n", v.n, "tuple length")->needs(fopt);
    verify->add_option("--sets", v.point.sets, "random evaluation sets")->needs(fopt);
    verify->add_option("--trials", v.point.trials, "random trials")->needs(fopt);
    verify->add_flag("--exhaustive", v.point.exhaustive, "exhaustive identity scan")->needs(fopt);
    verify->add_option("--seed", v.point.seed, "random seed")->needs(fopt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsageError;
    }

    try {
        if (*field) return cmd_field(field_spec);
        if (*code) return cmd_code(code_desc, code_what, max_ops);
        if (*test) return cmd_deepholes_test(dh_desc, syndrome, max_ops);
        if (*enumerate) return cmd_deepholes_enumerate(dh_desc, max_ops, dh_jobs);
        if (*charsum) return cmd_charsum(sum_kind, sum);
        if (*verify) return cmd_verify(v);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kBudgetRefused;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsageError;
}
