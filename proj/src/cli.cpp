#include "almansi/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "almansi/almansi.hpp"
#include "almansi/integral.hpp"
#include "almansi/json_io.hpp"

namespace almansi {

namespace {

using nlohmann::json;

json check_to_json(const CheckResult& c) {
    return {{"name", c.name},
            {"status", c.pass ? "pass" : "fail"},
            {"residual", c.residual},
            {"tolerance", c.tolerance},
            {"details", c.details}};
}

json report_to_json(const Report& report) {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back(check_to_json(c));
    return {{"tool_version", report.tool_version},
            {"command", report.command},
            {"checks", checks},
            {"seed", report.seed},
            {"elapsed_ms", report.elapsed_ms}};
}

void print_text_report(const Report& report, std::ostream& out) {
    out << "almansi " << report.tool_version << " :: " << report.command << "\n";
    bool all = true;
    for (const auto& c : report.checks) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name
            << "  residual=" << c.residual << "  tolerance=" << c.tolerance << "\n";
        if (!c.details.empty()) out << "         " << c.details << "\n";
        all = all && c.pass;
    }
    out << (all ? "all checks passed" : "CHECKS FAILED") << " (" << report.elapsed_ms << " ms)\n";
}

bool all_pass(const Report& report) {
    for (const auto& c : report.checks)
        if (!c.pass) return false;
    return true;
}

json load_json_arg(const std::string& arg) {
    if (!arg.empty() && (arg.front() == '[' || arg.front() == '{')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot open file: " + arg);
    return json::parse(in);
}

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const int v = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad index list: " + s);
        out.push_back(v);
    }
    return out;
}

std::uint64_t resolve_seed(bool seed_given, std::uint64_t seed) {
    if (seed_given) return seed;
    if (const char* env = std::getenv("ALMANSI_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

std::string join_args(const std::vector<std::string>& args) {
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i) s += ' ';
        s += args[i];
    }
    return s;
}

int emit(Report& report, const std::string& format, std::ostream& out,
         std::chrono::steady_clock::time_point start, json extra = {}) {
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (format == "text") {
        print_text_report(report, out);
    } else {
        json doc = report_to_json(report);
        for (auto& [k, v] : extra.items()) doc[k] = v;
        out << doc.dump(2) << "\n";
    }
    return all_pass(report) ? 0 : 1;
}

QPoint random_probe(Rng& rng, int n) {
    QPoint x;
    for (int h = 0; h < n; ++h)
        x.coords.push_back(Quaternion::real(rng.uniform(-1.0, 1.0)) +
                           rng.random_unit_imaginary() * rng.uniform(0.1, 2.0));
    return x;
}

}  // namespace

std::string report_to_json_string(const Report& report) {
    return report_to_json(report).dump(2);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Almansi-type decompositions of quaternionic slice functions"};
    app.require_subcommand(1);

    // decompose
    std::string dec_input, dec_h, dec_format = "json";
    bool dec_ordered = false;
    std::uint64_t dec_seed = 0;
    auto* dec = app.add_subcommand("decompose", "decompose a polynomial and verify reconstruction");
    dec->add_option("--input", dec_input, "polynomial JSON file")->required();
    dec->add_option("--H", dec_h, "comma-separated variable list, e.g. 1,2")->required();
    dec->add_flag("--ordered", dec_ordered, "use pointwise ordered reconstruction");
    dec->add_option("--format", dec_format, "json|text")->check(CLI::IsMember({"json", "text"}));
    auto* dec_seed_opt = dec->add_option("--seed", dec_seed, "probe-point seed");

    // eval
    std::string ev_input, ev_point, ev_format = "json";
    auto* ev = app.add_subcommand("eval", "evaluate a polynomial at a point");
    ev->add_option("--input", ev_input, "polynomial JSON file")->required();
    ev->add_option("--point", ev_point, "point JSON (inline or file)")->required();
    ev->add_option("--format", ev_format, "json|text")->check(CLI::IsMember({"json", "text"}));

    // verify
    std::string vf_suite, vf_format = "json";
    long long vf_samples = 200000;
    std::uint64_t vf_seed = 0;
    double vf_tol = 0.0;
    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("--suite", vf_suite, "reconstruction|harmonicity|crf|fueter|meanvalue|poisson|all")
        ->required();
    vf->add_option("--samples", vf_samples, "Monte Carlo sample count");
    auto* vf_seed_opt = vf->add_option("--seed", vf_seed, "seed");
    auto* vf_tol_opt = vf->add_option("--tol", vf_tol, "tolerance override");
    vf->add_option("--format", vf_format, "json|text")->check(CLI::IsMember({"json", "text"}));

    // integrate
    std::string in_input, in_formula, in_center, in_radii, in_interior, in_format = "json";
    long long in_samples = 200000;
    std::uint64_t in_seed = 0;
    int in_m = 0;
    auto* integ = app.add_subcommand("integrate", "run one mean-value or Poisson formula");
    integ->add_option("--input", in_input, "polynomial JSON file")->required();
    integ->add_option("--formula", in_formula, "mv1|mv2|mvK|poisson1|poisson2")
        ->required()
        ->check(CLI::IsMember({"mv1", "mv2", "mvK", "poisson1", "poisson2"}));
    integ->add_option("--center", in_center, "center point JSON")->required();
    integ->add_option("--radii", in_radii, "radii JSON array")->required();
    integ->add_option("--m", in_m, "order (default: all variables)");
    integ->add_option("--interior", in_interior, "interior points JSON (Poisson; default 0)");
    integ->add_option("--samples", in_samples, "Monte Carlo sample count");
    auto* in_seed_opt = integ->add_option("--seed", in_seed, "seed");
    integ->add_option("--format", in_format, "json|text")->check(CLI::IsMember({"json", "text"}));

    std::vector<const char*> argv;
    argv.push_back("almansi");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.command = join_args(args);

    try {
        if (dec->parsed()) {
            report.seed = resolve_seed(dec_seed_opt->count() > 0, dec_seed);
            const QPolynomial poly = qpoly_from_json(load_json_arg(dec_input));
            const int n = poly.nvars();
            const auto members = parse_index_list(dec_h);
            for (int h : members) {
                if (h < 1 || h > n) {
                    err << "error: variable index out of range\n";
                    return 2;
                }
            }
            const IndexSet H = IndexSet::of(members, n);
            const auto mode = dec_ordered ? ReconstructMode::OrderedPointwise : ReconstructMode::Slice;
            if (dec_ordered && !H.is_interval()) {
                err << "error: --ordered requires H = {1,...,m}\n";
                return 2;
            }
            const SliceFunction f = slice_from_polynomial(poly);
            const auto decomposition = almansi_decompose(f, H);

            Rng rng(report.seed);
            CheckResult check;
            check.name = "reconstruction";
            check.tolerance = 1e-9;
            for (int pt = 0; pt < 20; ++pt) {
                const QPoint x = random_probe(rng, n);
                const Quaternion want = f(x);
                const Quaternion got = almansi_reconstruct(decomposition, x, mode);
                check.residual = std::fmax(
                    check.residual, (got - want).norm() / std::fmax(1.0, want.norm()));
            }
            check.pass = check.residual <= check.tolerance;
            check.details = "20 probe points";
            report.checks.push_back(check);
            const json dec_json = decomposition_to_json(decomposition);
            if (dec_format == "text") {
                out << "decomposition over H = " << H.to_string() << "\n";
                for (const auto& [k, repr] : dec_json.at("components").items())
                    out << "  K mask " << k << ": " << repr.get<std::string>() << "\n";
            }
            return emit(report, dec_format, out, start, json{{"decomposition", dec_json}});
        }

        if (ev->parsed()) {
            const QPolynomial poly = qpoly_from_json(load_json_arg(ev_input));
            const QPoint x = qpoint_from_json(load_json_arg(ev_point));
            const Quaternion v = poly.eval(x);
            if (ev_format == "text") {
                out << v << "\n";
            } else {
                out << json{{"tool_version", kToolVersion}, {"value", quaternion_to_json(v)}}.dump(2)
                    << "\n";
            }
            return 0;
        }

        if (vf->parsed()) {
            if (!is_suite_name(vf_suite)) {
                err << "error: unknown suite: " << vf_suite << "\n";
                return 2;
            }
            VerifyConfig cfg;
            cfg.seed = resolve_seed(vf_seed_opt->count() > 0, vf_seed);
            cfg.samples = vf_samples;
            if (vf_tol_opt->count() > 0) cfg.tol_override = vf_tol;
            report.seed = cfg.seed;
            report.checks = run_suite(vf_suite, cfg);
            return emit(report, vf_format, out, start);
        }

        if (integ->parsed()) {
            const QPolynomial poly = qpoly_from_json(load_json_arg(in_input));
            const int n = poly.nvars();
            const QPoint center = qpoint_from_json(load_json_arg(in_center));
            const auto radii = load_json_arg(in_radii).get<std::vector<double>>();
            const int m = (in_m > 0) ? in_m : n;
            report.seed = resolve_seed(in_seed_opt->count() > 0, in_seed);

            std::vector<Quaternion> interior(static_cast<std::size_t>(n), Quaternion{});
            if (!in_interior.empty()) {
                const json j = load_json_arg(in_interior);
                interior.clear();
                for (const auto& e : j) interior.push_back(quaternion_from_json(e));
            }

            FormulaCheck fc;
            if (in_formula == "mv1")
                fc = mean_value_check(poly, center, radii, m, MeanValueFormula::First, in_samples,
                                      report.seed);
            else if (in_formula == "mv2")
                fc = mean_value_check(poly, center, radii, m, MeanValueFormula::Second, in_samples,
                                      report.seed);
            else if (in_formula == "mvK")
                fc = mean_value_check(poly, center, radii, m, MeanValueFormula::Components,
                                      in_samples, report.seed);
            else if (in_formula == "poisson1")
                fc = poisson_check(poly, center, radii, interior, m, PoissonFormula::First,
                                   in_samples, report.seed);
            else
                fc = poisson_check(poly, center, radii, interior, m, PoissonFormula::Second,
                                   in_samples, report.seed);

            CheckResult check;
            check.name = in_formula;
            check.residual = (fc.lhs - fc.rhs.value).max_abs();
            check.tolerance = std::fmax(3.0 * fc.rhs.stderr_est, 1e-3);
            check.pass = check.residual <= check.tolerance;
            {
                std::ostringstream d;
                d << "statistical acceptance at max(3*stderr, 1e-3); lhs=" << fc.lhs
                  << " estimate=" << fc.rhs.value << " stderr=" << fc.rhs.stderr_est;
                check.details = d.str();
            }
            report.checks.push_back(check);

            const json estimate = {{"lhs", quaternion_to_json(fc.lhs)},
                                   {"value", quaternion_to_json(fc.rhs.value)},
                                   {"stderr", fc.rhs.stderr_est},
                                   {"samples", fc.rhs.samples},
                                   {"seed", fc.rhs.seed}};
            return emit(report, in_format, out, start, json{{"estimate", estimate}});
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no subcommand\n";
    return 2;
}

}  // namespace almansi
