// wignerlab: scenario configuration, figure-data reproduction, validation
// sweeps and CSV/JSON emission for boosted two-spin Werner states.
//
// Subcommands: twr | orbit | window | validate. Exit codes: 0 success,
// 2 usage/config error, 3 validation or oracle failure.

#include "wignerlab/boost_map.hpp"
#include "wignerlab/entanglement_geometry.hpp"
#include "wignerlab/io.hpp"
#include "wignerlab/lorentz.hpp"
#include "wignerlab/validate.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace wignerlab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr double kOrbitOracleTol = 1e-10;
constexpr double kWindowAgreementTol = 1e-6;

MomentumFamily parse_family(const std::string& s) {
    if (s == "eprb") return MomentumFamily::EPRB;
    if (s == "sigma") return MomentumFamily::Sigma;
    if (s == "cross") return MomentumFamily::Cross;
    if (s == "phi+") return MomentumFamily::PhiPlus;
    if (s == "psi+") return MomentumFamily::PsiPlus;
    if (s == "phi+perp") return MomentumFamily::PhiPlusPerp;
    if (s == "psi+perp") return MomentumFamily::PsiPlusPerp;
    throw std::invalid_argument("unknown family: " + s);
}

RotationKind parse_kind(const std::string& s) {
    if (s == "single") return RotationKind::Single;
    if (s == "same") return RotationKind::SameAxis;
    if (s == "mixed") return RotationKind::MixedAxes;
    throw std::invalid_argument("unknown rotation type: " + s);
}

Axis parse_axis(const std::string& s) {
    if (s == "x") return Axis::X;
    if (s == "y") return Axis::Y;
    if (s == "z") return Axis::Z;
    throw std::invalid_argument("unknown axis: " + s);
}

struct CommonOpts {
    std::string family = "sigma";
    std::string type = "single";
    std::string axis1 = "x";
    std::string axis2 = "y";
    double lambda = 1.0;
    long long grid = 361;
    std::string format = "csv";
    std::string out;
    std::string config;
    bool degrees = false;
    bool grid_set = false;
    double chi_ratio = 1.0;
    double v1 = 0.8;
    double v2 = 0.8;
    std::vector<double> lambdas;
    double perturb_closed_form = 0.0;
};

/// Values resolve as: library default < JSON manifest < explicit flag.
void apply_manifest(const CommonOpts& defaults, CommonOpts& o, CLI::App* sub) {
    if (o.config.empty())
        return;
    std::ifstream f(o.config);
    if (!f)
        throw std::invalid_argument("cannot open config file: " + o.config);
    json j = json::parse(f);

    auto unset = [&](const std::string& flag) {
        const CLI::Option* opt = sub->get_option_no_throw(flag);
        return opt == nullptr || opt->count() == 0;
    };
    auto fill_str = [&](const char* key, const std::string& flag, std::string& var) {
        if (j.contains(key) && unset(flag))
            var = j.at(key).get<std::string>();
    };
    auto fill_num = [&](const char* key, const std::string& flag, double& var) {
        if (j.contains(key) && unset(flag))
            var = j.at(key).get<double>();
    };
    (void)defaults;
    fill_str("family", "--family", o.family);
    fill_str("type", "--type", o.type);
    fill_str("axis1", "--axis1", o.axis1);
    fill_str("axis2", "--axis2", o.axis2);
    fill_str("format", "--format", o.format);
    fill_str("out", "--out", o.out);
    fill_num("lambda", "--lambda", o.lambda);
    fill_num("v1", "--v1", o.v1);
    fill_num("v2", "--v2", o.v2);
    fill_num("chi_ratio", "--chi-ratio", o.chi_ratio);
    if (j.contains("grid") && unset("--grid")) {
        o.grid = j.at("grid").get<long long>();
        o.grid_set = true;
    }
    if (j.contains("degrees") && unset("--degrees"))
        o.degrees = j.at("degrees").get<bool>();
    if (j.contains("lambdas") && unset("--lambda")) {
        o.lambdas.clear();
        for (const auto& v : j.at("lambdas"))
            o.lambdas.push_back(v.get<double>());
    }
}

void emit(const Table& table, const std::string& format, const std::string& out) {
    const std::string body = render(table, format);
    if (out.empty())
        std::cout << body;
    else
        write_file(out, body);
}

double display_angle(double rad, bool degrees) { return degrees ? rad * 180.0 / pi : rad; }

int cmd_twr(const CommonOpts& o) {
    if (o.grid < 2)
        throw std::invalid_argument("twr: --grid must be at least 2");
    Table table;
    table.subcommand = "twr";
    table.params = {{"v1", o.v1}, {"v2", o.v2}, {"grid", o.grid}};
    table.columns = {"theta", "omega"};
    double peak = 0.0;
    for (long long k = 0; k < o.grid; ++k) {
        const double theta = pi * static_cast<double>(k) / static_cast<double>(o.grid - 1);
        const double omega = twr_angle(BoostConfig(o.v1, o.v2, theta));
        peak = std::max(peak, omega);
        table.rows.push_back({theta, omega});
    }
    emit(table, o.format, o.out);
    std::cerr << "twr: " << table.rows.size() << " rows, max omega = "
              << display_angle(peak, o.degrees) << (o.degrees ? " deg" : " rad") << "\n";
    return kExitOk;
}

int cmd_orbit(const CommonOpts& o) {
    if (o.grid < 2)
        throw std::invalid_argument("orbit: --grid must be at least 2");
    const MomentumFamily family = parse_family(o.family);
    const RotationType type(parse_kind(o.type), parse_axis(o.axis1), parse_axis(o.axis2));
    const ScenarioConfig config(family, type, o.lambda, o.chi_ratio);
    const Orbit orb = orbit(config, omega_grid(static_cast<std::size_t>(o.grid)));
    const bool has_t_oracle = closed_form_t_supported(family) && o.chi_ratio == 1.0;
    const bool has_c_oracle = o.chi_ratio == 1.0;

    Table table;
    table.subcommand = "orbit";
    table.params = {{"family", o.family},
                    {"type", o.type},
                    {"axis1", o.axis1},
                    {"axis2", o.axis2},
                    {"lambda", o.lambda},
                    {"chi_ratio", o.chi_ratio},
                    {"grid", o.grid}};
    if (orb.bell_diagonal)
        table.columns = {"omega", "t_xx", "t_yy", "t_zz", "c_numeric", "c_closed_form", "abs_dc"};
    else
        table.columns = {"omega", "t_xx", "t_xy", "t_xz", "t_yx", "t_yy", "t_yz",
                         "t_zx",  "t_zy", "t_zz", "c_numeric", "c_closed_form", "abs_dc"};

    double max_dc = 0.0, max_dt = 0.0;
    for (const OrbitPoint& p : orb.points) {
        const double c_closed =
            has_c_oracle ? closed_form_concurrence(family, type, p.omega, o.lambda)
                         : std::numeric_limits<double>::quiet_NaN();
        const double dc = has_c_oracle ? std::abs(p.concurrence - c_closed)
                                       : std::numeric_limits<double>::quiet_NaN();
        if (has_c_oracle)
            max_dc = std::max(max_dc, dc);
        if (has_t_oracle)
            max_dt = std::max(max_dt, (p.tensor.t - closed_form_t(family, type, p.omega, o.lambda))
                                          .cwiseAbs()
                                          .maxCoeff());
        const Mat3& t = p.tensor.t;
        if (orb.bell_diagonal)
            table.rows.push_back(
                {p.omega, t(0, 0), t(1, 1), t(2, 2), p.concurrence, c_closed, dc});
        else
            table.rows.push_back({p.omega, t(0, 0), t(0, 1), t(0, 2), t(1, 0), t(1, 1), t(1, 2),
                                  t(2, 0), t(2, 1), t(2, 2), p.concurrence, c_closed, dc});
    }
    emit(table, o.format, o.out);
    std::cerr << "orbit " << scenario_label(family, type) << " lambda=" << o.lambda << ": "
              << table.rows.size() << " rows";
    if (has_c_oracle)
        std::cerr << ", max |dC| = " << max_dc
                  << (has_t_oracle ? ", max |dt| = " + format_double(max_dt) : std::string());
    std::cerr << "\n";

    if ((has_c_oracle && max_dc > kOrbitOracleTol) || (has_t_oracle && max_dt > kOrbitOracleTol)) {
        std::cerr << "orbit: closed-form oracle mismatch above " << kOrbitOracleTol << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_window(const CommonOpts& o) {
    const MomentumFamily family = parse_family(o.family);
    const RotationType type(parse_kind(o.type), parse_axis(o.axis1), parse_axis(o.axis2));

    std::vector<double> lambdas = o.lambdas;
    if (lambdas.empty()) {
        if (o.grid_set) {  // an explicit --grid requests a uniform lambda grid
            if (o.grid < 2)
                throw std::invalid_argument("window: --grid must be at least 2");
            for (long long k = 0; k < o.grid; ++k)
                lambdas.push_back(static_cast<double>(k) / static_cast<double>(o.grid - 1));
        } else {
            lambdas = {1.0 / 3.0, 0.4, 0.6, 0.8, 1.0};
        }
    }

    Table table;
    table.subcommand = "window";
    table.params = {{"family", o.family},
                    {"type", o.type},
                    {"axis1", o.axis1},
                    {"axis2", o.axis2}};
    table.columns = {"lambda", "omega_lo", "omega_hi"};

    double worst = 0.0;
    for (double lam : lambdas) {
        const SeparabilityWindow a = separability_window(family, type, lam);
        const SeparabilityWindow n = separability_window_numeric(family, type, lam);
        if (a.empty != n.empty)
            worst = std::max(worst, 1.0);
        else if (!a.empty)
            worst = std::max({worst, std::abs(a.lo - n.lo), std::abs(a.hi - n.hi)});
        const double nan = std::numeric_limits<double>::quiet_NaN();
        table.rows.push_back({lam, a.empty ? nan : a.lo, a.empty ? nan : a.hi});
        if (!a.empty)
            std::cerr << "window lambda=" << lam << ": [" << display_angle(a.lo, o.degrees)
                      << ", " << display_angle(a.hi, o.degrees) << "]"
                      << (o.degrees ? " deg" : " rad") << "\n";
        else
            std::cerr << "window lambda=" << lam << ": none\n";
    }
    emit(table, o.format, o.out);
    if (worst > kWindowAgreementTol) {
        std::cerr << "window: analytic and bisection roots disagree by " << worst << "\n";
        return kExitValidation;
    }
    return kExitOk;
}

int cmd_validate(const CommonOpts& o) {
    ValidationOptions vopt;
    vopt.closed_form_perturbation = o.perturb_closed_form;
    const ValidationReport rep = run_validation(vopt);
    for (const CheckResult& c : rep.checks)
        std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << c.name
                  << " (max_error = " << c.max_error << ", tolerance = " << c.tolerance << ")"
                  << (c.detail.empty() ? "" : " - " + c.detail) << "\n";
    const std::string body = report_to_json(rep);
    if (o.out.empty())
        std::cout << body;
    else
        write_file(o.out, body);
    if (!rep.all_passed()) {
        std::cerr << "validate: " << rep.failing_names().size() << " check(s) failed\n";
        return kExitValidation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"wignerlab: spin orbits and concurrence of boosted two-particle Werner states"};
    app.require_subcommand(1);

    CommonOpts opts;
    const CommonOpts defaults = opts;

    auto add_common = [&](CLI::App* sub, bool scenario_flags) {
        sub->add_option("--config", opts.config, "JSON manifest mirroring the flags; flags win");
        sub->add_option("--format", opts.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", opts.out, "Output path (stdout when omitted)");
        sub->add_flag("--degrees", opts.degrees,
                      "Show angles in degrees in the human-readable summary (machine output "
                      "stays in radians)");
        if (scenario_flags) {
            sub->add_option("--family", opts.family, "Momentum family")
                ->check(CLI::IsMember({"eprb", "sigma", "cross", "phi+", "psi+", "phi+perp",
                                       "psi+perp"}));
            sub->add_option("--type", opts.type, "Rotation type")
                ->check(CLI::IsMember({"single", "same", "mixed"}));
            sub->add_option("--axis1", opts.axis1, "Rotation axis, particle 1")
                ->check(CLI::IsMember({"x", "y", "z"}));
            sub->add_option("--axis2", opts.axis2, "Rotation axis, particle 2 (mixed/cross)")
                ->check(CLI::IsMember({"x", "y", "z"}));
        }
    };

    CLI::App* twr = app.add_subcommand("twr", "Thomas-Wigner angle over a theta grid");
    add_common(twr, false);
    twr->add_option("--v1", opts.v1, "Speed of the first boost, in [0,1)");
    twr->add_option("--v2", opts.v2, "Speed of the second boost, in [0,1)");
    twr->add_option("--grid", opts.grid, "Number of theta samples on [0, pi]");

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "Spin orbit and concurrence over omega");
    add_common(orbit_cmd, true);
    orbit_cmd->add_option("--lambda", opts.lambda, "Werner parameter in [0,1]");
    orbit_cmd->add_option("--grid", opts.grid, "Number of omega samples on [0, pi]");
    orbit_cmd->add_option("--chi-ratio", opts.chi_ratio,
                          "Second-particle angle as a multiple of omega (exploration; closed "
                          "forms assume 1)");

    CLI::App* window_cmd = app.add_subcommand("window", "Separability window per lambda");
    add_common(window_cmd, true);
    window_cmd
        ->add_option("--lambda", opts.lambdas,
                     "Werner parameter(s); repeatable. Default {1/3, 2/5, 3/5, 4/5, 1}")
        ->expected(-1);
    window_cmd->add_option("--grid", opts.grid, "Uniform lambda grid size on [0, 1] instead");

    CLI::App* validate_cmd = app.add_subcommand("validate", "Run the oracle/invariant suite");
    add_common(validate_cmd, false);
    validate_cmd->add_option("--perturb-closed-form", opts.perturb_closed_form,
                             "Test fixture: offset closed-form concurrences to force a failure");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (const CLI::Option* g = sub->get_option_no_throw("--grid"); g && g->count() > 0)
            opts.grid_set = true;
        apply_manifest(defaults, opts, sub);
        if (sub == twr)
            return cmd_twr(opts);
        if (sub == orbit_cmd)
            return cmd_orbit(opts);
        if (sub == window_cmd)
            return cmd_window(opts);
        return cmd_validate(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
