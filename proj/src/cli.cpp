#include "bohr/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "bohr/bohrsum.hpp"
#include "bohr/extremal.hpp"
#include "bohr/harness.hpp"
#include "bohr/harmonic.hpp"
#include "bohr/radii.hpp"
#include "bohr/scalar_solve.hpp"

namespace bohr::cli {

namespace {

// All floating-point output carries 9 significant digits.
std::string fmt9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

struct RunConfig {
    std::vector<std::string> K_list{"1"};
    int p = 2;
    int order = default_order;
    double tol = 1e-12;
    std::uint64_t seed = 7;
    int count = 1000;
    std::string format = "csv";
    std::string out_path;
    std::vector<std::string> spec_list;
    std::string family;
    std::vector<std::string> a_list;

    void validate() const {
        if (!(tol > 0.0)) throw CLI::ValidationError("--tol must be > 0");
        if (order < 16) throw CLI::ValidationError("--order must be >= 16");
        if (count < 1) throw CLI::ValidationError("--count must be >= 1");
        if (p < 2) throw CLI::ValidationError("--p must be >= 2");
    }
};

KParam parse_K(const std::string& s) {
    if (s == "inf") return KParam::limit();
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size() && v >= 1.0) return KParam::finite(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("invalid K value '" + s + "' (need a number >= 1 or 'inf')");
}

const std::vector<SpecId> all_spec_ids = {
    SpecId::thm1,       SpecId::thm2,       SpecId::thm3,      SpecId::cor1a,
    SpecId::cor1b,      SpecId::cor2,       SpecId::thm4,      SpecId::thm5,
    SpecId::thm6_lower, SpecId::thm6_upper, SpecId::cor3_lower, SpecId::cor3_upper,
    SpecId::rem1_lower, SpecId::rem1_upper, SpecId::thm7,      SpecId::thm8_lower,
    SpecId::thm8_upper, SpecId::thm9_lower, SpecId::conj1,
};

std::string json_K(const KParam& K) {
    return K.is_limit ? std::string("\"inf\"") : fmt9(K.value);
}

int cmd_radii(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<KParam> Ks;
    for (const auto& s : cfg.K_list) Ks.push_back(parse_K(s));

    std::vector<SpecId> ids;
    if (cfg.spec_list.empty()) {
        ids = all_spec_ids;
    } else {
        for (const auto& name : cfg.spec_list) {
            const auto id = parse_spec_id(name);
            if (!id) throw std::invalid_argument("unknown spec '" + name + "'");
            ids.push_back(*id);
        }
    }

    struct Row {
        RadiusSpec spec;
        RootResult root;
    };
    std::vector<Row> rows;
    for (SpecId id : ids) {
        RadiusSpec spec{id, Ks.front(), cfg.p};
        const bool parametric = spec.uses_K();
        for (std::size_t i = 0; i < (parametric ? Ks.size() : 1); ++i) {
            spec.K = Ks[i];
            try {
                rows.push_back({spec, radius_of(spec, cfg.tol)});
            } catch (const std::exception& e) {
                err << "radii: " << spec.name() << ": " << e.what() << "\n";
                return 2;
            }
        }
    }

    std::ostringstream body;
    if (cfg.format == "json") {
        body << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& [spec, root] = rows[i];
            body << "  {\"spec\": \"" << spec.name() << "\", \"K\": " << json_K(spec.K)
                 << ", \"value\": " << fmt9(root.value) << ", \"bracket\": ["
                 << fmt9(root.lo) << ", " << fmt9(root.hi) << "], \"residual\": "
                 << fmt9(root.residual) << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
        }
        body << "]\n";
    } else {
        body << "spec,K,value,kind,bracket_lo,bracket_hi,residual,iterations\n";
        for (const auto& [spec, root] : rows) {
            const char* kind = spec.kind() == SpecKind::closed_form        ? "closed_form"
                               : spec.kind() == SpecKind::transcendental_root ? "transcendental_root"
                                                                              : "optimization";
            body << spec.name() << "," << spec.K.str() << "," << fmt9(root.value) << "," << kind
                 << "," << fmt9(root.lo) << "," << fmt9(root.hi) << "," << fmt9(root.residual)
                 << "," << root.iterations << "\n";
        }
    }

    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path);
        if (!f) {
            err << "radii: cannot open output file " << cfg.out_path << "\n";
            return 2;
        }
        f << body.str();
    } else {
        out << body.str();
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    bool ok = true;
    const int n_qc = cfg.count;
    const int n_bounded = cfg.count;
    const int n_half = cfg.count / 2;
    const int n_psym = cfg.count / 2;
    const int n_bracket = std::max(20, cfg.count / 5);

    const std::vector<double> r_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const std::vector<double> r_grid_lemma2 = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};

    { // squared-coefficient law on qc instances: sum |b_n|^2 r^n <= k^2 sum |a_n|^2 r^n
        const double k = QcParams::from_K(2.0).k;
        int pass = 0;
        for (int i = 0; i < n_qc; ++i) {
            const HarmonicMap f = generate_instance(cfg.seed + static_cast<std::uint64_t>(i),
                                                    InstanceProfile::qc(2.0), cfg.order);
            if (check_lemma1(f.h(), f.g(), k, r_grid)) ++pass;
        }
        out << "lemma1: " << pass << "/" << n_qc << " pass\n";
        ok = ok && pass == n_qc;
    }

    { // |a_n| <= 1 - |a_0|^2 for sup-norm-1 instances
        int pass = 0;
        for (int i = 0; i < n_bounded; ++i) {
            const HarmonicMap f = generate_instance(cfg.seed + static_cast<std::uint64_t>(i),
                                                    InstanceProfile::bounded(), cfg.order);
            if (check_coefficient_bounds(f.h(), CoeffBoundProfile::bounded)) ++pass;
        }
        out << "coeff-bounds bounded: " << pass << "/" << n_bounded << " pass\n";
        ok = ok && pass == n_bounded;
    }

    { // |a_n| <= 2 (1 - a_0) for Re h <= 1 instances
        int pass = 0;
        for (int i = 0; i < n_half; ++i) {
            const HarmonicMap f = generate_instance(cfg.seed + static_cast<std::uint64_t>(i),
                                                    InstanceProfile::halfplane(), cfg.order);
            if (check_coefficient_bounds(f.h(), CoeffBoundProfile::halfplane)) ++pass;
        }
        out << "coeff-bounds halfplane: " << pass << "/" << n_half << " pass\n";
        ok = ok && pass == n_half;
    }

    { // p-symmetric branch bounds, selected exactly as stated
        int pass = 0;
        for (int i = 0; i < n_psym; ++i) {
            const HarmonicMap f = generate_instance(cfg.seed + static_cast<std::uint64_t>(i),
                                                    InstanceProfile::psymmetric(cfg.p), cfg.order);
            if (check_lemma2(f.h(), cfg.p, r_grid_lemma2)) ++pass;
        }
        out << "lemma2 psymmetric(p=" << cfg.p << "): " << pass << "/" << n_psym << " pass\n";
        ok = ok && pass == n_psym;
    }

    { // circle quadrature vs coefficient sums (Parseval consistency)
        std::mt19937_64 gen(cfg.seed ^ 0x9e3779b97f4a7c15ull);
        auto unit = [&]() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
        int pass = 0;
        double worst = 0.0;
        constexpr int n_series = 100;
        constexpr int ps_order = 64;
        for (int i = 0; i < n_series; ++i) {
            std::vector<cplx> c(ps_order + 1);
            for (auto& v : c) {
                const double th = 2.0 * std::numbers::pi * unit();
                v = unit() * cplx{std::cos(th), std::sin(th)};
            }
            const TruncatedSeries s(std::move(c));
            const double r = 0.1 + 0.85 * unit();
            const double gap = parseval_relative_gap(s, r, 2 * ps_order + 2);
            worst = std::max(worst, gap);
            if (gap <= 1e-8) ++pass;
        }
        out << "parseval: " << pass << "/" << n_series << " pass (max rel gap " << fmt9(worst)
            << ")\n";
        ok = ok && pass == n_series;
    }

    { // sharpness brackets
        std::vector<RadiusSpec> specs = {
            {SpecId::thm1, KParam::finite(1.0), cfg.p}, {SpecId::thm1, KParam::finite(2.0), cfg.p},
            {SpecId::thm1, KParam::limit(), cfg.p},     {SpecId::thm2, KParam::finite(2.0), cfg.p},
            {SpecId::thm3, KParam::finite(2.0), cfg.p}, {SpecId::thm4, {}, cfg.p},
            {SpecId::thm5, {}, cfg.p},                  {SpecId::thm8_lower, {}, cfg.p},
        };
        for (const auto& spec : specs) {
            try {
                const SharpnessReport rep =
                    sharpness_bracket(spec, 1e-2, n_bracket, cfg.seed, cfg.order);
                out << "sharpness " << rep.spec << ": radius=" << fmt9(rep.radius)
                    << " below_max=" << fmt9(rep.below_max) << " tail_max=" << fmt9(rep.tail_max)
                    << (rep.certified ? " (certified" : " (uncertified")
                    << ", n=" << rep.instance_count << ") witness(a=" << fmt9(rep.witness.a)
                    << ", r=" << fmt9(rep.witness.r) << ", sum=" << fmt9(rep.witness.sum)
                    << ") min_eps=" << fmt9(rep.min_epsilon) << (rep.ok() ? " ok" : " VIOLATION")
                    << "\n";
                ok = ok && rep.ok();
            } catch (const std::exception& e) {
                err << "verify: sharpness " << spec.name() << ": " << e.what() << "\n";
                return 2;
            }
        }
    }

    { // conjecture sweeps: labeled evidence, never proof, never gating
        std::vector<double> a_grid;
        for (double a = 0.01; a < 0.995; a += 0.01) a_grid.push_back(a);
        const std::vector<double> r_rows = {0.2, 0.4, 0.6};
        for (const KParam& K : {KParam::finite(1.0), KParam::finite(2.0), KParam::limit()}) {
            const EvidenceReport rep = conjecture_sweep(ConjectureSelect::Conj1(K), a_grid,
                                                        r_rows, cfg.order, 0, cfg.seed);
            out << "conjecture " << rep.which << ": " << rep.label
                << " conjectured_radius=" << fmt9(rep.conjectured_radius)
                << " max_sum=" << fmt9(rep.max_sum) << " at " << rep.worst_param
                << (rep.counterexample ? " COUNTEREXAMPLE-CANDIDATE" : " (no counterexample)")
                << "\n";
        }
        const std::vector<double> r_rows2 = {0.1, 0.3, 0.5};
        const EvidenceReport rep = conjecture_sweep(ConjectureSelect::Conj2(cfg.p), {}, r_rows2,
                                                    cfg.order, n_psym, cfg.seed);
        out << "conjecture " << rep.which << ": " << rep.label << " instances="
            << rep.instance_count << " max_sum_at_half=" << fmt9(rep.max_sum)
            << (rep.counterexample ? " COUNTEREXAMPLE-CANDIDATE" : " (no counterexample)") << "\n";
    }

    out << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
    return ok ? 0 : 1;
}

std::optional<FamilySpec> parse_family(const std::string& name, double a, const KParam& K) {
    const double k = K.k();
    if (name == "T1") return FamilySpec::T1(a, k);
    if (name == "T3") return FamilySpec::T3(a, k);
    if (name == "T4") return FamilySpec::T4(a);
    if (name == "T5") return FamilySpec::T5();
    if (name == "T6") return FamilySpec::T6(a, k);
    if (name == "T8") return FamilySpec::T8(a);
    if (name == "C1") return FamilySpec::C1(a, K);
    return std::nullopt;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.family.empty()) {
        err << "sweep: --family is required\n";
        return 2;
    }
    const KParam K = parse_K(cfg.K_list.front());
    std::vector<double> a_values;
    if (cfg.a_list.empty() || (cfg.a_list.size() == 1 && cfg.a_list.front() == "grid")) {
        for (double a = 0.05; a < 0.99; a += 0.05) a_values.push_back(a);
    } else {
        for (const auto& s : cfg.a_list) a_values.push_back(std::stod(s));
    }

    std::ostringstream body;
    body << "family,a,r,bohr_sum\n";
    for (double a : a_values) {
        const auto spec = parse_family(cfg.family, a, K);
        if (!spec) {
            err << "sweep: unknown family '" << cfg.family << "'\n";
            return 2;
        }
        std::vector<double> r_values;
        for (int i = 0; i < 100; ++i) r_values.push_back(0.01 * i);
        // add the threshold radius (sum = 1) when the family reaches it
        auto fn = [&](double r) { return family_bohr_closed_form(*spec, r) - 1.0; };
        if (fn(1.0 - 1e-9) > 0.0) {
            const auto [lo, hi] = bisect_root(fn, 1e-12, 1.0 - 1e-9, 1e-12);
            r_values.push_back(0.5 * (lo + hi));
        }
        std::sort(r_values.begin(), r_values.end());
        for (double r : r_values)
            body << cfg.family << "," << fmt9(a) << "," << fmt9(r) << ","
                 << fmt9(family_bohr_closed_form(*spec, r)) << "\n";
    }

    if (!cfg.out_path.empty()) {
        std::ofstream f(cfg.out_path);
        if (!f) {
            err << "sweep: cannot open output file " << cfg.out_path << "\n";
            return 2;
        }
        f << body.str();
    } else {
        out << body.str();
    }
    return 0;
}

int cmd_bloch_search(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const BlochSearchResult res = bloch_sharpness_search(std::max(cfg.tol, 1e-9));
    if (cfg.format == "json") {
        out << "{\"a_star\": " << fmt9(res.a_star) << ", \"r_star\": " << fmt9(res.r_star)
            << ", \"threshold_residual\": " << fmt9(res.threshold_residual)
            << ", \"stationarity_residual_rel\": " << fmt9(res.stationarity_residual_rel) << "}\n";
    } else {
        out << "a_star=" << fmt9(res.a_star) << " r_star=" << fmt9(res.r_star)
            << " threshold_residual=" << fmt9(res.threshold_residual)
            << " stationarity_residual_rel=" << fmt9(res.stationarity_residual_rel) << "\n";
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bohr radius laboratory for bounded analytic and quasiconformal harmonic mappings"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--K", cfg.K_list, "K values (comma list, 'inf' allowed)")->delimiter(',');
        sub->add_option("--p", cfg.p, "symmetry order p (>= 2)");
        sub->add_option("--order", cfg.order, "series truncation order (>= 16)");
        sub->add_option("--tol", cfg.tol, "solver tolerance (> 0)");
        sub->add_option("--seed", cfg.seed, "instance generator seed");
        sub->add_option("--count", cfg.count, "instance count");
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", cfg.out_path, "output file path");
    };

    CLI::App* radii_cmd = app.add_subcommand("radii", "emit the radius table");
    add_common(radii_cmd);
    radii_cmd->add_option("--spec", cfg.spec_list, "spec ids (comma list, default all)")
        ->delimiter(',');

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the property suites");
    add_common(verify_cmd);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "emit (a, r, bohr_sum) rows for a family");
    add_common(sweep_cmd);
    sweep_cmd->add_option("--family", cfg.family, "family id: T1 T3 T4 T5 T6 T8 C1");
    sweep_cmd->add_option("--a", cfg.a_list, "family parameter(s), or 'grid'")->delimiter(',');

    CLI::App* bloch_cmd = app.add_subcommand("bloch-search", "run the Bloch sharpness search");
    add_common(bloch_cmd);

    std::vector<const char*> argv;
    argv.push_back("bohrlab");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.validate();
        if (radii_cmd->parsed()) return cmd_radii(cfg, out, err);
        if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(cfg, out, err);
        if (bloch_cmd->parsed()) return cmd_bloch_search(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace bohr::cli
