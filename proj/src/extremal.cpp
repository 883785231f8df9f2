#include "bohr/extremal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "bohr/scalar_solve.hpp"

namespace bohr {

namespace {

constexpr double inv_sqrt3 = 0.57735026918962576; // 1/sqrt(3)

void require_unit_a(double a) {
    if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("family: a must be in [0,1)");
}

void require_unit_k(double k) {
    if (!(k >= 0.0 && k <= 1.0)) throw std::invalid_argument("family: k must be in [0,1]");
}

void require_unimodular(cplx lambda) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
        throw std::invalid_argument("family: |lambda| must be 1");
}

// S(x) = sum_{j>=0} x^j / ((j+1)(j+2)) = (x + (1-x) log(1-x)) / x^2.
// Series for small x avoids the cancellation in the log form.
double geom_log_series(double x) {
    if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("geom_log_series: x must be in [0,1)");
    if (x > 0.5) {
        const double l = std::log1p(-x);
        return (x + (1.0 - x) * l) / (x * x);
    }
    double acc = 0.0;
    double xj = 1.0;
    for (int j = 0; j < 200; ++j) {
        const double term = xj / ((j + 1.0) * (j + 2.0));
        acc += term;
        if (term < 1e-18) break;
        xj *= x;
    }
    return acc;
}

} // namespace

FamilySpec FamilySpec::T1(double a, double k, cplx lambda) {
    require_unit_a(a);
    require_unit_k(k);
    require_unimodular(lambda);
    return {Id::t1, a, k, lambda};
}

FamilySpec FamilySpec::T3(double a, double k) {
    require_unit_a(a);
    require_unit_k(k);
    return {Id::t3, a, k, 1.0};
}

FamilySpec FamilySpec::T4(double a, cplx lambda) {
    require_unit_a(a);
    require_unimodular(lambda);
    return {Id::t4, a, 1.0, lambda};
}

FamilySpec FamilySpec::T6(double a, double k) {
    require_unit_a(a);
    require_unit_k(k);
    return {Id::t6, a, k, 1.0};
}

FamilySpec FamilySpec::T8(double a) {
    require_unit_a(a);
    return {Id::t8, a, 0.0, 1.0};
}

FamilySpec FamilySpec::C1(double a, const KParam& K) {
    require_unit_a(a);
    return {Id::c1, a, K.k(), 1.0};
}

std::string FamilySpec::name() const {
    switch (id) {
    case Id::t1: return "T1";
    case Id::t3: return "T3";
    case Id::t4: return "T4";
    case Id::t5: return "T5";
    case Id::t6: return "T6";
    case Id::t8: return "T8";
    case Id::c1: return "C1";
    }
    return "?";
}

namespace {

// h = z (a-z)/(1-az): a_1 = a, a_n = -(1-a^2) a^(n-2) for n >= 2
TruncatedSeries t4_h(double a, int order) {
    std::vector<cplx> c(order + 1);
    c[1] = a;
    const double lead = -(1.0 - a * a);
    double pw = 1.0;
    for (int n = 2; n <= order; ++n) {
        c[n] = lead * pw;
        pw *= a;
    }
    const TailBound tail =
        a > 0.0 ? TailBound{(1.0 - a * a) / (a * a), a} : TailBound{0.0, 0.0};
    return TruncatedSeries(std::move(c), tail);
}

// h = z (z-a)/(1-az): a_1 = -a, a_n = (1-a^2) a^(n-2) for n >= 2
TruncatedSeries c1_h(double a, int order) {
    std::vector<cplx> c(order + 1);
    c[1] = -a;
    const double lead = 1.0 - a * a;
    double pw = 1.0;
    for (int n = 2; n <= order; ++n) {
        c[n] = lead * pw;
        pw *= a;
    }
    const TailBound tail =
        a > 0.0 ? TailBound{(1.0 - a * a) / (a * a), a} : TailBound{0.0, 0.0};
    return TruncatedSeries(std::move(c), tail);
}

// (3 sqrt 3 / 4)(((z-a)/(1-az))^2 - a^2):
// a_1 = -2a(1-a^2), a_n = (1-a^2)[n(1-a^2) - (1+a^2)] a^(n-2) for n >= 2
TruncatedSeries t8_series(double a, int order) {
    const double pref = 3.0 * std::sqrt(3.0) / 4.0;
    const double oma2 = 1.0 - a * a;
    const double opa2 = 1.0 + a * a;
    std::vector<cplx> c(order + 1);
    c[1] = pref * (-2.0 * a * oma2);
    double pw = 1.0;
    for (int n = 2; n <= order; ++n) {
        c[n] = pref * oma2 * (n * oma2 - opa2) * pw;
        pw *= a;
    }
    TailBound tail{0.0, 0.0};
    if (a > 0.0) {
        // |c_n| <= pref (1-a^2) [n (1-a^2) + (1+a^2)] a^(n-2); flatten the
        // linear factor n into a slightly larger ratio
        const double q = 0.5 * (1.0 + a);
        const double t = a / q;
        double peak_n = 1.0; // max over m >= 1 of m t^m
        const double m_star = -1.0 / std::log(t);
        for (double m : {std::floor(m_star), std::ceil(m_star)})
            if (m >= 1.0) peak_n = std::max(peak_n, m * std::pow(t, m));
        const double C = pref * oma2 / (a * a) * (oma2 * peak_n + opa2);
        tail = TailBound{C, q};
    }
    return TruncatedSeries(std::move(c), tail);
}

} // namespace

HarmonicMap build(const FamilySpec& spec, int order) {
    switch (spec.id) {
    case FamilySpec::Id::t1:
    case FamilySpec::Id::t3: {
        TruncatedSeries h = disk_automorphism(spec.a, order);
        TruncatedSeries g =
            scale(subtract(h, TruncatedSeries::constant(spec.a, order)), spec.lambda * spec.k);
        return HarmonicMap(std::move(h), std::move(g));
    }
    case FamilySpec::Id::t4: {
        TruncatedSeries h = t4_h(spec.a, order);
        TruncatedSeries g = scale(h, spec.lambda);
        return HarmonicMap(std::move(h), std::move(g));
    }
    case FamilySpec::Id::t5:
        return HarmonicMap(TruncatedSeries::monomial(1, order),
                           TruncatedSeries::monomial(1, order));
    case FamilySpec::Id::t6: {
        TruncatedSeries h = disk_automorphism(spec.a, order);
        TruncatedSeries g =
            scale(multiply(TruncatedSeries::monomial(1, order - 1), h.derivative()), spec.k)
                .integrate_from_zero();
        return HarmonicMap(std::move(h), std::move(g));
    }
    case FamilySpec::Id::t8:
        return HarmonicMap(t8_series(spec.a, order), TruncatedSeries::zero(order));
    case FamilySpec::Id::c1: {
        TruncatedSeries h = c1_h(spec.a, order);
        TruncatedSeries g = scale(h, spec.k);
        return HarmonicMap(std::move(h), std::move(g));
    }
    }
    throw std::logic_error("build: unknown family");
}

BohrKind matching_kind(const FamilySpec& spec) {
    switch (spec.id) {
    case FamilySpec::Id::t5: return BohrKind::PSymmetric(2);
    case FamilySpec::Id::t6: return BohrKind::NoFirstB();
    default: return BohrKind::Full();
    }
}

double family_bohr_closed_form(const FamilySpec& spec, double r) {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("family_bohr_closed_form: r must be in [0,1)");
    const double a = spec.a;
    const double k = spec.k;
    switch (spec.id) {
    case FamilySpec::Id::t1:
    case FamilySpec::Id::t3:
        return a + (1.0 - a * a) * (1.0 + k) * r / (1.0 - a * r);
    case FamilySpec::Id::t4:
        return 2.0 * (a * r + (1.0 - a * a) * r * r / (1.0 - a * r));
    case FamilySpec::Id::t5:
        return 2.0 * r;
    case FamilySpec::Id::t6:
        return a + (1.0 - a * a) * (r + k * r * r * geom_log_series(a * r)) / (1.0 - a * r);
    case FamilySpec::Id::t8: {
        if (!(a < inv_sqrt3))
            throw std::domain_error("T8 closed form: requires a < 1/sqrt(3)");
        const double m = (r - a) / (1.0 - a * r);
        return 0.75 * std::sqrt(3.0) * (m * m - a * a + 4.0 * a * (1.0 - a * a) * r);
    }
    case FamilySpec::Id::c1:
        return (1.0 + k) * (a * r + (1.0 - a * a) * r * r / (1.0 - a * r));
    }
    throw std::logic_error("family_bohr_closed_form: unknown family");
}

double t1_threshold(double a, double k) {
    require_unit_a(a);
    require_unit_k(k);
    return 1.0 / (1.0 + k + (2.0 + k) * a);
}

double t6_threshold(double a, double k, double tol) {
    if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("t6_threshold: a must be in [0,1]");
    require_unit_k(k);
    // (1+a)(r + k r^2 S(ar))/(1-ar) = 1; increasing in r, negative at 0
    auto fn = [&](double r) {
        return (1.0 + a) * (r + k * r * r * geom_log_series(a * r)) / (1.0 - a * r) - 1.0;
    };
    const auto [lo, hi] = bisect_root(fn, 1e-12, 1.0 - 1e-12, tol);
    return 0.5 * (lo + hi);
}

SupSearchResult t6_sup_search(const KParam& K, double tol) {
    const double k = K.k();
    // coarse scan; the threshold is expected to decrease toward a = 1
    constexpr int scan = 64;
    double best_a = 1e-3;
    double best_r = t6_threshold(best_a, k);
    bool decreasing = true;
    double prev = best_r;
    for (int i = 1; i <= scan; ++i) {
        const double a = 1e-3 + (1.0 - 1e-3) * i / scan;
        const double r = t6_threshold(a, k);
        if (r > prev + 1e-14) decreasing = false;
        if (r < best_r) {
            best_r = r;
            best_a = a;
        }
        prev = r;
    }
    if (decreasing || best_a >= 1.0 - 1.0 / scan) {
        // binding member is the a -> 1 limit; the equation stays well posed at a = 1
        return {1.0, t6_threshold(1.0, k, tol)};
    }
    const double width = (1.0 - 1e-3) / scan;
    const double a_star = golden_section_min(
        [&](double a) { return t6_threshold(a, k); }, std::max(1e-3, best_a - width),
        std::min(1.0, best_a + width), std::max(tol, 1e-9));
    return {a_star, t6_threshold(a_star, k, tol)};
}

namespace {

constexpr double threshold_rhs_coeff = 0.76980035891950105; // 4/(3 sqrt 3)

// threshold equation as a cubic in r with coefficients in a:
// (r-a)^2 + (1-ar)^2 (-a^2 + 4a(1-a^2) r) - c (1-ar)^2
std::array<double, 4> threshold_cubic(double a) {
    const double a2 = a * a;
    const double lin = 4.0 * a * (1.0 - a2); // -a^2 + lin * r
    // (1-ar)^2 = 1 - 2a r + a^2 r^2
    const std::array<double, 3> sq{1.0, -2.0 * a, a2};
    std::array<double, 4> p{};
    // (r-a)^2
    p[0] += a2;
    p[1] += -2.0 * a;
    p[2] += 1.0;
    // (1-ar)^2 * (-a^2 + lin r) - c (1-ar)^2
    for (int i = 0; i < 3; ++i) {
        p[i] += sq[i] * (-a2 - threshold_rhs_coeff);
        p[i + 1] += sq[i] * lin;
    }
    return p;
}

double eval_cubic(const std::array<double, 4>& p, double r) {
    return ((p[3] * r + p[2]) * r + p[1]) * r + p[0];
}

} // namespace

double bloch_threshold_residual(double a, double r) {
    const double m = r - a;
    const double w = 1.0 - r * a;
    return m * m + w * w * (-a * a + 4.0 * a * (1.0 - a * a) * r) - threshold_rhs_coeff * w * w;
}

namespace {

std::array<double, 8> stationarity_terms(double a, double r) {
    const double s3 = std::sqrt(3.0);
    return {18.0 * r,
            8.0 * s3 * r,
            -54.0 * a * a * r,
            -144.0 * a * r * r,
            -8.0 * s3 * a * r * r,
            252.0 * a * a * a * r * r,
            108.0 * a * a * r * r * r,
            -180.0 * a * a * a * a * r * r * r};
}

} // namespace

double bloch_stationarity_value(double a, double r) {
    double acc = 0.0;
    for (double t : stationarity_terms(a, r)) acc += t;
    return acc;
}

double bloch_stationarity_scale(double a, double r) {
    double acc = 0.0;
    for (double t : stationarity_terms(a, r)) acc += std::abs(t);
    return acc;
}

double bloch_threshold(double a, double tol) {
    const auto p = threshold_cubic(a);
    // smallest positive root: sign scan then bisection
    constexpr int cells = 2048;
    double prev_x = 1e-9;
    double prev_v = eval_cubic(p, prev_x);
    for (int i = 1; i <= cells; ++i) {
        const double x = static_cast<double>(i) / cells;
        const double v = eval_cubic(p, x);
        if (v == 0.0) return x;
        if ((v > 0.0) != (prev_v > 0.0)) {
            const auto [lo, hi] =
                bisect_root([&](double r) { return eval_cubic(p, r); }, prev_x, x, tol);
            return 0.5 * (lo + hi);
        }
        prev_x = x;
        prev_v = v;
    }
    throw std::runtime_error("bloch_threshold: no root of the threshold equation in (0,1) for a = " +
                             std::to_string(a));
}

BlochSearchResult bloch_sharpness_search(double tol) {
    const double lo = 1e-3;
    const double hi = inv_sqrt3 - 1e-3;

    // unimodality pre-scan
    constexpr int scan = 64;
    std::array<double, scan + 1> val{};
    int best = 0;
    for (int i = 0; i <= scan; ++i) {
        const double a = lo + (hi - lo) * i / scan;
        val[i] = bloch_threshold(a);
        if (val[i] < val[best]) best = i;
    }
    int direction_changes = 0;
    for (int i = 1; i < scan; ++i) {
        const bool down_before = val[i] < val[i - 1];
        const bool up_after = val[i + 1] > val[i];
        if (down_before && up_after) ++direction_changes;
    }

    double a_lo = lo;
    double a_hi = hi;
    if (direction_changes <= 1 && best > 0 && best < scan) {
        a_lo = lo + (hi - lo) * (best - 1) / scan;
        a_hi = lo + (hi - lo) * (best + 1) / scan;
    } else {
        // non-unimodal scan: dense grid, then refine locally around the best cell
        constexpr int dense = 2000;
        int dbest = 0;
        double dbest_val = bloch_threshold(lo);
        for (int i = 1; i <= dense; ++i) {
            const double a = lo + (hi - lo) * i / dense;
            const double v = bloch_threshold(a);
            if (v < dbest_val) {
                dbest_val = v;
                dbest = i;
            }
        }
        a_lo = lo + (hi - lo) * std::max(0, dbest - 1) / dense;
        a_hi = lo + (hi - lo) * std::min(dense, dbest + 1) / dense;
    }

    const double a_star =
        golden_section_min([&](double a) { return bloch_threshold(a); }, a_lo, a_hi, tol);
    const double r_star = bloch_threshold(a_star);
    BlochSearchResult res;
    res.a_star = a_star;
    res.r_star = r_star;
    res.threshold_residual = std::abs(bloch_threshold_residual(a_star, r_star));
    res.stationarity_residual_rel =
        std::abs(bloch_stationarity_value(a_star, r_star)) / bloch_stationarity_scale(a_star, r_star);
    return res;
}

namespace {

EvidenceReport conj1_sweep(const KParam& K, std::span<const double> a_grid,
                           std::span<const double> r_grid) {
    EvidenceReport rep;
    rep.which = "Conj1(K=" + K.str() + ")";
    rep.conjectured_radius =
        0.25 * std::sqrt(3.5 - (K.is_limit ? 0.0 : 0.5 / (K.value * K.value)) +
                         (K.is_limit ? 0.0 : 5.0 / K.value));
    auto sum_at = [&](double a, double r) {
        return family_bohr_closed_form(FamilySpec::C1(a, K), r);
    };
    rep.max_sum = 0.0;
    for (double a : a_grid) {
        const double s = sum_at(a, rep.conjectured_radius);
        if (s > rep.max_sum) {
            rep.max_sum = s;
            rep.worst_param = "a=" + std::to_string(a);
        }
        // empirical threshold: root of sum = 1, when the family reaches 1
        auto fn = [&](double r) { return sum_at(a, r) - 1.0; };
        if (fn(1.0 - 1e-9) > 0.0) {
            const auto [tlo, thi] = bisect_root(fn, 1e-9, 1.0 - 1e-9, 1e-12);
            rep.thresholds.emplace_back(a, 0.5 * (tlo + thi));
        }
    }
    for (double r : r_grid) {
        double m = 0.0;
        for (double a : a_grid) m = std::max(m, sum_at(a, r));
        rep.rows.emplace_back(r, m);
    }
    rep.instance_count = static_cast<int>(a_grid.size());
    rep.counterexample = rep.max_sum > 1.0 + 1e-9;
    return rep;
}

EvidenceReport conj2_sweep(int p, std::span<const double> r_grid, int order,
                           int instance_count, std::uint64_t seed) {
    EvidenceReport rep;
    rep.which = "Conj2(p=" + std::to_string(p) + ")";
    rep.conjectured_radius = 0.5;
    rep.instance_count = instance_count;
    const BohrKind kind = BohrKind::PSymmetric(p);
    rep.max_sum = 0.0;
    for (int i = 0; i < instance_count; ++i) {
        const HarmonicMap f =
            generate_instance(seed + static_cast<std::uint64_t>(i),
                              InstanceProfile::psymmetric(p), order);
        // bound: max{sup|h|, sup|g|} >= sup|h| = 1 exactly by construction,
        // so comparing against 1 is conservative
        const double s_half = bohr_sum(f, 0.5, kind, TailMode::upper);
        if (s_half > rep.max_sum) {
            rep.max_sum = s_half;
            rep.worst_param = "seed=" + std::to_string(seed + i);
        }
        if (s_half > 1.0 + 1e-9) rep.counterexample = true;
        for (double r : r_grid) {
            if (!(r < 1.0)) continue;
            const double s = bohr_sum(f, r, kind, TailMode::upper);
            bool found = false;
            for (auto& row : rep.rows)
                if (row.first == r) {
                    row.second = std::max(row.second, s);
                    found = true;
                }
            if (!found) rep.rows.emplace_back(r, s);
        }
    }
    return rep;
}

} // namespace

EvidenceReport conjecture_sweep(const ConjectureSelect& which, std::span<const double> a_grid,
                                std::span<const double> r_grid, int order, int instance_count,
                                std::uint64_t seed) {
    switch (which.which) {
    case ConjectureSelect::Which::conj1:
        return conj1_sweep(which.K, a_grid, r_grid);
    case ConjectureSelect::Which::conj2:
        return conj2_sweep(which.p, r_grid, order, instance_count, seed);
    }
    throw std::logic_error("conjecture_sweep: unknown selection");
}

} // namespace bohr
