#include "bohr/radii.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bohr/extremal.hpp"
#include "bohr/scalar_solve.hpp"

namespace bohr {

SpecKind RadiusSpec::kind() const {
    switch (id) {
    case SpecId::thm6_lower:
    case SpecId::thm6_upper:
    case SpecId::cor3_lower:
    case SpecId::cor3_upper:
    case SpecId::rem1_lower:
    case SpecId::rem1_upper:
    case SpecId::thm8_lower:
    case SpecId::thm9_lower:
        return SpecKind::transcendental_root;
    case SpecId::thm8_upper:
        return SpecKind::optimization;
    default:
        return SpecKind::closed_form;
    }
}

bool RadiusSpec::uses_K() const {
    switch (id) {
    case SpecId::thm1:
    case SpecId::thm2:
    case SpecId::thm3:
    case SpecId::thm6_lower:
    case SpecId::thm6_upper:
    case SpecId::rem1_lower:
    case SpecId::rem1_upper:
    case SpecId::conj1:
        return true;
    default:
        return false;
    }
}

std::string RadiusSpec::name() const {
    switch (id) {
    case SpecId::thm1: return "Thm1";
    case SpecId::thm2: return "Thm2";
    case SpecId::thm3: return "Thm3";
    case SpecId::cor1a: return "Cor1a";
    case SpecId::cor1b: return "Cor1b";
    case SpecId::cor2: return "Cor2";
    case SpecId::thm4: return "Thm4";
    case SpecId::thm5: return "Thm5";
    case SpecId::thm6_lower: return "Thm6Lower";
    case SpecId::thm6_upper: return "Thm6Upper";
    case SpecId::cor3_lower: return "Cor3Lower";
    case SpecId::cor3_upper: return "Cor3Upper";
    case SpecId::rem1_lower: return "Rem1Lower";
    case SpecId::rem1_upper: return "Rem1Upper";
    case SpecId::thm7: return "Thm7";
    case SpecId::thm8_lower: return "Thm8Lower";
    case SpecId::thm8_upper: return "Thm8Upper";
    case SpecId::thm9_lower: return "Thm9Lower";
    case SpecId::conj1: return "Conj1";
    }
    return "?";
}

std::optional<SpecId> parse_spec_id(std::string_view name) {
    static const std::pair<std::string_view, SpecId> table[] = {
        {"Thm1", SpecId::thm1},           {"Thm2", SpecId::thm2},
        {"Thm3", SpecId::thm3},           {"Cor1a", SpecId::cor1a},
        {"Cor1b", SpecId::cor1b},         {"Cor2", SpecId::cor2},
        {"Thm4", SpecId::thm4},           {"Thm5", SpecId::thm5},
        {"Thm6Lower", SpecId::thm6_lower},{"Thm6Upper", SpecId::thm6_upper},
        {"Cor3Lower", SpecId::cor3_lower},{"Cor3Upper", SpecId::cor3_upper},
        {"Rem1Lower", SpecId::rem1_lower},{"Rem1Upper", SpecId::rem1_upper},
        {"Thm7", SpecId::thm7},           {"Thm8Lower", SpecId::thm8_lower},
        {"Thm8Upper", SpecId::thm8_upper},{"Thm9Lower", SpecId::thm9_lower},
        {"Conj1", SpecId::conj1},
    };
    for (const auto& [key, id] : table)
        if (key == name) return id;
    return std::nullopt;
}

double closed_form_radius(const RadiusSpec& spec) {
    if (spec.kind() != SpecKind::closed_form)
        throw std::invalid_argument("closed_form_radius: " + spec.name() + " is not closed-form");
    const KParam& K = spec.K;
    switch (spec.id) {
    case SpecId::thm1:
    case SpecId::thm3:
        return K.is_limit ? 0.2 : (K.value + 1.0) / (5.0 * K.value + 1.0);
    case SpecId::thm2:
        return K.is_limit ? 1.0 / 3.0 : (K.value + 1.0) / (3.0 * K.value + 1.0);
    case SpecId::cor1a:
    case SpecId::cor2:
        return 0.2;
    case SpecId::cor1b:
        return 1.0 / 3.0;
    case SpecId::thm4:
        return std::sqrt(7.0 / 32.0);
    case SpecId::thm5:
        if (spec.p < 2) throw std::invalid_argument("Thm5: p must be >= 2");
        return 0.5;
    case SpecId::thm7:
        return 1.0 / 3.0;
    case SpecId::conj1: {
        const double invK = K.is_limit ? 0.0 : 1.0 / K.value;
        return 0.25 * std::sqrt(3.5 - 0.5 * invK * invK + 5.0 * invK);
    }
    default:
        break;
    }
    throw std::logic_error("closed_form_radius: unhandled id");
}

double m_k(double r, const KParam& K) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("m_k: r must be in [0,1)");
    static const double root_term = std::sqrt(std::numbers::pi * std::numbers::pi / 6.0 - 1.0);
    const double r2 = r * r;
    const double omr2 = 1.0 - r2;
    return r / (1.0 - r) +
           K.k() * r2 * std::sqrt((1.0 + r2) / (omr2 * omr2 * omr2)) * root_term;
}

RootResult solve_monotone_root(const std::function<double(double)>& fn, double target,
                               double lo, double hi, double tol) {
    if (!(lo < hi)) throw std::invalid_argument("solve_monotone_root: empty bracket");
    if (!(tol > 0.0)) throw std::invalid_argument("solve_monotone_root: tol must be > 0");

    // verify strict monotonicity on a coarse scan before trusting bisection
    constexpr int scan = 32;
    double prev = fn(lo);
    const bool increasing = fn(hi) > prev;
    for (int i = 1; i <= scan; ++i) {
        const double x = lo + (hi - lo) * i / scan;
        const double v = fn(x);
        if (increasing ? !(v > prev) : !(v < prev))
            throw std::domain_error("solve_monotone_root: function not strictly monotone on bracket");
        prev = v;
    }

    int iterations = 0;
    auto counted = [&](double x) {
        ++iterations;
        return fn(x) - target;
    };
    const auto [blo, bhi] = bisect_root(counted, lo, hi, tol);
    const double value = 0.5 * (blo + bhi);
    return {value, blo, bhi, fn(value) - target, iterations};
}

namespace {

constexpr double bracket_lo = 1e-6;
constexpr double bracket_hi = 1.0 - 1e-6;

double eq_thm6_upper(double R, const KParam& K) {
    return 4.0 * R / (1.0 - R) * K.K_ratio() + 2.0 * K.k() * std::log1p(-R);
}

double eq_rem1_upper(double R, const KParam& K) {
    return 2.0 * R / (1.0 - R) * K.K_ratio() + K.k() * std::log1p(-R);
}

double eq_thm8_lower(double R) { return 1.0 - R + R * std::log1p(-R); }

} // namespace

RootResult radius_of(const RadiusSpec& spec, double tol) {
    switch (spec.kind()) {
    case SpecKind::closed_form: {
        const double v = closed_form_radius(spec);
        return {v, v, v, 0.0, 0};
    }
    case SpecKind::optimization: {
        const BlochSearchResult res = bloch_sharpness_search();
        return {res.r_star, res.r_star, res.r_star, res.threshold_residual, 0};
    }
    case SpecKind::transcendental_root:
        break;
    }

    const KParam K = (spec.id == SpecId::cor3_lower || spec.id == SpecId::cor3_upper)
                         ? KParam::limit()
                         : spec.K;
    switch (spec.id) {
    case SpecId::thm6_lower:
    case SpecId::cor3_lower:
        return solve_monotone_root([&](double r) { return m_k(r, K); }, 0.5, bracket_lo,
                                   bracket_hi, tol);
    case SpecId::rem1_lower:
        return solve_monotone_root([&](double r) { return m_k(r, K); }, 1.0, bracket_lo,
                                   bracket_hi, tol);
    case SpecId::thm6_upper:
    case SpecId::cor3_upper:
        return solve_monotone_root([&](double r) { return eq_thm6_upper(r, K); }, 1.0,
                                   bracket_lo, bracket_hi, tol);
    case SpecId::rem1_upper:
        return solve_monotone_root([&](double r) { return eq_rem1_upper(r, K); }, 1.0,
                                   bracket_lo, bracket_hi, tol);
    case SpecId::thm8_lower:
    case SpecId::thm9_lower:
        return solve_monotone_root(eq_thm8_lower, 0.0, bracket_lo, bracket_hi, tol);
    default:
        break;
    }
    throw std::logic_error("radius_of: unhandled id");
}

} // namespace bohr
