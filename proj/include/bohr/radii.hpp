#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "bohr/kparam.hpp"

namespace bohr {

enum class SpecId {
    thm1,       // (K+1)/(5K+1)
    thm2,       // (K+1)/(3K+1)
    thm3,       // (K+1)/(5K+1)
    cor1a,      // 1/5
    cor1b,      // 1/3
    cor2,       // 1/5
    thm4,       // sqrt(7/32)
    thm5,       // 1/2
    thm6_lower, // root of M_K(r) = 1/2
    thm6_upper, // root of 4R/(1-R) K/(K+1) + 2 (K-1)/(K+1) log(1-R) = 1
    cor3_lower, // thm6_lower at the K limit
    cor3_upper, // thm6_upper at the K limit
    rem1_lower, // root of M_K(r) = 1
    rem1_upper, // root of 2R/(1-R) K/(K+1) + (K-1)/(K+1) log(1-R) = 1
    thm7,       // 1/3
    thm8_lower, // root of 1 - R + R log(1-R) = 0
    thm8_upper, // bloch sharpness search optimum
    thm9_lower, // same root as thm8_lower
    conj1,      // (1/4) sqrt(7/2 - 1/(2K^2) + 5/K)
};

enum class SpecKind { closed_form, transcendental_root, optimization };

struct RadiusSpec {
    SpecId id = SpecId::thm1;
    KParam K{};
    int p = 2;

    SpecKind kind() const;
    bool uses_K() const;
    std::string name() const; // "Thm1", "Cor3Lower", ...
};

std::optional<SpecId> parse_spec_id(std::string_view name);

struct RootResult {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Exact arithmetic evaluation; requires kind() == closed_form.
double closed_form_radius(const RadiusSpec& spec);

/// M_K(r) = r/(1-r) + k r^2 sqrt((1+r^2)/(1-r^2)^3) sqrt(pi^2/6 - 1),
/// k = (K-1)/(K+1); strictly increasing in r on [0,1).
double m_k(double r, const KParam& K);

/// Bisection for fn(r) = target on [lo, hi]. Monotonicity of fn is verified
/// on a coarse scan of the bracket, not assumed.
RootResult solve_monotone_root(const std::function<double(double)>& fn, double target,
                               double lo, double hi, double tol);

/// Closed forms return a zero-width bracket; transcendental ids are solved
/// by bisection on (1e-6, 1-1e-6); thm8_upper runs the bloch sharpness
/// search and reports its threshold.
RootResult radius_of(const RadiusSpec& spec, double tol = 1e-12);

} // namespace bohr
