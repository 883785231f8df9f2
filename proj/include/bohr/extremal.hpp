#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bohr/bohrsum.hpp"
#include "bohr/harmonic.hpp"
#include "bohr/kparam.hpp"

namespace bohr {

/// The sharpness families, one per theorem:
///   T1 {a,k,lambda}: h = (a-z)/(1-az),       g = lambda k (h - h(0))
///   T3 {a,k}:        T1 with lambda = 1
///   T4 {a,lambda}:   h = z (a-z)/(1-az),     g = lambda h
///   T5:              f = z + conj(z)
///   T6 {a,k}:        h = (a-z)/(1-az),       g' = k z h'
///   T8 {a}:          (3 sqrt 3 / 4)(((z-a)/(1-az))^2 - a^2), analytic
///   C1 {a,K}:        h = z (z-a)/(1-az),     g = k h
struct FamilySpec {
    enum class Id { t1, t3, t4, t5, t6, t8, c1 };
    Id id = Id::t1;
    double a = 0.0;
    double k = 0.0;
    cplx lambda{1.0, 0.0};

    static FamilySpec T1(double a, double k, cplx lambda = 1.0);
    static FamilySpec T3(double a, double k);
    static FamilySpec T4(double a, cplx lambda = 1.0);
    static FamilySpec T5() { return {Id::t5, 0.0, 0.0, 1.0}; }
    static FamilySpec T6(double a, double k);
    static FamilySpec T8(double a);
    static FamilySpec C1(double a, const KParam& K);

    std::string name() const;
};

/// Coefficient-exact construction of the family member.
HarmonicMap build(const FamilySpec& spec, int order);

/// The functional under which the family is extremal.
BohrKind matching_kind(const FamilySpec& spec);

/// Closed-form value of the matching Bohr sum at radius r. T8 requires
/// a < 1/sqrt(3), the regime where all coefficients past the first are
/// positive.
double family_bohr_closed_form(const FamilySpec& spec, double r);

/// Radius where the T1 family's sum reaches 1: 1/(1 + k + (2+k) a).
double t1_threshold(double a, double k);

/// Radius where the T6 family's sum reaches 1, solved in the cancellation-
/// free form (1+a)(r + k r^2 S(ar))/(1-ar) = 1; well defined up to a = 1,
/// where it reproduces the upper-bound root equation exactly.
double t6_threshold(double a, double k, double tol = 1e-12);

struct SupSearchResult {
    double a_star = 0.0;
    double r_star = 0.0;
};

/// Extremizes the T6 threshold over a in (0,1). The threshold decreases in
/// a, so the binding value is its a -> 1 limit; a_star = 1 denotes that
/// limit. Independently confirms the thm6_upper root equation.
SupSearchResult t6_sup_search(const KParam& K, double tol = 1e-9);

/// Left-minus-right of the T8 threshold equation
/// (r-a)^2 + (1-ra)^2 (-a^2 + 4a(1-a^2) r) = 4/(3 sqrt 3) (1-ar)^2.
double bloch_threshold_residual(double a, double r);

/// The stationarity polynomial 18r + 8 sqrt(3) r - 54 a^2 r - 144 a r^2
/// - 8 sqrt(3) a r^2 + 252 a^3 r^2 + 108 a^2 r^3 - 180 a^4 r^3, and the sum
/// of absolute values of its terms (the local scale).
double bloch_stationarity_value(double a, double r);
double bloch_stationarity_scale(double a, double r);

/// Smallest positive root in r of the T8 threshold equation for fixed a,
/// via cubic expansion and bisection. Throws when no root lies in (0,1).
double bloch_threshold(double a, double tol = 1e-12);

struct BlochSearchResult {
    double a_star = 0.0;
    double r_star = 0.0;
    double threshold_residual = 0.0;       // absolute, at (a_star, r_star)
    double stationarity_residual_rel = 0.0;   // |value| / local scale
};

/// Minimizes the T8 threshold r(a) over a in (0, 1/sqrt 3) by golden
/// section after a unimodality pre-scan (dense-grid fallback otherwise).
BlochSearchResult bloch_sharpness_search(double tol = 1e-6);

struct ConjectureSelect {
    enum class Which { conj1, conj2 };
    Which which = Which::conj1;
    KParam K{};
    int p = 2;

    static ConjectureSelect Conj1(const KParam& K) { return {Which::conj1, K, 2}; }
    static ConjectureSelect Conj2(int p) { return {Which::conj2, {}, p}; }
};

/// Numerical exploration output; always labeled EVIDENCE, never a proof.
struct EvidenceReport {
    std::string label = "EVIDENCE";
    std::string which;
    double conjectured_radius = 0.0;
    double max_sum = 0.0;      // largest sum observed at the conjectured radius
    std::string worst_param;   // where it was attained
    int instance_count = 0;
    bool counterexample = false;
    std::vector<std::pair<double, double>> rows;       // (r, max sum over the sweep)
    std::vector<std::pair<double, double>> thresholds; // Conj1: (a, empirical radius)
};

EvidenceReport conjecture_sweep(const ConjectureSelect& which, std::span<const double> a_grid,
                                std::span<const double> r_grid, int order,
                                int instance_count = 500, std::uint64_t seed = 7);

} // namespace bohr
