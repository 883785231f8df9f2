#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "bohr/extremal.hpp"
#include "bohr/harmonic.hpp"
#include "bohr/radii.hpp"

namespace bohr {

/// sum |b_n|^2 r^n <= k^2 sum |a_n|^2 r^n at every grid radius, both sides
/// truncated identically and constant terms excluded.
bool check_lemma1(const TruncatedSeries& h, const TruncatedSeries& g, double k,
                  std::span<const double> r_grid);

/// The p-symmetric coefficient bound, branch selected by comparing |a_1|
/// with r^p:
///   sum |a_{pn+1}| r^(pn+1) <= (3 - 2 sqrt 2 sqrt(1-r^2p)) / r^(p-1)  if |a_1| >= r^p
///                           <= 2 r^(p+1)                              otherwise
/// plus sum <= max{2 r^(p+1), r} wherever r^p <= 1/3. Requires 2 r^2p < 1
/// on the grid and a p-symmetric h bounded by 1. A violation is reported as
/// false, never silenced by adjusting the formula.
bool check_lemma2(const TruncatedSeries& h, int p, std::span<const double> r_grid);

enum class CoeffBoundProfile { bounded, halfplane };

/// bounded:   |a_n| <= 1 - |a_0|^2 for n >= 1 (sup norm 1 instances)
/// halfplane: |a_n| <= 2 (1 - a_0) for n >= 1 (Re h <= 1, a_0 in (0,1))
bool check_coefficient_bounds(const TruncatedSeries& h, CoeffBoundProfile profile);

/// Relative gap between the trapezoid quadrature of |s(r e^{i t})|^2 over
/// the circle and 2 pi sum |c_n|^2 r^2n. Exact for enough nodes; validates
/// the Parseval step behind the squared majorants.
double parseval_relative_gap(const TruncatedSeries& s, double r, int nodes);

struct WitnessInfo {
    bool found = false;
    double a = 0.0;
    double k = 0.0;
    double r = 0.0;
    double sum = 0.0;
};

/// Outcome of a below/above-radius sweep for one sharp-radius claim.
/// below_max is the largest upper-mode Bohr sum seen at r = radius over the
/// seeded corpus and the extremal-family parameter grid; the witness is a
/// family member exceeding the bound just above the sharpness point.
struct SharpnessReport {
    std::string spec;
    double radius = 0.0;       // guaranteed radius (below check runs here)
    double bound = 1.0;
    double below_max = 0.0;    // upper-mode sums: truncation plus certified tail
    double tail_max = 0.0;     // largest tail correction contributing above
    bool certified = true;     // false when corpus members lack tail bounds
    int instance_count = 0;
    double epsilon = 0.0;
    WitnessInfo witness;
    double min_epsilon = 0.0;  // smallest lift above `radius` with a witness
    bool ok() const { return below_max <= bound + 1e-9 && witness.found; }
};

/// Supported ids: thm1/thm2/thm3 (with K), thm4, thm5 (with p), thm8_lower.
SharpnessReport sharpness_bracket(const RadiusSpec& spec, double eps, int instance_count,
                                  std::uint64_t seed, int order);

} // namespace bohr
