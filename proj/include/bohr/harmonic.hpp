#pragma once

#include <cstdint>
#include <vector>

#include "bohr/powser.hpp"

namespace bohr {

/// Planar harmonic mapping f = h + conj(g) with g(0) = 0 and h, g truncated
/// at the same order. Immutable.
class HarmonicMap {
public:
    HarmonicMap(TruncatedSeries h, TruncatedSeries g);

    const TruncatedSeries& h() const { return h_; }
    const TruncatedSeries& g() const { return g_; }
    int order() const { return h_.order(); }

    cplx eval(cplx z) const { return h_.eval(z) + std::conj(g_.eval(z)); }

private:
    TruncatedSeries h_;
    TruncatedSeries g_;
};

/// Consistent pair K >= 1, k = (K-1)/(K+1) in [0,1).
struct QcParams {
    double K = 1.0;
    double k = 0.0;
    static QcParams from_K(double K);
    static QcParams from_k(double k);
};

/// Polar sampling grid: radii j*r_max/(radii+1) for j = 1..radii, angles
/// 2*pi*i/angles for i = 0..angles-1, plus the origin. Disk suprema computed
/// on it are sampled lower bounds, never exact values.
struct PolarGrid {
    double r_max = 0.995;
    int radii = 64;
    int angles = 256;

    std::vector<cplx> points() const;
    double outermost_radius() const { return r_max * radii / (radii + 1.0); }
};

/// omega = g'/h' as a series quotient; requires h'(0) != 0.
TruncatedSeries dilatation(const HarmonicMap& f);

/// Sampled sup of (1+|omega|)/(1-|omega|) over the grid; a lower bound for
/// the true quasiconformality constant. Throws if |omega| >= 1 at a sample.
double qc_constant(const HarmonicMap& f, const PolarGrid& grid);

/// True iff J_f = |h'|^2 - |g'|^2 > 0 at every grid sample and h' has no
/// zero inside the outermost grid circle (argument-principle count, the
/// local-univalence criterion). False is an answer, not an error.
bool is_sense_preserving(const HarmonicMap& f, const PolarGrid& grid);

/// Sampled lower bound of the sup norm.
double sup_norm_lower(const TruncatedSeries& s, const PolarGrid& grid);

/// |f(0)| + sup over the grid of (1-|z|^2)(|h'| + |g'|); reduces to the
/// classical Bloch norm when g = 0.
double bloch_norm(const HarmonicMap& f, const PolarGrid& grid);

/// Randomized instance factory. Each profile makes its class hypothesis hold
/// by construction with exactly known constants where possible:
///   bounded:    h a random Blaschke product (sup norm 1), g' = omega h' with
///               |omega| <= random k < 1
///   qc(K):      as bounded with k = (K-1)/(K+1) exactly
///   halfplane:  h = 1 - c (1+B)/(1-rho B), B(0) = 0, so Re h <= 1,
///               h(0) = 1-c > 0; g' = omega h' with |omega| <= (K-1)/(K+1)
///   psymmetric: h(z) = z phi(z^p) with phi a Blaschke product, g' = c z^p h'
///   bloch:      polynomial h with (1-|z|^2)|h'| <= 1-|h(0)| enforced by
///               scaling against a grid sup (g = 0)
struct InstanceProfile {
    enum class Kind { bounded, halfplane, bloch, psymmetric, qc };
    Kind kind = Kind::bounded;
    double K = 1.0; // qc, halfplane
    int p = 2;      // psymmetric

    static InstanceProfile bounded() { return {Kind::bounded, 1.0, 2}; }
    static InstanceProfile halfplane(double K = 3.0) { return {Kind::halfplane, K, 2}; }
    static InstanceProfile bloch() { return {Kind::bloch, 1.0, 2}; }
    static InstanceProfile psymmetric(int p);
    static InstanceProfile qc(double K);
};

/// Deterministic in (seed, profile, order).
HarmonicMap generate_instance(std::uint64_t seed, const InstanceProfile& profile, int order);

} // namespace bohr
