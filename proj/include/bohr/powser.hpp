#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace bohr {

using cplx = std::complex<double>;

inline constexpr int default_order = 256;

/// Certified geometric envelope for the coefficients beyond the truncation
/// order: |c_n| <= coeff * ratio^n for all n > order.
struct TailBound {
    double coeff = 0.0; // C >= 0
    double ratio = 0.0; // q in [0,1)
};

enum class TailMode { truncated, upper };

enum class Weight { plain, times_n, squared };

/// Complex power series c_0 + c_1 z + ... + c_N z^N, immutable after
/// construction. Geometric coefficient families (disk automorphisms,
/// Blaschke products) carry a TailBound so majorant sums can be evaluated
/// as certified upper bounds.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}
    explicit TruncatedSeries(std::vector<cplx> coeffs,
                             std::optional<TailBound> tail = std::nullopt);

    static TruncatedSeries zero(int order);
    static TruncatedSeries constant(cplx value, int order);
    static TruncatedSeries monomial(int degree, int order); // z^degree

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const cplx> coeffs() const { return coeffs_; }
    cplx coeff(int n) const {
        return (n >= 0 && n < static_cast<int>(coeffs_.size())) ? coeffs_[n] : cplx{};
    }
    const std::optional<TailBound>& tail() const { return tail_; }

    /// Zero-pad up to `order` (asserts the padded coefficients are exact
    /// zeros of the represented function). Tail bound is kept.
    TruncatedSeries padded(int order) const;

    /// Horner evaluation of the stored polynomial part; the tail is ignored
    /// (point evaluation is for grid diagnostics only).
    cplx eval(cplx z) const;

    TruncatedSeries derivative() const;
    TruncatedSeries integrate_from_zero() const;

    /// plain:    sum |c_n| r^n
    /// times_n:  sum n |c_n| r^(n-1)
    /// squared:  sum |c_n|^2 r^n
    /// In upper mode the closed-form geometric tail correction is added when
    /// a tail bound is present.
    double majorant_sum(double r, Weight weight, TailMode mode) const;

    /// The tail correction alone (0 when no tail bound is attached).
    double tail_correction(double r, Weight weight) const;

private:
    std::vector<cplx> coeffs_;
    std::optional<TailBound> tail_;
};

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries subtract(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries scale(const TruncatedSeries& s, cplx factor);

/// Cauchy product, truncated to the smaller operand order. The result
/// carries a tail bound only when both operands do.
TruncatedSeries multiply(const TruncatedSeries& s, const TruncatedSeries& t);

/// Forward substitution on the Cauchy recurrence; requires t(0) != 0.
/// The quotient carries no tail bound.
TruncatedSeries divide(const TruncatedSeries& s, const TruncatedSeries& t);

/// (a - z)/(1 - a z) for real a in [0,1): c_0 = a, c_n = -(1-a^2) a^(n-1).
TruncatedSeries disk_automorphism(double a, int order);

/// rotation * prod (z - zero_i)/(1 - conj(zero_i) z); sup norm exactly 1.
TruncatedSeries blaschke_product(std::span<const cplx> zeros, cplx rotation, int order);

namespace detail {
// max over integer m >= 0 of (m+1) t^m, for t in [0,1)
double peak_factor(double t);
// sum_{n<=N} |c_n| x^n + C (q x)^(N+1) / (1 - q x); x may exceed 1 as long
// as q x < 1. Used for Cauchy-estimate tail combination.
double envelope_value(const TruncatedSeries& s, double x);
} // namespace detail

} // namespace bohr
