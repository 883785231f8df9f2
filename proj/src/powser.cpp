#include "bohr/powser.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bohr {

namespace {

void validate_tail(const TailBound& tail) {
    if (!(tail.coeff >= 0.0))
        throw std::invalid_argument("TailBound: coeff must be >= 0");
    if (!(tail.ratio >= 0.0 && tail.ratio < 1.0))
        throw std::invalid_argument("TailBound: ratio must be in [0,1)");
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs, std::optional<TailBound> tail)
    : coeffs_(std::move(coeffs)), tail_(tail) {
    if (coeffs_.empty())
        throw std::invalid_argument("TruncatedSeries: needs at least the constant term");
    if (tail_) validate_tail(*tail_);
}

TruncatedSeries TruncatedSeries::zero(int order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    return TruncatedSeries(std::vector<cplx>(order + 1), TailBound{0.0, 0.0});
}

TruncatedSeries TruncatedSeries::constant(cplx value, int order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    std::vector<cplx> c(order + 1);
    c[0] = value;
    return TruncatedSeries(std::move(c), TailBound{0.0, 0.0});
}

TruncatedSeries TruncatedSeries::monomial(int degree, int order) {
    if (degree < 0 || degree > order)
        throw std::invalid_argument("monomial degree must be in [0, order]");
    std::vector<cplx> c(order + 1);
    c[degree] = 1.0;
    return TruncatedSeries(std::move(c), TailBound{0.0, 0.0});
}

TruncatedSeries TruncatedSeries::padded(int order) const {
    if (order < this->order())
        throw std::invalid_argument("padded: target order below current order");
    std::vector<cplx> c(coeffs_.begin(), coeffs_.end());
    c.resize(order + 1, cplx{});
    return TruncatedSeries(std::move(c), tail_);
}

cplx TruncatedSeries::eval(cplx z) const {
    cplx acc = coeffs_.back();
    for (int n = order() - 1; n >= 0; --n) acc = acc * z + coeffs_[n];
    return acc;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order() == 0) return zero(0);
    std::vector<cplx> c(coeffs_.size() - 1);
    for (std::size_t n = 0; n < c.size(); ++n)
        c[n] = static_cast<double>(n + 1) * coeffs_[n + 1];
    std::optional<TailBound> tail;
    if (tail_) {
        // |(s')_m| = (m+1)|c_{m+1}| <= C q (m+1) q^m <= C q peak(q/q') q'^m
        const double q = tail_->ratio;
        if (q == 0.0) {
            tail = TailBound{0.0, 0.0};
        } else {
            const double qp = 0.5 * (1.0 + q);
            tail = TailBound{tail_->coeff * q * detail::peak_factor(q / qp), qp};
        }
    }
    return TruncatedSeries(std::move(c), tail);
}

TruncatedSeries TruncatedSeries::integrate_from_zero() const {
    std::vector<cplx> c(coeffs_.size() + 1);
    c[0] = 0.0;
    for (std::size_t n = 1; n < c.size(); ++n)
        c[n] = coeffs_[n - 1] / static_cast<double>(n);
    std::optional<TailBound> tail;
    if (tail_) {
        const double q = tail_->ratio;
        // |(int s)_m| = |c_{m-1}|/m <= (C/q) q^m
        tail = (q == 0.0) ? TailBound{0.0, 0.0} : TailBound{tail_->coeff / q, q};
    }
    return TruncatedSeries(std::move(c), tail);
}

double TruncatedSeries::majorant_sum(double r, Weight weight, TailMode mode) const {
    if (!(r >= 0.0 && r < 1.0))
        throw std::domain_error("majorant_sum: r must be in [0,1)");
    double acc = 0.0;
    double rn = 1.0;
    switch (weight) {
    case Weight::plain:
        for (const cplx& c : coeffs_) {
            acc += std::abs(c) * rn;
            rn *= r;
        }
        break;
    case Weight::times_n:
        for (int n = 1; n <= order(); ++n) {
            acc += static_cast<double>(n) * std::abs(coeffs_[n]) * rn;
            rn *= r;
        }
        break;
    case Weight::squared:
        for (const cplx& c : coeffs_) {
            acc += std::norm(c) * rn;
            rn *= r;
        }
        break;
    }
    if (mode == TailMode::upper) acc += tail_correction(r, weight);
    return acc;
}

double TruncatedSeries::tail_correction(double r, Weight weight) const {
    if (!tail_) return 0.0;
    const double C = tail_->coeff;
    const double q = tail_->ratio;
    if (C == 0.0 || q == 0.0) return 0.0;
    const int N = order();
    switch (weight) {
    case Weight::plain: {
        const double x = q * r;
        return C * std::pow(x, N + 1) / (1.0 - x);
    }
    case Weight::times_n: {
        const double x = q * r;
        // sum_{n>N} n C q^n r^(n-1) = C q x^N (N+1 - N x) / (1-x)^2
        return C * q * std::pow(x, N) * ((N + 1) - N * x) / ((1.0 - x) * (1.0 - x));
    }
    case Weight::squared: {
        const double x = q * q * r;
        return C * C * std::pow(x, N + 1) / (1.0 - x);
    }
    }
    return 0.0;
}

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) {
    const int n = std::min(s.order(), t.order());
    std::vector<cplx> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = s.coeff(i) + t.coeff(i);
    std::optional<TailBound> tail;
    if (s.tail() && t.tail())
        tail = TailBound{s.tail()->coeff + t.tail()->coeff,
                         std::max(s.tail()->ratio, t.tail()->ratio)};
    return TruncatedSeries(std::move(c), tail);
}

TruncatedSeries subtract(const TruncatedSeries& s, const TruncatedSeries& t) {
    return add(s, scale(t, -1.0));
}

TruncatedSeries scale(const TruncatedSeries& s, cplx factor) {
    std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
    for (cplx& v : c) v *= factor;
    std::optional<TailBound> tail;
    if (s.tail()) tail = TailBound{std::abs(factor) * s.tail()->coeff, s.tail()->ratio};
    return TruncatedSeries(std::move(c), tail);
}

TruncatedSeries multiply(const TruncatedSeries& s, const TruncatedSeries& t) {
    const int n = std::min(s.order(), t.order());
    std::vector<cplx> c(n + 1);
    for (int i = 0; i <= n; ++i) {
        const cplx si = s.coeff(i);
        if (si == cplx{}) continue;
        for (int j = 0; i + j <= n; ++j) c[i + j] += si * t.coeff(j);
    }
    std::optional<TailBound> tail;
    if (s.tail() && t.tail()) {
        // Cauchy estimate on the product of the coefficient majorants. The
        // geometric midpoint rho = 1/sqrt(q_max) keeps both envelopes
        // bounded by the coefficient sums at the square-root radius.
        const double qmax = std::max(s.tail()->ratio, t.tail()->ratio);
        const double rho = qmax > 0.0 ? 1.0 / std::sqrt(qmax) : 2.0;
        const double C = detail::envelope_value(s, rho) * detail::envelope_value(t, rho);
        if (std::isfinite(C)) tail = TailBound{C, 1.0 / rho};
    }
    return TruncatedSeries(std::move(c), tail);
}

TruncatedSeries divide(const TruncatedSeries& s, const TruncatedSeries& t) {
    if (t.coeff(0) == cplx{})
        throw std::domain_error("divide: divisor has zero constant term");
    const int n = std::min(s.order(), t.order());
    std::vector<cplx> q(n + 1);
    const cplx t0 = t.coeff(0);
    for (int i = 0; i <= n; ++i) {
        cplx acc = s.coeff(i);
        for (int j = 1; j <= i; ++j) acc -= t.coeff(j) * q[i - j];
        q[i] = acc / t0;
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries disk_automorphism(double a, int order) {
    if (!(a >= 0.0 && a < 1.0))
        throw std::invalid_argument("disk_automorphism: a must be in [0,1)");
    std::vector<cplx> c(order + 1);
    c[0] = a;
    const double lead = -(1.0 - a * a);
    double pw = 1.0;
    for (int n = 1; n <= order; ++n) {
        c[n] = lead * pw;
        pw *= a;
    }
    const TailBound tail = a > 0.0 ? TailBound{(1.0 - a * a) / a, a} : TailBound{0.0, 0.0};
    return TruncatedSeries(std::move(c), tail);
}

namespace {

// (z - alpha)/(1 - conj(alpha) z): c_0 = -alpha, c_n = (1-|alpha|^2) conj(alpha)^(n-1)
TruncatedSeries blaschke_factor(cplx alpha, int order) {
    const double m = std::abs(alpha);
    if (!(m < 1.0))
        throw std::invalid_argument("blaschke_product: zero outside the unit disk");
    std::vector<cplx> c(order + 1);
    c[0] = -alpha;
    const double lead = 1.0 - m * m;
    cplx pw = 1.0;
    const cplx ac = std::conj(alpha);
    for (int n = 1; n <= order; ++n) {
        c[n] = lead * pw;
        pw *= ac;
    }
    const TailBound tail = m > 0.0 ? TailBound{(1.0 - m * m) / m, m} : TailBound{0.0, 0.0};
    return TruncatedSeries(std::move(c), tail);
}

} // namespace

TruncatedSeries blaschke_product(std::span<const cplx> zeros, cplx rotation, int order) {
    TruncatedSeries b = TruncatedSeries::constant(rotation, order);
    for (const cplx& z : zeros) b = multiply(b, blaschke_factor(z, order));
    return b;
}

namespace detail {

double peak_factor(double t) {
    if (t <= 0.0) return 1.0;
    if (!(t < 1.0)) throw std::invalid_argument("peak_factor: t must be in [0,1)");
    const double m_star = -1.0 / std::log(t) - 1.0;
    double best = 1.0; // m = 0
    for (double m : {std::floor(m_star), std::ceil(m_star)}) {
        if (m < 0.0) continue;
        best = std::max(best, (m + 1.0) * std::pow(t, m));
    }
    return best;
}

double envelope_value(const TruncatedSeries& s, double x) {
    double acc = 0.0;
    double xn = 1.0;
    for (const cplx& c : s.coeffs()) {
        const double a = std::abs(c);
        if (a != 0.0) acc += a * xn; // skip: 0 * inf would poison the sum
        xn *= x;
    }
    if (s.tail() && s.tail()->coeff > 0.0) {
        const double qx = s.tail()->ratio * x;
        if (!(qx < 1.0)) throw std::logic_error("envelope_value: q*x must be < 1");
        acc += s.tail()->coeff * std::pow(qx, s.order() + 1) / (1.0 - qx);
    }
    return acc;
}

} // namespace detail

} // namespace bohr
