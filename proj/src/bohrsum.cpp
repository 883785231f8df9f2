#include "bohr/bohrsum.hpp"

#include <cmath>
#include <stdexcept>

namespace bohr {

BohrKind BohrKind::PSymmetric(int p) {
    if (p < 2) throw std::invalid_argument("BohrKind: p must be >= 2");
    return {Tag::p_symmetric, {}, p};
}

std::string BohrKind::name() const {
    switch (tag) {
    case Tag::full: return "Full";
    case Tag::squared_constant: return "SquaredConstant";
    case Tag::no_first_b: return "NoFirstB";
    case Tag::derivative_weighted: return "DerivativeWeighted(K=" + K.str() + ")";
    case Tag::euclidean: return "Euclidean";
    case Tag::p_symmetric: return "PSymmetric(p=" + std::to_string(p) + ")";
    }
    return "?";
}

namespace {

void require_zero(const TruncatedSeries& s, int index, const char* part, const char* why) {
    if (s.coeff(index) != cplx{})
        throw std::domain_error(std::string("bohr_sum: ") + why + ": nonzero " + part +
                                " coefficient at index " + std::to_string(index));
}

void require_p_support(const TruncatedSeries& s, int p, const char* part) {
    for (int n = 0; n <= s.order(); ++n) {
        if (n % p == 1) continue;
        if (s.coeff(n) != cplx{})
            throw std::domain_error(std::string("bohr_sum: p-symmetric support violated: nonzero ") +
                                    part + " coefficient at index " + std::to_string(n));
    }
}

} // namespace

double bohr_sum(const HarmonicMap& f, double r, const BohrKind& kind, TailMode mode) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("bohr_sum: r must be in [0,1)");
    const TruncatedSeries& h = f.h();
    const TruncatedSeries& g = f.g();
    switch (kind.tag) {
    case BohrKind::Tag::full:
        return h.majorant_sum(r, Weight::plain, mode) + g.majorant_sum(r, Weight::plain, mode);
    case BohrKind::Tag::squared_constant: {
        const double a0 = std::abs(h.coeff(0));
        return a0 * a0 - a0 + h.majorant_sum(r, Weight::plain, mode) +
               g.majorant_sum(r, Weight::plain, mode);
    }
    case BohrKind::Tag::no_first_b:
        require_zero(g, 1, "g", "NoFirstB requires b_1 = 0");
        return h.majorant_sum(r, Weight::plain, mode) + g.majorant_sum(r, Weight::plain, mode);
    case BohrKind::Tag::derivative_weighted: {
        const double pref = kind.K.is_limit ? 0.5 : (kind.K.value + 1.0) / (2.0 * kind.K.value);
        return pref * (h.majorant_sum(r, Weight::times_n, mode) +
                       g.majorant_sum(r, Weight::times_n, mode));
    }
    case BohrKind::Tag::euclidean: {
        double acc = std::abs(h.coeff(0));
        double rn = r;
        for (int n = 1; n <= f.order(); ++n) {
            acc += std::hypot(std::abs(h.coeff(n)), std::abs(g.coeff(n))) * rn;
            rn *= r;
        }
        if (mode == TailMode::upper) acc += bohr_sum_tail(f, r, kind);
        return acc;
    }
    case BohrKind::Tag::p_symmetric:
        require_p_support(h, kind.p, "h");
        require_p_support(g, kind.p, "g");
        return h.majorant_sum(r, Weight::plain, mode) + g.majorant_sum(r, Weight::plain, mode);
    }
    throw std::logic_error("bohr_sum: unknown kind");
}

double bohr_sum_tail(const HarmonicMap& f, double r, const BohrKind& kind) {
    const TruncatedSeries& h = f.h();
    const TruncatedSeries& g = f.g();
    switch (kind.tag) {
    case BohrKind::Tag::derivative_weighted: {
        const double pref = kind.K.is_limit ? 0.5 : (kind.K.value + 1.0) / (2.0 * kind.K.value);
        return pref *
               (h.tail_correction(r, Weight::times_n) + g.tail_correction(r, Weight::times_n));
    }
    default:
        // plain-weight envelope; for the euclidean kind it over-covers since
        // sqrt(x^2+y^2) <= x+y
        return h.tail_correction(r, Weight::plain) + g.tail_correction(r, Weight::plain);
    }
}

} // namespace bohr
