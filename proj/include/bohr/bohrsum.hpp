#pragma once

#include <string>

#include "bohr/harmonic.hpp"
#include "bohr/kparam.hpp"

namespace bohr {

/// The majorant functionals, one per theorem family:
///   full:                |a_0| + sum (|a_n| + |b_n|) r^n            (n >= 1)
///   squared_constant:    |a_0|^2 + sum (|a_n| + |b_n|) r^n
///   no_first_b:          as full but requires b_1 = 0
///   derivative_weighted: (K+1)/(2K) sum (|a_n| + |b_n|) n r^(n-1)
///   euclidean:           |a_0| + sum sqrt(|a_n|^2 + |b_n|^2) r^n
///   p_symmetric:         sum (|a_n| + |b_n|) r^n on support {pm+1}
struct BohrKind {
    enum class Tag { full, squared_constant, no_first_b, derivative_weighted, euclidean, p_symmetric };
    Tag tag = Tag::full;
    KParam K{};
    int p = 2;

    static BohrKind Full() { return {Tag::full, {}, 2}; }
    static BohrKind SquaredConstant() { return {Tag::squared_constant, {}, 2}; }
    static BohrKind NoFirstB() { return {Tag::no_first_b, {}, 2}; }
    static BohrKind DerivativeWeighted(const KParam& K) { return {Tag::derivative_weighted, K, 2}; }
    static BohrKind Euclidean() { return {Tag::euclidean, {}, 2}; }
    static BohrKind PSymmetric(int p);

    std::string name() const;
};

/// Evaluate the selected functional at radius r in [0,1). Upper mode adds
/// the certified geometric tail corrections where tail bounds exist.
/// Support violations (p_symmetric, no_first_b) name the offending index.
double bohr_sum(const HarmonicMap& f, double r, const BohrKind& kind, TailMode mode);

/// The tail correction alone (0 where no tail bounds are attached).
double bohr_sum_tail(const HarmonicMap& f, double r, const BohrKind& kind);

} // namespace bohr
