#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bohr/bohrsum.hpp"
#include "bohr/extremal.hpp"
#include "bohr/radii.hpp"

using namespace bohr;

TEST_CASE("z + conj(z) under the p-symmetric functional: 1/2 maps to 1") {
    const HarmonicMap f = build(FamilySpec::T5(), 16);
    CHECK(bohr_sum(f, 0.5, BohrKind::PSymmetric(2), TailMode::truncated) == doctest::Approx(1.0));
    CHECK(bohr_sum(f, 0.5, BohrKind::PSymmetric(5), TailMode::truncated) == doctest::Approx(1.0));
}

TEST_CASE("T1 family full sum matches a + (1-a^2)(1+k) r/(1-ar) within the tail") {
    for (double a : {0.3, 0.7, 0.95}) {
        for (double k : {0.0, 0.4, 1.0}) {
            const HarmonicMap f = build(FamilySpec::T1(a, k), default_order);
            for (double r : {0.1, 0.3, 0.6}) {
                const double closed = a + (1.0 - a * a) * (1.0 + k) * r / (1.0 - a * r);
                const double lower = bohr_sum(f, r, BohrKind::Full(), TailMode::truncated);
                const double upper = bohr_sum(f, r, BohrKind::Full(), TailMode::upper);
                CHECK(lower <= closed + 1e-12);
                CHECK(upper >= closed - 1e-12);
            }
        }
    }
}

TEST_CASE("zero map gives zero under every kind") {
    const HarmonicMap f(TruncatedSeries::zero(16), TruncatedSeries::zero(16));
    for (const BohrKind& kind :
         {BohrKind::Full(), BohrKind::SquaredConstant(), BohrKind::NoFirstB(),
          BohrKind::DerivativeWeighted(KParam::finite(2.0)), BohrKind::Euclidean(),
          BohrKind::PSymmetric(2)}) {
        CHECK(bohr_sum(f, 0.5, kind, TailMode::truncated) == 0.0);
    }
}

TEST_CASE("T4 family at a = 3/sqrt(14), r = sqrt(7/32) sums to exactly 1") {
    const double a = 3.0 / std::sqrt(14.0);
    const double r = std::sqrt(7.0 / 32.0);
    const HarmonicMap f = build(FamilySpec::T4(a), default_order);
    CHECK(std::abs(family_bohr_closed_form(FamilySpec::T4(a), r) - 1.0) < 1e-12);
    CHECK(bohr_sum(f, r, BohrKind::Full(), TailMode::upper) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bohr_sum is strictly increasing in r for nonconstant maps") {
    for (std::uint64_t seed : {10u, 20u, 30u}) {
        const HarmonicMap f = generate_instance(seed, InstanceProfile::bounded(), 128);
        for (const BohrKind& kind : {BohrKind::Full(), BohrKind::Euclidean()}) {
            double prev = bohr_sum(f, 0.0, kind, TailMode::truncated);
            for (double r = 0.1; r < 1.0; r += 0.1) {
                const double cur = bohr_sum(f, r, kind, TailMode::truncated);
                CHECK(cur > prev);
                prev = cur;
            }
        }
    }
}

TEST_CASE("Full dominates SquaredConstant (|a_0| <= 1) and Euclidean") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        const HarmonicMap f = generate_instance(seed, InstanceProfile::bounded(), 128);
        for (double r : {0.2, 0.5, 0.8}) {
            const double full = bohr_sum(f, r, BohrKind::Full(), TailMode::truncated);
            CHECK(full >= bohr_sum(f, r, BohrKind::SquaredConstant(), TailMode::truncated) - 1e-12);
            CHECK(full >= bohr_sum(f, r, BohrKind::Euclidean(), TailMode::truncated) - 1e-12);
        }
    }
    // equality of Full and SquaredConstant iff |a_0| in {0, 1}
    const HarmonicMap no_const(TruncatedSeries::monomial(1, 8), TruncatedSeries::zero(8));
    CHECK(bohr_sum(no_const, 0.5, BohrKind::Full(), TailMode::truncated) ==
          bohr_sum(no_const, 0.5, BohrKind::SquaredConstant(), TailMode::truncated));
}

TEST_CASE("theorem-level bound check on generated qc instances") {
    for (double K : {1.0, 2.0, 5.0}) {
        const double r1 = closed_form_radius({SpecId::thm1, KParam::finite(K)});
        const double r2 = closed_form_radius({SpecId::thm2, KParam::finite(K)});
        for (std::uint64_t seed = 50; seed < 70; ++seed) {
            const HarmonicMap f = generate_instance(seed, InstanceProfile::qc(K), default_order);
            CHECK(bohr_sum(f, r1, BohrKind::Full(), TailMode::upper) <= 1.0 + 1e-9);
            CHECK(bohr_sum(f, r2, BohrKind::SquaredConstant(), TailMode::upper) <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("derivative-weighted kind carries the (K+1)/(2K) prefactor") {
    // h = z: sum = prefactor * 1, independent of r
    const HarmonicMap f(TruncatedSeries::monomial(1, 8), TruncatedSeries::zero(8));
    const double v1 = bohr_sum(f, 0.3, BohrKind::DerivativeWeighted(KParam::finite(1.0)),
                               TailMode::truncated);
    CHECK(v1 == doctest::Approx(1.0));
    const double vinf =
        bohr_sum(f, 0.3, BohrKind::DerivativeWeighted(KParam::limit()), TailMode::truncated);
    CHECK(vinf == doctest::Approx(0.5));
    // bound is ||h'||_inf = 1 up to r = 1/3 for the identity map
    CHECK(v1 <= 1.0 + 1e-12);
}

TEST_CASE("support violations name the offending index") {
    const HarmonicMap f(TruncatedSeries::monomial(2, 8), TruncatedSeries::zero(8));
    CHECK_THROWS_WITH_AS(bohr_sum(f, 0.5, BohrKind::PSymmetric(2), TailMode::truncated),
                         doctest::Contains("index 2"), std::domain_error);

    const HarmonicMap g1(TruncatedSeries::monomial(1, 8), TruncatedSeries::monomial(1, 8));
    CHECK_THROWS_WITH_AS(bohr_sum(g1, 0.5, BohrKind::NoFirstB(), TailMode::truncated),
                         doctest::Contains("index 1"), std::domain_error);

    CHECK_THROWS_AS(bohr_sum(f, 1.0, BohrKind::Full(), TailMode::truncated), std::domain_error);
    CHECK_THROWS_AS(BohrKind::PSymmetric(1), std::invalid_argument);
}

TEST_CASE("NoFirstB accepts the T6 family (b_1 = 0 by construction)") {
    const HarmonicMap f = build(FamilySpec::T6(0.5, 0.5), 64);
    CHECK(f.g().coeff(1) == cplx{0.0, 0.0});
    CHECK_NOTHROW(bohr_sum(f, 0.3, BohrKind::NoFirstB(), TailMode::upper));
}
