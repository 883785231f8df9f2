#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bohr/harness.hpp"

using namespace bohr;

namespace {
const std::vector<double> r_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
std::vector<double> r_grid_lemma2() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8}; }
} // namespace

TEST_CASE("lemma1 check: equality case, zero case, generated corpus") {
    const TruncatedSeries h = disk_automorphism(0.6, 128);
    const TruncatedSeries g = scale(h, 0.4);
    CHECK(check_lemma1(h, g, 0.4, r_grid)); // b_n = k a_n, equality throughout
    CHECK(check_lemma1(h, TruncatedSeries::zero(128), 0.0, r_grid));
    // a genuine violation is caught: k understated
    CHECK_FALSE(check_lemma1(h, g, 0.2, r_grid));

    const double k = QcParams::from_K(2.0).k;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const HarmonicMap f = generate_instance(seed, InstanceProfile::qc(2.0), 256);
        CHECK(check_lemma1(f.h(), f.g(), k, r_grid));
    }
}

TEST_CASE("lemma2 check: identity map, branch boundary, generated corpus") {
    // h(z) = z: sum = r <= max{2 r^(p+1), r} always
    const TruncatedSeries ident = TruncatedSeries::monomial(1, 64);
    CHECK(check_lemma2(ident, 3, r_grid_lemma2()));

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const HarmonicMap f = generate_instance(seed, InstanceProfile::psymmetric(2), 256);
        CHECK(check_lemma2(f.h(), 2, r_grid_lemma2()));
    }
}

TEST_CASE("lemma2 at p = 1: the bound degenerates to 1/2 exactly at sqrt(7/32)") {
    // h = z(a-z)/(1-az) at a = 3/sqrt(14): its coefficient sum at the
    // threshold radius equals the bound value 1/2
    const double a = 3.0 / std::sqrt(14.0);
    const HarmonicMap f = build(FamilySpec::T4(a), default_order);
    const double r = std::sqrt(7.0 / 32.0);
    const double bound = 3.0 - 2.0 * std::sqrt(2.0) * std::sqrt(1.0 - r * r);
    CHECK(bound == doctest::Approx(0.5).epsilon(1e-12));
    const double sum = f.h().majorant_sum(r, Weight::plain, TailMode::truncated);
    CHECK(sum == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(std::abs(f.h().coeff(1)) >= r); // first branch applies
    CHECK(check_lemma2(f.h(), 1, std::vector<double>{0.1, 0.3, r, 0.6}));
}

TEST_CASE("lemma2 error paths") {
    CHECK_THROWS_AS(check_lemma2(TruncatedSeries::monomial(2, 8), 2, r_grid_lemma2()),
                    std::domain_error); // support violation
    CHECK_THROWS_AS(check_lemma2(TruncatedSeries::monomial(1, 8), 1, std::vector<double>{0.9}),
                    std::domain_error); // 2 r^2p >= 1
}

TEST_CASE("coefficient bounds: equality family and vacuous case") {
    // |a_n| = (1-a^2) a^(n-1) <= 1-a^2, equality at n = 1
    for (double a : {0.0, 0.3, 0.8}) CHECK(check_coefficient_bounds(disk_automorphism(a, 64),
                                                                    CoeffBoundProfile::bounded));
    CHECK(check_coefficient_bounds(TruncatedSeries::constant(0.7, 32),
                                   CoeffBoundProfile::bounded));
    // violation: coefficients of 2z exceed 1 - 0
    CHECK_FALSE(check_coefficient_bounds(scale(TruncatedSeries::monomial(1, 8), 2.0),
                                         CoeffBoundProfile::bounded));

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const HarmonicMap f = generate_instance(seed, InstanceProfile::bounded(), 256);
        CHECK(check_coefficient_bounds(f.h(), CoeffBoundProfile::bounded));
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const HarmonicMap f = generate_instance(seed, InstanceProfile::halfplane(), 256);
        CHECK(check_coefficient_bounds(f.h(), CoeffBoundProfile::halfplane));
    }
}

TEST_CASE("parseval: trapezoid circle quadrature matches the coefficient sum") {
    std::mt19937_64 gen(99);
    auto unit = [&]() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<cplx> c(65);
        for (auto& v : c) {
            const double th = 2.0 * std::numbers::pi * unit();
            v = unit() * cplx{std::cos(th), std::sin(th)};
        }
        const TruncatedSeries s(std::move(c));
        const double r = 0.1 + 0.85 * unit();
        CHECK(parseval_relative_gap(s, r, 130) < 1e-10);
    }
    // degenerate zero series: gap must report 0, not NaN
    CHECK(parseval_relative_gap(TruncatedSeries::zero(16), 0.5, 40) == 0.0);
}

TEST_CASE("sharpness bracket: quasiconformal theorem at K = 2") {
    const SharpnessReport rep =
        sharpness_bracket({SpecId::thm1, KParam::finite(2.0)}, 1e-2, 40, 7, default_order);
    CHECK(rep.radius == doctest::Approx(3.0 / 11.0));
    CHECK(rep.below_max <= 1.0 + 1e-9);
    CHECK(rep.certified);
    CHECK(rep.witness.found);
    CHECK(rep.witness.sum > 1.0);
    CHECK(rep.witness.r == doctest::Approx(3.0 / 11.0 + 1e-2));
    CHECK(rep.min_epsilon < 1e-5);
    CHECK(rep.ok());
}

TEST_CASE("sharpness bracket: the fold map makes 1/2 sharp with sum 1 + 2 eps") {
    const SharpnessReport rep = sharpness_bracket({SpecId::thm5}, 1e-2, 20, 7, 64);
    CHECK(rep.radius == 0.5);
    CHECK(rep.witness.sum == doctest::Approx(1.0 + 2e-2).epsilon(1e-12));
    CHECK(rep.ok());
}

TEST_CASE("sharpness bracket: bloch pair reports the gap between bounds") {
    const SharpnessReport rep = sharpness_bracket({SpecId::thm8_lower}, 1e-2, 20, 7, default_order);
    CHECK(rep.radius == doctest::Approx(0.55356).epsilon(1e-4));
    CHECK(rep.below_max <= 1.0 + 1e-9);
    CHECK(rep.witness.found);
    CHECK(rep.witness.r == doctest::Approx(0.624162 + 1e-2).epsilon(1e-3));
    CHECK(rep.witness.sum > 1.0);
    // the witness only exists past the sharpness point, not right above the radius
    CHECK(rep.min_epsilon == doctest::Approx(0.624162 - 0.553567).epsilon(1e-3));
}

TEST_CASE("sharpness bracket: reproducibility is bit-exact") {
    const auto r1 = sharpness_bracket({SpecId::thm2, KParam::finite(2.0)}, 1e-2, 25, 11, 128);
    const auto r2 = sharpness_bracket({SpecId::thm2, KParam::finite(2.0)}, 1e-2, 25, 11, 128);
    CHECK(r1.below_max == r2.below_max);
    CHECK(r1.witness.sum == r2.witness.sum);
    CHECK(r1.witness.a == r2.witness.a);
}

TEST_CASE("sharpness bracket rejects unsupported ids and bad eps") {
    CHECK_THROWS_AS(sharpness_bracket({SpecId::cor1a}, 1e-2, 10, 7, 64), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_bracket({SpecId::thm5}, 0.0, 10, 7, 64), std::invalid_argument);
}
