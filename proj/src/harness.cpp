#include "bohr/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>

#include "bohr/bohrsum.hpp"
#include "bohr/scalar_solve.hpp"

namespace bohr {

bool check_lemma1(const TruncatedSeries& h, const TruncatedSeries& g, double k,
                  std::span<const double> r_grid) {
    for (double r : r_grid) {
        const double lhs =
            g.majorant_sum(r, Weight::squared, TailMode::truncated) - std::norm(g.coeff(0));
        const double rhs =
            h.majorant_sum(r, Weight::squared, TailMode::truncated) - std::norm(h.coeff(0));
        if (lhs > k * k * rhs * (1.0 + 1e-9) + 1e-15) return false;
    }
    return true;
}

bool check_lemma2(const TruncatedSeries& h, int p, std::span<const double> r_grid) {
    if (p < 1) throw std::invalid_argument("check_lemma2: p must be >= 1");
    for (int n = 0; n <= h.order(); ++n)
        if (n % p != 1 % p && h.coeff(n) != cplx{})
            throw std::domain_error("check_lemma2: support violated at index " + std::to_string(n));
    const double a1 = std::abs(h.coeff(1));
    for (double r : r_grid) {
        const double rp = std::pow(r, p);
        if (!(2.0 * rp * rp < 1.0))
            throw std::domain_error("check_lemma2: grid radius violates 2 r^2p < 1");
        const TailMode mode = h.tail() ? TailMode::upper : TailMode::truncated;
        const double sum = h.majorant_sum(r, Weight::plain, mode);
        const double bound = a1 >= rp
                                 ? (3.0 - 2.0 * std::sqrt(2.0) * std::sqrt(1.0 - rp * rp)) /
                                       std::pow(r, p - 1)
                                 : 2.0 * rp * r;
        if (sum > bound + 1e-9) return false;
        if (rp <= 1.0 / 3.0 && sum > std::max(2.0 * rp * r, r) + 1e-9) return false;
    }
    return true;
}

bool check_coefficient_bounds(const TruncatedSeries& h, CoeffBoundProfile profile) {
    double bound = 0.0;
    switch (profile) {
    case CoeffBoundProfile::bounded: {
        const double a0 = std::abs(h.coeff(0));
        bound = 1.0 - a0 * a0;
        break;
    }
    case CoeffBoundProfile::halfplane: {
        const cplx a0 = h.coeff(0);
        if (std::abs(a0.imag()) > 1e-12 || !(a0.real() > 0.0 && a0.real() < 1.0))
            throw std::domain_error("check_coefficient_bounds: halfplane needs a_0 real in (0,1)");
        bound = 2.0 * (1.0 - a0.real());
        break;
    }
    }
    for (int n = 1; n <= h.order(); ++n)
        if (std::abs(h.coeff(n)) > bound + 1e-9) return false;
    return true;
}

double parseval_relative_gap(const TruncatedSeries& s, double r, int nodes) {
    if (nodes < 2) throw std::invalid_argument("parseval_relative_gap: need >= 2 nodes");
    double quad = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double th = 2.0 * std::numbers::pi * j / nodes;
        quad += std::norm(s.eval(cplx{r * std::cos(th), r * std::sin(th)}));
    }
    quad *= 2.0 * std::numbers::pi / nodes;
    const double exact = 2.0 * std::numbers::pi * s.majorant_sum(r * r, Weight::squared,
                                                                 TailMode::truncated);
    const double denom = std::max(exact, 1e-300);
    return std::abs(quad - exact) / denom;
}

namespace {

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    int count(int lo, int hi) { return lo + static_cast<int>(gen() % (hi - lo + 1)); }
    cplx unimodular() {
        const double th = 2.0 * std::numbers::pi * unit();
        return {std::cos(th), std::sin(th)};
    }
    cplx in_disk(double max_radius) { return max_radius * unit() * unimodular(); }
};

// Theorem-4 corpus: independent bounded pairs with h(0) = g(0) = 0 and
// sup norms exactly 1.
HarmonicMap bounded_pair_instance(std::uint64_t seed, int order) {
    Rng rng(seed);
    auto draw = [&]() {
        std::vector<cplx> zeros(rng.count(1, 4));
        zeros[0] = 0.0;
        for (std::size_t i = 1; i < zeros.size(); ++i) zeros[i] = rng.in_disk(0.8);
        return blaschke_product(zeros, rng.unimodular(), order);
    };
    TruncatedSeries h = draw();
    TruncatedSeries g = draw();
    return HarmonicMap(std::move(h), std::move(g));
}

std::vector<double> family_a_grid(double hi_cap) {
    std::vector<double> grid;
    for (double a = 0.05; a < 0.9; a += 0.05) grid.push_back(a * hi_cap / 0.9999);
    // log-spaced approach toward the degenerate end
    for (int i = 0; i <= 23; ++i) {
        const double t = 0.1 + (6.0 - 0.1) * i / 23.0;
        grid.push_back(hi_cap * (1.0 - std::pow(10.0, -t)));
    }
    std::sort(grid.begin(), grid.end());
    return grid;
}

struct BracketSetup {
    BohrKind kind;
    InstanceProfile profile;
    bool custom_pair_corpus = false;
    int corpus_order;
    std::vector<double> family_a;
    std::function<HarmonicMap(double, int)> family_build;
    std::function<double(double)> family_threshold; // exact/solved, by a
    double sharp_point; // where the family degenerates to the bound
};

double t2_threshold(double a, double k) { return 1.0 / (1.0 + k + a); }

} // namespace

SharpnessReport sharpness_bracket(const RadiusSpec& spec, double eps, int instance_count,
                                  std::uint64_t seed, int order) {
    if (!(eps > 0.0)) throw std::invalid_argument("sharpness_bracket: eps must be > 0");
    const KParam K = spec.K;
    const double k = K.k();
    // finite stand-in only for instance generation; radii and families use
    // the exact limit
    const double gen_K = K.is_limit ? 1e6 : K.value;

    SharpnessReport rep;
    rep.spec = spec.name() + (spec.uses_K() ? "(K=" + K.str() + ")" : "");
    rep.epsilon = eps;
    rep.bound = 1.0;

    BracketSetup setup{BohrKind::Full(), InstanceProfile::bounded(), false, order, {}, {}, {}, 0.0};
    switch (spec.id) {
    case SpecId::thm1:
        rep.radius = closed_form_radius(spec);
        setup.kind = BohrKind::Full();
        setup.profile = InstanceProfile::qc(gen_K);
        setup.family_a = family_a_grid(1.0 - 1e-7);
        setup.family_build = [&](double a, int n) { return build(FamilySpec::T1(a, k), n); };
        setup.family_threshold = [&](double a) { return t1_threshold(a, k); };
        setup.sharp_point = rep.radius;
        break;
    case SpecId::thm2:
        rep.radius = closed_form_radius(spec);
        setup.kind = BohrKind::SquaredConstant();
        setup.profile = InstanceProfile::qc(gen_K);
        setup.family_a = family_a_grid(1.0 - 1e-7);
        setup.family_build = [&](double a, int n) { return build(FamilySpec::T1(a, k), n); };
        setup.family_threshold = [&](double a) { return t2_threshold(a, k); };
        setup.sharp_point = rep.radius;
        break;
    case SpecId::thm3:
        rep.radius = closed_form_radius(spec);
        setup.kind = BohrKind::Full();
        setup.profile = InstanceProfile::halfplane(gen_K);
        setup.corpus_order = 512; // no tail bounds on this corpus; see `certified`
        setup.family_a = family_a_grid(1.0 - 1e-7);
        setup.family_build = [&](double a, int n) { return build(FamilySpec::T3(a, k), n); };
        setup.family_threshold = [&](double a) { return t1_threshold(a, k); };
        setup.sharp_point = rep.radius;
        break;
    case SpecId::thm4: {
        rep.radius = closed_form_radius({SpecId::thm4});
        setup.kind = BohrKind::Full();
        setup.custom_pair_corpus = true;
        setup.family_a = family_a_grid(1.0 - 1e-4);
        setup.family_a.push_back(3.0 / std::sqrt(14.0)); // the degenerate member
        std::sort(setup.family_a.begin(), setup.family_a.end());
        setup.family_build = [](double a, int n) { return build(FamilySpec::T4(a), n); };
        setup.family_threshold = [](double a) {
            auto fn = [&](double r) {
                return family_bohr_closed_form(FamilySpec::T4(a), r) - 1.0;
            };
            const auto [lo, hi] = bisect_root(fn, 1e-9, 1.0 - 1e-9, 1e-13);
            return 0.5 * (lo + hi);
        };
        setup.sharp_point = rep.radius;
        break;
    }
    case SpecId::thm5:
        rep.radius = 0.5;
        setup.kind = BohrKind::PSymmetric(spec.p);
        setup.profile = InstanceProfile::psymmetric(spec.p);
        setup.family_a = {0.0}; // single member f = z + conj(z)
        setup.family_build = [](double, int n) { return build(FamilySpec::T5(), n); };
        setup.family_threshold = [](double) { return 0.5; };
        setup.sharp_point = 0.5;
        break;
    case SpecId::thm8_lower: {
        rep.radius = radius_of({SpecId::thm8_lower}).value;
        setup.kind = BohrKind::Full();
        setup.profile = InstanceProfile::bloch();
        for (double a = 0.02; a < 1.0 / std::sqrt(3.0) - 1e-3; a += 0.02)
            setup.family_a.push_back(a);
        setup.family_build = [](double a, int n) { return build(FamilySpec::T8(a), n); };
        setup.family_threshold = [](double a) { return bloch_threshold(a); };
        const BlochSearchResult bs = bloch_sharpness_search();
        setup.family_a.push_back(bs.a_star);
        setup.sharp_point = bs.r_star;
        break;
    }
    default:
        throw std::invalid_argument("sharpness_bracket: unsupported spec " + spec.name());
    }

    // below: corpus and family sums at r = radius must stay within the bound
    rep.below_max = 0.0;
    rep.tail_max = 0.0;
    rep.certified = true;
    for (int i = 0; i < instance_count; ++i) {
        const HarmonicMap f =
            setup.custom_pair_corpus
                ? bounded_pair_instance(seed + static_cast<std::uint64_t>(i), setup.corpus_order)
                : generate_instance(seed + static_cast<std::uint64_t>(i), setup.profile,
                                    setup.corpus_order);
        if (!f.h().tail() || !f.g().tail()) rep.certified = false;
        rep.below_max = std::max(rep.below_max, bohr_sum(f, rep.radius, setup.kind, TailMode::upper));
        rep.tail_max = std::max(rep.tail_max, bohr_sum_tail(f, rep.radius, setup.kind));
    }
    for (double a : setup.family_a) {
        const HarmonicMap f = setup.family_build(a, order);
        rep.below_max = std::max(rep.below_max, bohr_sum(f, rep.radius, setup.kind, TailMode::upper));
        rep.tail_max = std::max(rep.tail_max, bohr_sum_tail(f, rep.radius, setup.kind));
    }
    rep.instance_count = instance_count + static_cast<int>(setup.family_a.size());

    // above: explicit family witness just past the sharpness point
    double best_threshold = setup.family_threshold(setup.family_a.back());
    double best_a = setup.family_a.back();
    for (double a : setup.family_a) {
        const double t = setup.family_threshold(a);
        if (t < best_threshold) {
            best_threshold = t;
            best_a = a;
        }
    }
    const double witness_r = std::min(std::max(rep.radius, setup.sharp_point) + eps, 1.0 - 1e-9);
    double witness_sum = 0.0;
    double witness_a = best_a;
    for (double a : setup.family_a) {
        const HarmonicMap f = setup.family_build(a, order);
        const double s = bohr_sum(f, witness_r, setup.kind, TailMode::truncated);
        if (s > witness_sum) {
            witness_sum = s;
            witness_a = a;
        }
    }
    rep.witness = WitnessInfo{witness_sum > rep.bound, witness_a, k, witness_r, witness_sum};
    rep.min_epsilon = std::max(0.0, best_threshold - rep.radius);
    return rep;
}

} // namespace bohr
