#include "bohr/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace bohr {

HarmonicMap::HarmonicMap(TruncatedSeries h, TruncatedSeries g)
    : h_(std::move(h)), g_(std::move(g)) {
    if (h_.order() != g_.order())
        throw std::invalid_argument("HarmonicMap: h and g must share a truncation order");
    if (g_.coeff(0) != cplx{})
        throw std::invalid_argument("HarmonicMap: g(0) must be 0");
}

QcParams QcParams::from_K(double K) {
    if (!(K >= 1.0)) throw std::invalid_argument("QcParams: K must be >= 1");
    return {K, (K - 1.0) / (K + 1.0)};
}

QcParams QcParams::from_k(double k) {
    if (!(k >= 0.0 && k < 1.0)) throw std::invalid_argument("QcParams: k must be in [0,1)");
    return {(1.0 + k) / (1.0 - k), k};
}

std::vector<cplx> PolarGrid::points() const {
    std::vector<cplx> pts;
    pts.reserve(static_cast<std::size_t>(radii) * angles + 1);
    pts.emplace_back(0.0, 0.0);
    for (int j = 1; j <= radii; ++j) {
        const double r = r_max * j / (radii + 1.0);
        for (int i = 0; i < angles; ++i) {
            const double th = 2.0 * std::numbers::pi * i / angles;
            pts.emplace_back(r * std::cos(th), r * std::sin(th));
        }
    }
    return pts;
}

TruncatedSeries dilatation(const HarmonicMap& f) {
    const TruncatedSeries hp = f.h().derivative();
    if (hp.coeff(0) == cplx{})
        throw std::domain_error("dilatation: h'(0) = 0, quotient series undefined");
    return divide(f.g().derivative(), hp);
}

double qc_constant(const HarmonicMap& f, const PolarGrid& grid) {
    const TruncatedSeries hp = f.h().derivative();
    const TruncatedSeries gp = f.g().derivative();
    double sup = 1.0;
    for (const cplx& z : grid.points()) {
        const double ah = std::abs(hp.eval(z));
        const double ag = std::abs(gp.eval(z));
        if (!(ag < ah))
            throw std::domain_error("qc_constant: |omega| >= 1 at a grid point, not sense-preserving there");
        const double w = ag / ah;
        sup = std::max(sup, (1.0 + w) / (1.0 - w));
    }
    return sup;
}

bool is_sense_preserving(const HarmonicMap& f, const PolarGrid& grid) {
    const TruncatedSeries hp = f.h().derivative();
    const TruncatedSeries gp = f.g().derivative();
    for (const cplx& z : grid.points()) {
        const double jac = std::norm(hp.eval(z)) - std::norm(gp.eval(z));
        if (!(jac > 0.0)) return false;
    }
    // J_f > 0 needs h' zero-free; an isolated zero slips through point
    // sampling, so count zeros of h' inside the outermost circle by the
    // argument principle.
    const double r = grid.outermost_radius();
    const int m = 4 * grid.angles;
    double winding = 0.0;
    cplx prev = hp.eval(cplx{r, 0.0});
    if (prev == cplx{}) return false;
    for (int i = 1; i <= m; ++i) {
        const double th = 2.0 * std::numbers::pi * i / m;
        const cplx cur = hp.eval(cplx{r * std::cos(th), r * std::sin(th)});
        if (cur == cplx{}) return false;
        winding += std::arg(cur / prev);
        prev = cur;
    }
    return std::lround(winding / (2.0 * std::numbers::pi)) == 0;
}

double sup_norm_lower(const TruncatedSeries& s, const PolarGrid& grid) {
    double sup = 0.0;
    for (const cplx& z : grid.points()) sup = std::max(sup, std::abs(s.eval(z)));
    return sup;
}

double bloch_norm(const HarmonicMap& f, const PolarGrid& grid) {
    const TruncatedSeries hp = f.h().derivative();
    const TruncatedSeries gp = f.g().derivative();
    double sup = 0.0;
    for (const cplx& z : grid.points()) {
        const double lam = std::abs(hp.eval(z)) + std::abs(gp.eval(z));
        sup = std::max(sup, (1.0 - std::norm(z)) * lam);
    }
    return std::abs(f.h().coeff(0)) + sup;
}

InstanceProfile InstanceProfile::psymmetric(int p) {
    if (p < 2) throw std::invalid_argument("psymmetric profile: p must be >= 2");
    return {Kind::psymmetric, 1.0, p};
}

InstanceProfile InstanceProfile::qc(double K) {
    if (!(K >= 1.0)) throw std::invalid_argument("qc profile: K must be >= 1");
    return {Kind::qc, K, 2};
}

namespace {

// Hand-rolled draws on top of mt19937_64 so instances are bit-identical
// across platforms (std distributions are implementation-defined).
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
    int count(int lo, int hi) { return lo + static_cast<int>(gen() % (hi - lo + 1)); }
    cplx unimodular() {
        const double th = 2.0 * std::numbers::pi * unit();
        return {std::cos(th), std::sin(th)};
    }
    cplx in_disk(double max_radius) { return range(0.0, max_radius) * unimodular(); }
};

std::vector<cplx> draw_zeros(Rng& rng, int lo, int hi, double max_radius) {
    std::vector<cplx> zeros(rng.count(lo, hi));
    for (cplx& z : zeros) z = rng.in_disk(max_radius);
    return zeros;
}

// g with g' = omega h', omega = k_bound * random Blaschke, |omega| <= k_bound.
TruncatedSeries draw_dilatation_g(Rng& rng, const TruncatedSeries& h, double k_bound) {
    const auto zeros = draw_zeros(rng, 0, 2, 0.8);
    const TruncatedSeries omega =
        scale(blaschke_product(zeros, rng.unimodular(), h.order() - 1), k_bound);
    return multiply(omega, h.derivative()).integrate_from_zero();
}

HarmonicMap make_bounded(Rng& rng, double k_bound, int order) {
    const auto zeros = draw_zeros(rng, 1, 4, 0.8);
    TruncatedSeries h = blaschke_product(zeros, rng.unimodular(), order);
    TruncatedSeries g = draw_dilatation_g(rng, h, k_bound);
    return HarmonicMap(std::move(h), std::move(g));
}

HarmonicMap make_halfplane(Rng& rng, double k_bound, int order) {
    std::vector<cplx> zeros = draw_zeros(rng, 0, 2, 0.8);
    zeros.insert(zeros.begin(), cplx{0.0, 0.0}); // B(0) = 0 keeps h(0) real
    const TruncatedSeries B = blaschke_product(zeros, rng.unimodular(), order);
    const double rho = rng.range(0.0, 0.9);
    const double c = rng.range(0.05, 0.95);
    const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
    const TruncatedSeries q = divide(add(one, B), subtract(one, scale(B, rho)));
    TruncatedSeries h = subtract(one, scale(q, c));
    TruncatedSeries g = draw_dilatation_g(rng, h, k_bound);
    return HarmonicMap(std::move(h), std::move(g));
}

HarmonicMap make_psymmetric(Rng& rng, int p, int order) {
    const int phi_order = (order - 1) / p;
    const auto zeros = draw_zeros(rng, 0, 2, 0.8);
    const TruncatedSeries phi = blaschke_product(zeros, rng.unimodular(), phi_order);
    // h(z) = z phi(z^p): coefficient at p*m+1 is phi_m
    std::vector<cplx> hc(order + 1);
    for (int m = 0; m <= phi_order; ++m) hc[p * m + 1] = phi.coeff(m);
    std::optional<TailBound> tail;
    if (phi.tail()) {
        const double q = phi.tail()->ratio;
        // |h_{pm+1}| = |phi_m| <= C q^m = (C q^(-1/p)) (q^(1/p))^(pm+1)
        tail = (q == 0.0) ? TailBound{0.0, 0.0}
                          : TailBound{phi.tail()->coeff * std::pow(q, -1.0 / p),
                                      std::pow(q, 1.0 / p)};
    }
    TruncatedSeries h(std::move(hc), tail);
    // g' = c z^p h' keeps the support p-symmetric and |omega| = |c||z|^p < 1
    const cplx c = rng.range(0.0, 0.9) * rng.unimodular();
    TruncatedSeries g =
        scale(multiply(TruncatedSeries::monomial(p, order - 1), h.derivative()), c)
            .integrate_from_zero();
    return HarmonicMap(std::move(h), std::move(g));
}

HarmonicMap make_bloch(Rng& rng, int order) {
    const int degree = rng.count(8, 24);
    std::vector<cplx> c(order + 1);
    for (int n = 1; n <= degree && n <= order; ++n)
        c[n] = rng.in_disk(1.0) / static_cast<double>(n);
    TruncatedSeries h0(std::move(c), TailBound{0.0, 0.0});
    const double a0 = rng.range(0.0, 0.7);
    const PolarGrid grid{};
    double sup = 0.0;
    const TruncatedSeries h0p = h0.derivative();
    for (const cplx& z : grid.points())
        sup = std::max(sup, (1.0 - std::norm(z)) * std::abs(h0p.eval(z)));
    // 0.98 margin keeps the true (off-grid) Bloch norm below 1
    const double factor = sup > 0.0 ? 0.98 * (1.0 - a0) / sup : 0.0;
    TruncatedSeries h = add(TruncatedSeries::constant(a0, order), scale(h0, factor));
    return HarmonicMap(std::move(h), TruncatedSeries::zero(order));
}

} // namespace

HarmonicMap generate_instance(std::uint64_t seed, const InstanceProfile& profile, int order) {
    if (order < 4) throw std::invalid_argument("generate_instance: order too small");
    Rng rng(seed);
    switch (profile.kind) {
    case InstanceProfile::Kind::bounded:
        return make_bounded(rng, rng.range(0.0, 0.95), order);
    case InstanceProfile::Kind::qc: {
        if (!(profile.K >= 1.0)) throw std::invalid_argument("qc profile: K must be >= 1");
        return make_bounded(rng, QcParams::from_K(profile.K).k, order);
    }
    case InstanceProfile::Kind::halfplane: {
        if (!(profile.K >= 1.0)) throw std::invalid_argument("halfplane profile: K must be >= 1");
        return make_halfplane(rng, QcParams::from_K(profile.K).k, order);
    }
    case InstanceProfile::Kind::psymmetric:
        if (profile.p < 2) throw std::invalid_argument("psymmetric profile: p must be >= 2");
        return make_psymmetric(rng, profile.p, order);
    case InstanceProfile::Kind::bloch:
        return make_bloch(rng, order);
    }
    throw std::logic_error("generate_instance: unknown profile");
}

} // namespace bohr
