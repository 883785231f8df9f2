#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace bohr {

/// Plain bisection on [lo, hi]; assumes f(lo) and f(hi) have opposite signs
/// (throws otherwise). Returns the final bracket (lo, hi) with hi - lo <= tol.
template <typename F>
std::pair<double, double> bisect_root(F&& f, double lo, double hi, double tol,
                                      int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, lo};
    if (fhi == 0.0) return {hi, hi};
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::domain_error("bisect_root: no sign change on bracket");
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return {mid, mid};
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

/// Golden-section minimization on [lo, hi]; derivative-free, shrinks the
/// bracket until hi - lo <= tol and returns its midpoint.
template <typename F>
double golden_section_min(F&& f, double lo, double hi, double tol, int max_iter = 200) {
    const double inv_gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - (hi - lo) * inv_gr;
    double d = lo + (hi - lo) * inv_gr;
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - (hi - lo) * inv_gr;
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + (hi - lo) * inv_gr;
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace bohr
