#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace bohr {

// Quasiconformality parameter. K = infinity is an explicit limit flag that
// replaces (K-1)/(K+1) by 1 and K/(K+1) by 1; it is never approximated by a
// large finite K.
struct KParam {
    bool is_limit = false;
    double value = 1.0;

    static KParam finite(double k_big) {
        if (!(k_big >= 1.0)) throw std::invalid_argument("KParam: K must be >= 1");
        return {false, k_big};
    }
    static KParam limit() { return {true, 0.0}; }

    // k = (K-1)/(K+1), the dilatation bound.
    double k() const { return is_limit ? 1.0 : (value - 1.0) / (value + 1.0); }
    // K/(K+1), the weight in the upper-bound root equations.
    double K_ratio() const { return is_limit ? 1.0 : value / (value + 1.0); }

    std::string str() const;
};

inline std::string KParam::str() const {
    if (is_limit) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

} // namespace bohr
