#ifndef KAWAHARA_GAMMA_HPP
#define KAWAHARA_GAMMA_HPP

#include <cmath>
#include <quadmath.h>

namespace kawahara {

// Math shims so the Spouge series below works for double and __float128 alike.
namespace qm {
inline double exp_(double x) { return std::exp(x); }
inline double log_(double x) { return std::log(x); }
inline double sqrt_(double x) { return std::sqrt(x); }
inline double sin_(double x) { return std::sin(x); }
inline double pow_(double b, double e) { return std::pow(b, e); }
inline double abs_(double x) { return std::fabs(x); }
inline __float128 exp_(__float128 x) { return expq(x); }
inline __float128 log_(__float128 x) { return logq(x); }
inline __float128 sqrt_(__float128 x) { return sqrtq(x); }
inline __float128 sin_(__float128 x) { return sinq(x); }
inline __float128 pow_(__float128 b, __float128 e) { return expq(e * logq(b)); }
inline __float128 abs_(__float128 x) { return fabsq(x); }
template <class T> constexpr T pi();
template <> constexpr double pi<double>() { return 3.141592653589793238462643383279502884; }
template <> constexpr __float128 pi<__float128>() { return 3.141592653589793238462643383279502884197169399375Q; }
} // namespace qm

// Spouge's approximation with a = 41 terms: relative error below 1e-33 in
// __float128, limited only by the working precision in double.
template <class T>
T gamma_fn(T z) {
    constexpr int a = 41;
    const T pi = qm::pi<T>();
    if (z < T(0.5))
        return pi / (qm::sin_(pi * z) * gamma_fn(T(1) - z));
    z -= T(1);
    T acc = qm::sqrt_(T(2) * pi);
    T fac = T(1);
    for (int k = 1; k < a; ++k) {
        // c_k = (-1)^(k-1) / (k-1)! * (a-k)^(k-1/2) * e^(a-k)
        if (k > 1) fac *= -T(k - 1);
        T ak = T(a - k);
        T ck = qm::pow_(ak, T(k) - T(0.5)) * qm::exp_(ak) / fac;
        acc += ck / (z + T(k));
    }
    return acc * qm::exp_(-(z + T(a))) * qm::pow_(z + T(a), z + T(0.5));
}

// Double-precision gamma used throughout runtime formulas. Evaluated in
// extended precision and rounded once; the double-only Spouge sum loses a
// couple of digits to cancellation.
inline double gamma_d(double z) { return double(gamma_fn<__float128>(z)); }

// Extended-precision gamma for closed-form constants (>= 30 significant digits).
inline __float128 gamma_q(__float128 z) { return gamma_fn<__float128>(z); }

} // namespace kawahara

#endif
