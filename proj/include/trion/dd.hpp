#pragma once

// Double-double ("dd") arithmetic: an unevaluated sum of two doubles giving
// roughly 32 significant digits.  Used by the extended-precision matrix
// build, where cancellation between correlated-integral terms and the
// conditioning of the overlap matrix can eat most of a double's mantissa.
//
// The primitives (two_sum, two_prod with FMA) follow Dekker and Knuth;
// division and sqrt use the usual Newton refinements.

#include <cmath>
#include <cstdlib>

namespace trion {

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;

    DoubleDouble() = default;
    DoubleDouble(double h) : hi(h), lo(0.0) {}
    DoubleDouble(double h, double l) : hi(h), lo(l) {}

    explicit operator double() const { return hi + lo; }
};

namespace detail {

inline DoubleDouble quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline DoubleDouble two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

inline DoubleDouble two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return {p, err};
}

} // namespace detail

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
    DoubleDouble s = detail::two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return detail::quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
    DoubleDouble p = detail::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
    double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * DoubleDouble(q1);
    double q2 = r.hi / b.hi;
    r = r - b * DoubleDouble(q2);
    double q3 = r.hi / b.hi;
    DoubleDouble q = detail::quick_two_sum(q1, q2);
    return q + DoubleDouble(q3);
}

inline DoubleDouble& operator+=(DoubleDouble& a, DoubleDouble b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, DoubleDouble b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, DoubleDouble b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, DoubleDouble b) { return a = a / b; }

inline bool operator<(DoubleDouble a, DoubleDouble b) {
    return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(DoubleDouble a, DoubleDouble b) { return b < a; }
inline bool operator<=(DoubleDouble a, DoubleDouble b) { return !(b < a); }
inline bool operator>=(DoubleDouble a, DoubleDouble b) { return !(a < b); }
inline bool operator==(DoubleDouble a, DoubleDouble b) { return a.hi == b.hi && a.lo == b.lo; }

inline DoubleDouble abs(DoubleDouble a) { return a.hi < 0.0 ? -a : a; }

inline DoubleDouble sqrt(DoubleDouble a) {
    if (a.hi == 0.0 && a.lo == 0.0) return {0.0, 0.0};
    double y = std::sqrt(a.hi);
    DoubleDouble yy(y);
    // one Newton step: y + (a - y^2) / (2 y)
    DoubleDouble r = (a - yy * yy) / (yy + yy);
    return yy + r;
}

inline double to_double(DoubleDouble a) { return a.hi + a.lo; }
inline double to_double(double a) { return a; }

// Minimal complex-on-anything template so the integral engine can run both
// in double and in double-double with one code path.  std::complex is only
// specified for the builtin floating types, hence this stand-in.
template <typename R>
struct Cx {
    R re{};
    R im{};

    Cx() = default;
    Cx(R r) : re(r), im(R(0.0)) {}
    Cx(R r, R i) : re(r), im(i) {}
};

template <typename R> Cx<R> operator+(Cx<R> a, Cx<R> b) { return {a.re + b.re, a.im + b.im}; }
template <typename R> Cx<R> operator-(Cx<R> a, Cx<R> b) { return {a.re - b.re, a.im - b.im}; }
template <typename R> Cx<R> operator-(Cx<R> a) { return {-a.re, -a.im}; }

template <typename R> Cx<R> operator*(Cx<R> a, Cx<R> b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <typename R> Cx<R> operator*(R s, Cx<R> a) { return {s * a.re, s * a.im}; }

template <typename R> Cx<R> conj(Cx<R> a) { return {a.re, -a.im}; }

template <typename R> Cx<R> inverse(Cx<R> a) {
    R d = a.re * a.re + a.im * a.im;
    return {a.re / d, -a.im / d};
}

template <typename R> Cx<R> operator/(Cx<R> a, Cx<R> b) { return a * inverse(b); }

template <typename R> Cx<R>& operator+=(Cx<R>& a, Cx<R> b) { return a = a + b; }
template <typename R> Cx<R>& operator*=(Cx<R>& a, Cx<R> b) { return a = a * b; }

} // namespace trion
