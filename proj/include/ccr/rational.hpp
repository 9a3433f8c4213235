#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccr {

using Rational = mpq_class;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<std::vector<Rational>>;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

// e^{i r} for an exact rational angle r, accurate to a few ulp regardless of
// |r|.  The leading double d0 is exact as a rational, so the residual r - d0
// is tiny and the large-argument trig reduction is left to libm.
inline std::complex<double> unit_phase(const Rational& r) {
    const double d0 = r.get_d();
    Rational rest = r - Rational(d0);
    rest.canonicalize();
    const double d1 = rest.get_d();
    return std::polar(1.0, d0) * std::polar(1.0, d1);
}

inline RatVector rat_vector(std::initializer_list<long> entries) {
    RatVector v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

inline RatVector add(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    RatVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline RatVector negate(const RatVector& a) {
    RatVector out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

inline bool is_zero(const RatVector& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

std::string to_string(const Rational& r);

}  // namespace ccr
