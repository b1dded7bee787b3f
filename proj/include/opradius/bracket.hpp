#pragma once

#include <algorithm>
#include <string>

namespace opradius {

enum class BracketMethod { certified_scan, exact_rule, decomposition_search, generic };

std::string to_string(BracketMethod m);
BracketMethod bracket_method_from_string(const std::string& s);

/// Certified interval guaranteed to contain a true norm value.
struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    BracketMethod method = BracketMethod::generic;
    /// Eigensolves spent producing the interval.
    long evals = 0;
    /// False when a budget ran out before the requested width was reached;
    /// the interval itself remains valid.
    bool certified = true;

    double width() const { return hi - lo; }
    bool contains(double v) const { return lo <= v && v <= hi; }
};

// Interval combinators for deriving certified bounds of compound expressions.
// Every operation is containment-preserving: if u is in a and v is in b, the
// combined true value lies in the result.

inline Bracket iv_point(double v, double pad, BracketMethod m = BracketMethod::generic) {
    return Bracket{v - pad, v + pad, m, 0, true};
}

inline Bracket iv_add(const Bracket& a, const Bracket& b) {
    return Bracket{a.lo + b.lo, a.hi + b.hi, BracketMethod::generic, a.evals + b.evals, a.certified && b.certified};
}

inline Bracket iv_sub(const Bracket& a, const Bracket& b) {
    return Bracket{a.lo - b.hi, a.hi - b.lo, BracketMethod::generic, a.evals + b.evals, a.certified && b.certified};
}

inline Bracket iv_scale(const Bracket& a, double t) {
    // t >= 0 only; callers never scale by negative factors.
    return Bracket{a.lo * t, a.hi * t, a.method, a.evals, a.certified};
}

inline Bracket iv_max(const Bracket& a, const Bracket& b) {
    return Bracket{std::max(a.lo, b.lo), std::max(a.hi, b.hi), BracketMethod::generic, a.evals + b.evals,
                   a.certified && b.certified};
}

inline Bracket iv_min(const Bracket& a, const Bracket& b) {
    return Bracket{std::min(a.lo, b.lo), std::min(a.hi, b.hi), BracketMethod::generic, a.evals + b.evals,
                   a.certified && b.certified};
}

/// Product of intervals of nonnegative quantities (lower ends clamped at 0).
inline Bracket iv_mul_nonneg(const Bracket& a, const Bracket& b) {
    const double alo = std::max(0.0, a.lo);
    const double blo = std::max(0.0, b.lo);
    return Bracket{alo * blo, a.hi * b.hi, BracketMethod::generic, a.evals + b.evals, a.certified && b.certified};
}

inline Bracket iv_abs(const Bracket& a) {
    Bracket r = a;
    if (a.lo >= 0.0) return r;
    if (a.hi <= 0.0) {
        r.lo = -a.hi;
        r.hi = -a.lo;
        return r;
    }
    r.lo = 0.0;
    r.hi = std::max(-a.lo, a.hi);
    return r;
}

} // namespace opradius
