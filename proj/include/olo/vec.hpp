#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace olo {

using Vec = std::vector<double>;

// Tolerance used by all ball/norm constraints.  Inputs violating a
// constraint by more than this are rejected; violations within it are
// renormalized silently (long runs accumulate drift of this order).
inline constexpr double kNormTol = 1e-9;

inline double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm_sq(std::span<const double> a) { return dot(a, a); }
inline double norm(std::span<const double> a) { return std::sqrt(norm_sq(a)); }

inline double norm_inf(std::span<const double> a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::abs(v));
    return m;
}

inline double norm_p(std::span<const double> a, double p) {
    double s = 0.0;
    for (double v : a) s += std::pow(std::abs(v), p);
    return std::pow(s, 1.0 / p);
}

inline bool all_finite(std::span<const double> a) {
    for (double v : a)
        if (!std::isfinite(v)) return false;
    return true;
}

// y += s * x
inline void axpy(double s, std::span<const double> x, Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

inline Vec scaled(std::span<const double> x, double s) {
    Vec r(x.begin(), x.end());
    for (double& v : r) v *= s;
    return r;
}

// Euclidean projection onto the unit ball: identity inside, radial
// rescaling outside.  Idempotent and non-expansive.
inline Vec project_to_ball(const Vec& x) {
    if (!all_finite(x)) throw std::invalid_argument("project_to_ball: non-finite input");
    double n = norm(x);
    if (n <= 1.0) return x;
    return scaled(x, 1.0 / n);
}

// Validates a cost or hint vector against the unit-norm constraint.
// Returns the vector renormalized to norm 1 when it overshoots within
// tolerance; throws when it overshoots by more.
inline Vec validate_unit_norm(const Vec& v, const char* what) {
    if (!all_finite(v)) throw std::invalid_argument(std::string(what) + ": non-finite entries");
    double n = norm(v);
    if (n > 1.0 + kNormTol)
        throw std::invalid_argument(std::string(what) + ": l2 norm " + std::to_string(n) +
                                    " exceeds 1 beyond tolerance");
    if (n > 1.0) return scaled(v, 1.0 / n);
    return v;
}

}  // namespace olo
