#pragma once

// Fourier coefficients of polygon indicator functions and the lattice-sum
// series built from them.
//
// For a nonzero integer frequency m the coefficient of an integer polygon is
//   (1 / (2 pi i |m|_aff^2)) * sum_j (m_perp o v_j)
// where m_perp is m rotated by a quarter turn and o is the parallel-length
// product from the moments module. The rotation is fixed to m_perp =
// (m.y, -m.x): under that choice the closed form matches direct integration
// of exp(-2 pi i <m,t>) over the polygon (the test suite pins this down on
// the unit triangle before anything else runs). Coefficients are stored as
// exact rational multiples of 1/(2 pi i); floating point enters only when a
// series is finally summed.

#include "latshift/moments.hpp"
#include "latshift/polygon.hpp"
#include "latshift/rational.hpp"
#include "latshift/vec.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace latshift {

inline IntVec rotate_quarter(const IntVec& m) { return {m.y, -m.x}; }

struct FourierCoefficient {
    IntVec frequency;
    Rat factor;     // value = factor / (2 pi i); at m = 0, value = factor
    bool zero_freq{false};

    std::complex<double> to_complex() const {
        if (zero_freq) return {rat_double(factor), 0.0};
        // 1/(2 pi i) = -i/(2 pi)
        return {0.0, -rat_double(factor) / (2.0 * M_PI)};
    }
};

inline FourierCoefficient fourier_coeff(const IntPolygon& p, const IntVec& m) {
    if (m.is_zero()) return {m, p.area(), true};
    const IntVec mp = rotate_quarter(m);
    Int s = 0;
    for (const auto& v : p.sides()) s += side_dot(mp, v);
    Int l = affine_length(m);
    return {m, Rat(s, l * l), false};
}

namespace detail {

// (e^{i g} - 1) / (i g), extended by continuity at 0.
inline std::complex<double> phase_ratio(double g) {
    const std::complex<double> ig(0.0, g);
    if (std::abs(g) < 1e-9) {
        return 1.0 + ig / 2.0 + ig * ig / 6.0 + ig * ig * ig / 24.0;
    }
    return (std::polar(1.0, g) - 1.0) / ig;
}

// F(a,b) = int_0^1 int_0^{1-s} e^{i(a s + b t)} dt ds over the reference
// triangle; all removable singularities handled.
inline std::complex<double> reference_triangle_transform(double a, double b) {
    if (std::abs(b) < 1e-9) std::swap(a, b);
    if (std::abs(b) < 1e-9) return {0.5, 0.0}; // both ~ 0
    const std::complex<double> ib(0.0, b);
    if (std::abs(a) < 1e-9) {
        // G(b) = (e^{ib} - 1 - ib) / (ib)^2
        return (std::polar(1.0, b) - 1.0 - ib) / (ib * ib);
    }
    return (std::polar(1.0, b) * phase_ratio(a - b) - phase_ratio(a)) / ib;
}

} // namespace detail

// Direct integration of exp(-2 pi i <m, t>) over the polygon: fan
// triangulation with the analytic antiderivative evaluated per triangle.
// Accurate to roughly 1e-13; tolerances below 1e-12 are unattainable in
// double precision and are rejected.
inline std::complex<double> fourier_quadrature(const IntPolygon& p, const IntVec& m,
                                               double tol = 1e-10) {
    if (tol <= 0.0) fail(Errc::ToleranceNotMet, "tolerance must be positive");
    if (tol < 1e-12) fail(Errc::ToleranceNotMet, "tolerance below double-precision limit");
    const auto& v = p.vertices();
    const double mx = to_i64(m.x), my = to_i64(m.y);
    std::complex<double> total(0.0, 0.0);
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const IntVec &A = v[0], &B = v[i], &C = v[i + 1];
        const double twice_area = to_i64(wedge(B - A, C - A));
        const double phase = -2.0 * M_PI * (mx * to_i64(A.x) + my * to_i64(A.y));
        const double a = -2.0 * M_PI * (mx * to_i64(B.x - A.x) + my * to_i64(B.y - A.y));
        const double b = -2.0 * M_PI * (mx * to_i64(C.x - A.x) + my * to_i64(C.y - A.y));
        total += twice_area * std::polar(1.0, phase) * detail::reference_triangle_transform(a, b);
    }
    return total;
}

namespace detail {

// Canonical primitive directions whose orthogonal complement carries the
// nonzero frequencies, with the per-direction signed length sums.
struct SpectralRay {
    IntVec n;  // primitive, canonical sign
    Int s;     // sum over sides of n_perp o v_j
};

inline Int ray_sum(const IntPolygon& p, const IntVec& n) {
    const IntVec np = rotate_quarter(n);
    Int s = 0;
    for (const auto& v : p.sides()) s += side_dot(np, v);
    return s;
}

inline std::set<IntVec> normal_directions(const IntPolygon& p) {
    std::set<IntVec> out;
    const SideProfile prof = p.side_profile();
    for (const auto& [d, l] : prof.entries()) {
        out.insert(canonical_sign(IntVec{-d.y, d.x}));
    }
    return out;
}

} // namespace detail

// Truncated covariance series sum_{m != 0} f_P(m) f_Q(-m) with |k| <= R
// multiples along each shared side-orthogonal ray. Coefficient products are
// accumulated as exact rationals; one floating conversion at the end. The
// imaginary parts cancel pairwise (m against -m) before any float appears.
inline double covariance_series(const IntPolygon& p, const IntPolygon& q, long radius) {
    if (radius < 1) fail(Errc::ParseError, "series radius must be >= 1");
    std::set<IntVec> rays = detail::normal_directions(p);
    for (const auto& n : detail::normal_directions(q)) rays.insert(n);

    Int cross = 0;
    for (const auto& n : rays) cross += detail::ray_sum(p, n) * detail::ray_sum(q, n);

    Rat basel(0);
    for (long k = 1; k <= radius; ++k) basel += Rat(1, Int(k) * k);
    // sum over m = k n, k in +-[1,R]:  f_P f_Q = -S_P S_Q / k^2, then the
    // global 1/(2 pi i)^2 = -1/(4 pi^2) makes the partial sum positive.
    return rat_double(Rat(cross) * basel) / (2.0 * M_PI * M_PI);
}

// Truncated k-th central moment: sum over ordered k-tuples of nonzero
// frequencies summing to zero of the product of coefficients, each frequency
// a multiple (within the radius) of a side-orthogonal primitive ray. The
// rational accumulator is exactly antisymmetric under negating a tuple, so
// odd moments vanish identically and even ones are real by construction.
inline double central_moment_series(const IntPolygon& p, unsigned k, long radius) {
    if (k < 2) fail(Errc::ParseError, "central moment order must be >= 2");
    if (radius < 1) fail(Errc::ParseError, "series radius must be >= 1");

    std::vector<detail::SpectralRay> rays;
    for (const auto& n : detail::normal_directions(p)) {
        Int s = detail::ray_sum(p, n);
        if (s != 0) rays.push_back({n, s});
    }
    if (rays.empty()) return 0.0;

    Rat acc(0);
    const long R = radius;

    // Close a tuple: choose directions for the last two slots and solve
    // c_a n_a + c_b n_b = -t exactly.
    auto close_pair = [&](const IntVec& t, const Rat& prod) {
        for (const auto& ra : rays) {
            for (const auto& rb : rays) {
                Int det = wedge(ra.n, rb.n);
                if (det != 0) {
                    Int num_a = wedge(-t, rb.n);
                    Int num_b = wedge(ra.n, -t);
                    if (num_a % det != 0 || num_b % det != 0) continue;
                    Int ca = num_a / det, cb = num_b / det;
                    if (ca == 0 || cb == 0 || abs(ca) > R || abs(cb) > R) continue;
                    acc += prod * make_rat(ra.s, ca) * make_rat(rb.s, cb);
                } else {
                    // same ray: c_a + c_b = s with -t = s n
                    Int s;
                    if (ra.n.x != 0) {
                        if ((-t.x) % ra.n.x != 0) continue;
                        s = (-t.x) / ra.n.x;
                        if (ra.n.y * s != -t.y) continue;
                    } else {
                        if ((-t.y) % ra.n.y != 0) continue;
                        s = (-t.y) / ra.n.y;
                        if (ra.n.x * s != -t.x) continue;
                    }
                    Int lo = std::max(Int(-R), s - R), hi = std::min(Int(R), s + R);
                    for (Int ca = lo; ca <= hi; ++ca) {
                        if (ca == 0 || ca == s) continue;
                        acc += prod * make_rat(ra.s, ca) * make_rat(rb.s, s - ca);
                    }
                }
            }
        }
    };

    std::function<void(unsigned, const IntVec&, const Rat&)> walk =
        [&](unsigned depth, const IntVec& t, const Rat& prod) {
            if (depth == k - 2) {
                close_pair(t, prod);
                return;
            }
            for (const auto& r : rays) {
                for (long c = -R; c <= R; ++c) {
                    if (c == 0) continue;
                    walk(depth + 1, t + r.n * Int(c), prod * make_rat(r.s, Int(c)));
                }
            }
        };
    walk(0, IntVec{0, 0}, Rat(1));

    if (k % 2 == 1) {
        if (acc != 0) fail(Errc::DegenerateArea, "odd-moment accumulator failed to cancel");
        return 0.0;
    }
    double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * rat_double(acc) / std::pow(2.0 * M_PI, static_cast<double>(k));
}

} // namespace latshift
