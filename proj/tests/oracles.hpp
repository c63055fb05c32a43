#pragma once

// Slow, independent reference computations used to cross-check the library.
// Everything here works by exhaustive search over small boxes.

#include "quadrantal/quadratic.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using quadrantal::BigInt;
using quadrantal::QuadInt;
using quadrantal::QuadraticField;

inline std::optional<std::int64_t> exact_sqrt(std::int64_t n)
{
    if (n < 0) return std::nullopt;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) return std::nullopt;
    return r;
}

/// Smallest unit > 1 found by scanning the omega-coordinate y = 1, 2, ...
/// (for m = 5 both omega and omega^2 have y = 1, so ties keep the smaller x).
inline std::optional<QuadInt> smallest_unit_above_one(const QuadraticField& f, std::int64_t y_max)
{
    const std::int64_t m = f.m();
    for (std::int64_t y = 1; y <= y_max; ++y) {
        std::optional<std::int64_t> best;
        for (int s : {1, -1}) {
            std::optional<std::int64_t> x;
            if (f.is_half()) {
                // (2x + y)^2 = m y^2 + 4s
                auto t = exact_sqrt(m * y * y + 4 * s);
                if (t && (*t - y) % 2 == 0) x = (*t - y) / 2;
            } else if (auto t = exact_sqrt(m * y * y + s)) {
                x = *t;
            }
            if (x && (!best || *x < *best)) best = x;
        }
        if (best) return QuadInt(f, *best, y);
    }
    return std::nullopt;
}

/// Least positive (x, y) with x^2 - m y^2 = rhs and y <= y_max.
inline std::optional<std::pair<std::int64_t, std::int64_t>> pell_brute(std::int64_t m, std::int64_t rhs, std::int64_t y_max)
{
    for (std::int64_t y = 1; y <= y_max; ++y) {
        auto x = exact_sqrt(m * y * y + rhs);
        if (x && *x > 0) return std::pair{*x, y};
    }
    return std::nullopt;
}

/// Every element of norm n (n > 0) in an imaginary quadratic ring.
inline std::vector<QuadInt> elements_of_norm(const QuadraticField& f, std::int64_t n)
{
    std::vector<QuadInt> out;
    // |x|, |y| <= 2 sqrt(n) + 1 covers both shapes of omega.
    const auto box = static_cast<std::int64_t>(2 * std::sqrt(static_cast<double>(n))) + 2;
    for (std::int64_t y = -box; y <= box; ++y)
        for (std::int64_t x = -box; x <= box; ++x) {
            QuadInt e(f, x, y);
            if (quadrantal::quad_norm(e) == n) out.push_back(e);
        }
    return out;
}

/// Squares modulo q, as a membership table.
inline std::vector<bool> squares_mod(std::int64_t q)
{
    std::vector<bool> sq(static_cast<std::size_t>(q), false);
    for (std::int64_t x = 0; x < q; ++x) sq[static_cast<std::size_t>(x * x % q)] = true;
    return sq;
}

} // namespace oracle

namespace oracle {

/// Z-bases {(A, 0), (B, C)} of all ideals of norm n, found by testing every
/// sublattice of index n for closure under multiplication by omega.
inline std::vector<std::pair<QuadInt, QuadInt>> ideals_of_norm(const QuadraticField& f, std::int64_t n)
{
    std::vector<std::pair<QuadInt, QuadInt>> out;
    const QuadInt w = QuadInt::omega(f);
    for (std::int64_t A = 1; A <= n; ++A) {
        if (n % A) continue;
        const std::int64_t C = n / A;
        for (std::int64_t B = 0; B < A; ++B) {
            auto in_lattice = [&](const QuadInt& x) {
                if (x.b() % C != 0) return false;
                BigInt t = x.b() / C;
                return (x.a() - t * B) % A == 0;
            };
            QuadInt v1(f, A), v2(f, B, C);
            if (in_lattice(v1 * w) && in_lattice(v2 * w)) out.emplace_back(v1, v2);
        }
    }
    return out;
}

} // namespace oracle

namespace oracle {

/// Number of reduced primitive positive definite forms ax^2 + bxy + cy^2 of discriminant d < 0.
inline std::int64_t reduced_form_count(std::int64_t d)
{
    std::int64_t count = 0;
    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            std::int64_t num = b * b - d;
            if (num % (4 * a)) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (c == a && b < 0) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

} // namespace oracle
