#pragma once

/**
 * @file class_group.hpp
 * @brief Minkowski bound, ideal classes and the class group of a quadratic ring
 */

#include "quadrantal/core.hpp"
#include "quadrantal/ideal.hpp"
#include "quadrantal/quadratic.hpp"
#include "quadrantal/units.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quadrantal {

struct MinkowskiBound {
    std::string exact;    ///< closed form, "sqrt(8)/2" or "2*sqrt(20)/pi"
    std::string decimal;  ///< the bound to 30 significant decimals
    BigInt norm_limit;    ///< largest integer N <= bound
};

/// (1/2)sqrt|d| for real fields, (2/pi)sqrt|d| for imaginary ones; the floor is certified with rational pi bounds.
inline MinkowskiBound minkowski_bound(const QuadraticField& f)
{
    const BigInt ad = abs(BigInt(f.discriminant()));
    MinkowskiBound r;
    if (f.is_real()) {
        r.exact = "sqrt(" + ad.str() + ")/2";
        // N <= sqrt(d)/2  <=>  N^2 <= d/4
        r.norm_limit = isqrt(ad / 4);
        r.decimal = to_decimal(mp::sqrt(Real(ad)) / 2, 30);
        return r;
    }
    r.exact = "2*sqrt(" + ad.str() + ")/pi";
    // N <= 2 sqrt|d| / pi  <=>  N^2 <= 4|d| / pi^2
    auto floor_of = [&](const Rational& pi) {
        Rational x = Rational(4 * ad) / (pi * pi);
        return isqrt(BigInt(mp::numerator(x) / mp::denominator(x)));
    };
    BigInt hi = floor_of(pi_lower()), lo = floor_of(pi_upper());
    if (hi != lo) throw unverified_error("Minkowski bound too close to an integer for the certified pi interval");
    r.norm_limit = lo;
    r.decimal = to_decimal(2 * mp::sqrt(Real(ad)) / pi_real(), 30);
    return r;
}

/// An equivalent ideal of small norm (imaginary fields): conj((beta)/I) for a shortest beta in I.
inline QuadIdeal reduce_ideal(const QuadIdeal& x)
{
    const QuadraticField& f = x.field();
    if (f.is_real()) throw precondition_error("ideal reduction is implemented for imaginary fields only");
    if (x.is_zero()) throw precondition_error("cannot reduce the zero ideal");
    auto [v1, v2] = x.basis();
    // Lagrange reduction for the positive definite form N.
    for (;;) {
        if (quad_norm(v2) < quad_norm(v1)) std::swap(v1, v2);
        const BigInt q1 = quad_norm(v1);
        const BigInt b2 = quad_trace(v1 * quad_conj(v2));
        const BigInt mu = floor_div(2 * b2 + 2 * q1, 4 * q1);
        if (mu == 0) break;
        v2 = v2 - mu * v1;
        if (quad_norm(v2) >= q1) break;
    }
    if (quad_norm(v2) < quad_norm(v1)) std::swap(v1, v2);
    auto k = ideal_quotient(principal_ideal(v1), x);
    return ideal_conj(*k);
}

struct ClassGroupReport {
    QuadraticField field;
    MinkowskiBound bound;
    std::optional<QuadInt> fundamental_unit;
    std::vector<QuadIdeal> prime_ideals;      ///< primes of norm <= the bound
    std::vector<QuadIdeal> representatives;   ///< one per class, principal class first
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::size_t> inverse;
    std::vector<std::uint64_t> structure;     ///< invariant factors d1 | d2 | ..., empty when h = 1

    std::size_t h() const { return representatives.size(); }

    bool equivalent(const QuadIdeal& x, const QuadIdeal& y) const
    {
        return is_principal(ideal_product(x, ideal_conj(y)), fundamental_unit);
    }

    /// Index of the class containing the nonzero ideal x.
    std::size_t class_index(const QuadIdeal& x) const
    {
        if (x.is_zero()) throw precondition_error("the zero ideal has no class");
        if (h() == 1) return 0;
        const QuadIdeal r = field.is_real() ? x : reduce_ideal(x);
        for (std::size_t j = 0; j < h(); ++j)
            if (equivalent(r, representatives[j])) return j;
        throw std::logic_error("ideal " + to_text(x) + " matches no class representative");
    }

    std::size_t power(std::size_t g, std::uint64_t k) const
    {
        std::size_t r = 0;
        for (std::uint64_t i = 0; i < k; ++i) r = table[r][g];
        return r;
    }

    std::uint64_t order(std::size_t g) const
    {
        std::uint64_t k = 1;
        for (std::size_t r = g; r != 0; r = table[r][g]) ++k;
        return k;
    }

    bool is_cyclic() const { return structure.size() <= 1; }
};

namespace detail {

/// All ideals of norm <= limit, as products of the given primes.
inline void close_under_products(const std::vector<QuadIdeal>& primes, std::size_t start, const QuadIdeal& current,
                                 const BigInt& limit, std::vector<QuadIdeal>& out)
{
    out.push_back(current);
    for (std::size_t i = start; i < primes.size(); ++i) {
        if (current.norm() * primes[i].norm() > limit) continue;
        close_under_products(primes, i, ideal_product(current, primes[i]), limit, out);
    }
}

inline std::vector<std::uint64_t> invariant_factors(const ClassGroupReport& g)
{
    const auto h = static_cast<std::uint64_t>(g.h());
    std::vector<std::uint64_t> result;
    std::map<std::uint64_t, std::vector<unsigned>> exponents;  // p -> cyclic p-part exponents, descending
    std::uint64_t rest = h;
    for (std::uint64_t p = 2; p <= rest; ++p) {
        if (rest % p) continue;
        std::uint64_t pk_total = 1;
        while (rest % p == 0) {
            rest /= p;
            pk_total *= p;
        }
        // n_j = #{x : x^(p^j) = 1}; log_p(n_j / n_{j-1}) counts cyclic factors of exponent >= j.
        std::vector<unsigned> at_least;
        std::uint64_t prev = 1, pj = 1;
        while (prev < pk_total) {
            pj *= p;
            std::uint64_t n = 0;
            for (std::size_t x = 0; x < g.h(); ++x)
                if (g.power(x, pj) == 0) ++n;
            unsigned r = 0;
            for (std::uint64_t q = n / prev; q > 1; q /= p) ++r;
            at_least.push_back(r);
            prev = n;
        }
        auto& ex = exponents[p];
        for (std::size_t j = 0; j < at_least.size(); ++j) {
            unsigned next = j + 1 < at_least.size() ? at_least[j + 1] : 0;
            for (unsigned c = next; c < at_least[j]; ++c) ex.push_back(static_cast<unsigned>(j + 1));
        }
        std::sort(ex.rbegin(), ex.rend());
    }
    std::size_t count = 0;
    for (const auto& [p, ex] : exponents) count = std::max(count, ex.size());
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t d = 1;
        for (const auto& [p, ex] : exponents)
            if (i < ex.size())
                for (unsigned k = 0; k < ex[i]; ++k) d *= p;
        result.push_back(d);
    }
    std::reverse(result.begin(), result.end());
    return result;
}

} // namespace detail

inline constexpr std::int64_t kDefaultMaxMinkowskiNorm = 1'000'000;

inline ClassGroupReport class_group(const QuadraticField& f, std::int64_t max_norm = kDefaultMaxMinkowskiNorm)
{
    ClassGroupReport g{f, minkowski_bound(f), std::nullopt, {}, {}, {}, {}, {}};
    const BigInt& limit = g.bound.norm_limit;
    if (limit > max_norm) throw precondition_error("Minkowski bound " + limit.str() + " exceeds the configured limit " + std::to_string(max_norm));
    if (f.is_real()) g.fundamental_unit = fundamental_unit(f);

    for (BigInt q = 2; q <= limit; ++q) {
        if (!is_prime(q)) continue;
        for (const auto& pf : split_prime(f, q).factors)
            if (pf.prime.norm() <= limit) g.prime_ideals.push_back(pf.prime);
    }

    std::vector<QuadIdeal> ideals;
    detail::close_under_products(g.prime_ideals, 0, QuadIdeal::unit(f), limit, ideals);
    std::sort(ideals.begin(), ideals.end());
    ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());

    for (const auto& x : ideals) {
        bool found = false;
        for (const auto& r : g.representatives) {
            if (g.equivalent(x, r)) {
                found = true;
                break;
            }
        }
        if (!found) g.representatives.push_back(x);
    }

    const std::size_t h = g.h();
    g.table.assign(h, std::vector<std::size_t>(h, 0));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i; j < h; ++j)
            g.table[i][j] = g.table[j][i] = g.class_index(ideal_product(g.representatives[i], g.representatives[j]));
    g.inverse.assign(h, 0);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j)
            if (g.table[i][j] == 0) g.inverse[i] = j;
    if (h > 1) g.structure = detail::invariant_factors(g);
    return g;
}

struct GroupTableCheck {
    bool identity = true;
    bool commutative = true;
    bool associative = true;
    bool inverses = true;
    bool inverse_products_principal = true;
    bool ok() const { return identity && commutative && associative && inverses && inverse_products_principal; }
};

/// Exhaustive check of the group axioms on the composition table.
inline GroupTableCheck verify_class_group(const ClassGroupReport& g)
{
    GroupTableCheck c;
    const std::size_t h = g.h();
    for (std::size_t i = 0; i < h; ++i) {
        if (g.table[0][i] != i || g.table[i][0] != i) c.identity = false;
        std::size_t units = 0;
        for (std::size_t j = 0; j < h; ++j) {
            if (g.table[i][j] != g.table[j][i]) c.commutative = false;
            if (g.table[i][j] == 0) ++units;
            for (std::size_t k = 0; k < h; ++k)
                if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]]) c.associative = false;
        }
        if (units != 1) c.inverses = false;
        const auto& r = g.representatives;
        if (!is_principal(ideal_product(r[i], r[g.inverse[i]]), g.fundamental_unit)) c.inverse_products_principal = false;
    }
    return c;
}

} // namespace quadrantal
