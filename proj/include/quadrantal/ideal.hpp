#pragma once

/**
 * @file ideal.hpp
 * @brief Ideals of quadratic rings in standard form c * (aZ + (b + omega)Z)
 *
 * Every nonzero ideal has a unique representation with a, c > 0,
 * 0 <= b < a and a | N(b + omega); its norm is a * c^2. The zero ideal is
 * stored as a = b = c = 0.
 */

#include "quadrantal/core.hpp"
#include "quadrantal/quadratic.hpp"
#include "quadrantal/units.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace quadrantal {

class QuadIdeal {
public:
    static QuadIdeal zero(const QuadraticField& f) { return QuadIdeal(f, 0, 0, 0); }
    static QuadIdeal unit(const QuadraticField& f) { return QuadIdeal(f, 1, 0, 1); }

    /// Validates the standard-form invariants; throws input_error when violated.
    static QuadIdeal from_standard(const QuadraticField& f, const BigInt& a, const BigInt& b, const BigInt& c)
    {
        if (a == 0 && b == 0 && c == 0) return zero(f);
        if (a <= 0 || c <= 0) throw input_error("ideal needs a > 0 and c > 0");
        if (b < 0 || b >= a) throw input_error("ideal needs 0 <= b < a");
        if (quad_norm(QuadInt(f, b, 1)) % a != 0) throw input_error("ideal needs a | N(b + w)");
        return QuadIdeal(f, a, b, c);
    }

    /**
     * The Z-module spanned by vectors (x, y) meaning x + y*omega, which must
     * be a nonzero ideal or the zero module.
     */
    static QuadIdeal from_lattice(const QuadraticField& f, std::vector<std::pair<BigInt, BigInt>> v)
    {
        // Euclid on the omega-coordinates until a single vector has y != 0.
        std::optional<std::size_t> pivot;
        for (;;) {
            pivot.reset();
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i].second != 0 && (!pivot || abs(v[i].second) < abs(v[*pivot].second))) pivot = i;
            if (!pivot) break;
            bool changed = false;
            const auto pv = v[*pivot];
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i == *pivot || v[i].second == 0) continue;
                BigInt q = floor_div(v[i].second, pv.second);
                v[i].first -= q * pv.first;
                v[i].second -= q * pv.second;
                changed = true;
            }
            if (!changed) break;
        }
        BigInt A = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!pivot || i != *pivot) A = gcd(A, v[i].first);
        if (!pivot) {
            if (A == 0) return zero(f);
            throw precondition_error("lattice has rank one and is not an ideal");
        }
        if (A == 0) throw precondition_error("lattice has rank one and is not an ideal");
        auto [x, C] = v[*pivot];
        if (C < 0) {
            x = -x;
            C = -C;
        }
        BigInt B = floor_mod(x, A);
        if (A % C != 0 || B % C != 0) throw precondition_error("lattice is not an ideal");
        BigInt a = A / C, b = B / C;
        if (quad_norm(QuadInt(f, b, 1)) % a != 0) throw precondition_error("lattice is not an ideal");
        return QuadIdeal(f, std::move(a), std::move(b), std::move(C));
    }

    const QuadraticField& field() const noexcept { return field_; }
    const BigInt& a() const noexcept { return a_; }
    const BigInt& b() const noexcept { return b_; }
    const BigInt& c() const noexcept { return c_; }
    bool is_zero() const { return c_ == 0; }
    bool is_unit() const { return a_ == 1 && c_ == 1; }
    BigInt norm() const { return a_ * c_ * c_; }

    /// Z-basis {c*a, c*(b + omega)}.
    std::pair<QuadInt, QuadInt> basis() const
    {
        return {QuadInt(field_, c_ * a_), QuadInt(field_, c_ * b_, c_)};
    }

    std::vector<std::pair<BigInt, BigInt>> basis_vectors() const
    {
        if (is_zero()) return {};
        return {{c_ * a_, 0}, {c_ * b_, c_}};
    }

    bool contains(const QuadInt& x) const
    {
        if (is_zero()) return x.is_zero();
        if (x.b() % c_ != 0) return false;
        BigInt t = x.b() / c_;
        return (x.a() - t * c_ * b_) % (c_ * a_) == 0;
    }

    /// The primitive part aZ + (b + omega)Z.
    QuadIdeal primitive_part() const { return is_zero() ? *this : QuadIdeal(field_, a_, b_, 1); }

    friend bool operator==(const QuadIdeal& x, const QuadIdeal& y)
    {
        return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

    /// Orders by norm, then (c, a, b).
    friend bool operator<(const QuadIdeal& x, const QuadIdeal& y)
    {
        return std::tuple(x.norm(), x.c_, x.a_, x.b_) < std::tuple(y.norm(), y.c_, y.a_, y.b_);
    }

private:
    QuadIdeal(const QuadraticField& f, BigInt a, BigInt b, BigInt c) : field_(f), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    QuadraticField field_;
    BigInt a_;
    BigInt b_;
    BigInt c_;
};

inline void check_same_field(const QuadIdeal& x, const QuadIdeal& y)
{
    if (!(x.field() == y.field())) throw precondition_error("ideals from different fields");
}

/// The ideal generated by the given elements (the Z-span of g and g*omega).
inline QuadIdeal ideal_from_generators(const QuadraticField& f, std::span<const QuadInt> gens)
{
    const QuadInt w = QuadInt::omega(f);
    std::vector<std::pair<BigInt, BigInt>> v;
    for (const auto& g : gens) {
        if (!(g.field() == f)) throw precondition_error("generator from a different field");
        QuadInt gw = g * w;
        v.emplace_back(g.a(), g.b());
        v.emplace_back(gw.a(), gw.b());
    }
    return QuadIdeal::from_lattice(f, std::move(v));
}

inline QuadIdeal ideal_from_generators(const QuadraticField& f, std::initializer_list<QuadInt> gens)
{
    return ideal_from_generators(f, std::span<const QuadInt>(gens.begin(), gens.size()));
}

inline QuadIdeal principal_ideal(const QuadInt& x) { return ideal_from_generators(x.field(), {x}); }

inline QuadIdeal ideal_product(const QuadIdeal& x, const QuadIdeal& y)
{
    check_same_field(x, y);
    if (x.is_zero() || y.is_zero()) return QuadIdeal::zero(x.field());
    auto [x1, x2] = x.basis();
    auto [y1, y2] = y.basis();
    std::vector<std::pair<BigInt, BigInt>> v;
    for (const auto& p : {x1 * y1, x1 * y2, x2 * y1, x2 * y2}) v.emplace_back(p.a(), p.b());
    return QuadIdeal::from_lattice(x.field(), std::move(v));
}

inline QuadIdeal ideal_power(const QuadIdeal& x, unsigned k)
{
    QuadIdeal result = QuadIdeal::unit(x.field());
    QuadIdeal base = x;
    while (k) {
        if (k & 1) result = ideal_product(result, base);
        k >>= 1;
        if (k) base = ideal_product(base, base);
    }
    return result;
}

/// I + J, the greatest common divisor.
inline QuadIdeal ideal_sum(const QuadIdeal& x, const QuadIdeal& y)
{
    check_same_field(x, y);
    auto v = x.basis_vectors();
    auto w = y.basis_vectors();
    v.insert(v.end(), w.begin(), w.end());
    return QuadIdeal::from_lattice(x.field(), std::move(v));
}

inline QuadIdeal ideal_conj(const QuadIdeal& x)
{
    if (x.is_zero()) return x;
    const BigInt b = x.field().is_half() ? floor_mod(BigInt(-x.b() - 1), x.a()) : floor_mod(BigInt(-x.b()), x.a());
    return QuadIdeal::from_standard(x.field(), x.a(), b, x.c());
}

/// J subset of I, i.e. I divides J.
inline bool ideal_contains(const QuadIdeal& i, const QuadIdeal& j)
{
    check_same_field(i, j);
    auto [j1, j2] = j.basis();
    return j.is_zero() || (i.contains(j1) && i.contains(j2));
}

/// K with I * K = J when I divides J; computed as J * conj(I) / N(I).
inline std::optional<QuadIdeal> ideal_quotient(const QuadIdeal& j, const QuadIdeal& i)
{
    check_same_field(i, j);
    if (i.is_zero()) throw precondition_error("division by the zero ideal");
    if (!ideal_contains(i, j)) return std::nullopt;
    if (j.is_zero()) return j;
    QuadIdeal p = ideal_product(j, ideal_conj(i));
    const BigInt n = i.norm();
    if (p.c() % n != 0) throw precondition_error("ideal quotient is not integral");
    return QuadIdeal::from_standard(j.field(), p.a(), p.b(), p.c() / n);
}

inline std::string to_text(const QuadIdeal& x)
{
    if (x.is_zero()) return "(0)";
    if (x.is_unit()) return "(1)";
    auto [g1, g2] = x.basis();
    return "(" + to_text(g1) + ", " + to_text(g2) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const QuadIdeal& x) { return os << to_text(x); }

/// Parses "(g1, g2, ...)" where each g is a ring element expression.
inline QuadIdeal parse_ideal(const QuadraticField& f, std::string_view text)
{
    std::size_t first = text.find_first_not_of(" \t");
    std::size_t last = text.find_last_not_of(" \t");
    if (first == std::string_view::npos || text[first] != '(' || text[last] != ')')
        throw input_error("ideal must be written as (g1, g2, ...), got '" + std::string(text) + "'");
    std::string_view body = text.substr(first + 1, last - first - 1);
    std::vector<QuadInt> gens;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i < body.size() && body[i] == '(') ++depth;
        if (i < body.size() && body[i] == ')') --depth;
        if (depth < 0) throw input_error("unbalanced parentheses in '" + std::string(text) + "'");
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
            gens.push_back(parse_quad_int(f, body.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (depth != 0) throw input_error("unbalanced parentheses in '" + std::string(text) + "'");
    return ideal_from_generators(f, std::span<const QuadInt>(gens));
}

// ---------------------------------------------------------------------------
// Splitting of rational primes

enum class SplittingType { split, inert, ramified };

inline std::string to_string(SplittingType t)
{
    switch (t) {
    case SplittingType::split: return "split";
    case SplittingType::inert: return "inert";
    case SplittingType::ramified: return "ramified";
    }
    return "";
}

/// Splitting type of the prime q in the ring with discriminant d = disc(m).
inline SplittingType splitting_type(std::int64_t m, std::int64_t d, std::int64_t q)
{
    if (floor_mod(d, q) == 0) return SplittingType::ramified;
    if (q == 2) return floor_mod(m, std::int64_t{8}) == 1 ? SplittingType::split : SplittingType::inert;
    std::int64_t r = powmod64(static_cast<std::uint64_t>(floor_mod(m, q)), static_cast<std::uint64_t>((q - 1) / 2), static_cast<std::uint64_t>(q));
    return r == 1 ? SplittingType::split : SplittingType::inert;
}

/// Smallest r in [0, q) with r^2 = n mod q, q an odd prime and n a nonzero square mod q.
inline BigInt sqrt_mod_prime(const BigInt& n, const BigInt& q)
{
    const BigInt a = floor_mod(n, q);
    if (q < 100'000) {
        const auto qq = static_cast<std::int64_t>(q), aa = static_cast<std::int64_t>(a);
        for (std::int64_t r = 0; r < qq; ++r)
            if (r * r % qq == aa) return r;
        throw precondition_error("not a square modulo q");
    }
    // Tonelli-Shanks
    BigInt s = q - 1;
    unsigned e = 0;
    while (s % 2 == 0) {
        s /= 2;
        ++e;
    }
    BigInt z = 2;
    while (powmod(z, (q - 1) / 2, q) != q - 1) ++z;
    BigInt x = powmod(a, (s + 1) / 2, q), b = powmod(a, s, q), g = powmod(z, s, q);
    unsigned r = e;
    while (b != 1) {
        unsigned k = 0;
        BigInt t = b;
        while (t != 1) {
            t = t * t % q;
            if (++k == r) throw precondition_error("not a square modulo q");
        }
        BigInt gs = g;
        for (unsigned i = 0; i + k + 1 < r; ++i) gs = gs * gs % q;
        x = x * gs % q;
        g = gs * gs % q;
        b = b * g % q;
        r = k;
    }
    return std::min(x, BigInt(q - x));
}

struct PrimeFactor {
    QuadIdeal prime;
    int exponent;
    friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

struct SplittingReport {
    BigInt q;
    SplittingType type;
    int e, f, g;
    std::vector<PrimeFactor> factors;  ///< (q) = product of prime^exponent, sorted by (a, b)
};

/// sqrt(m) in the basis {1, omega}.
inline QuadInt sqrt_m(const QuadraticField& f)
{
    return f.is_half() ? QuadInt(f, -1, 2) : QuadInt(f, 0, 1);
}

inline SplittingReport split_prime(const QuadraticField& f, const BigInt& q)
{
    if (q < 2 || !is_prime(q)) throw precondition_error("q = " + q.str() + " is not a prime");
    const QuadInt root_m = sqrt_m(f);
    const QuadInt Q(f, q);
    SplittingReport r{q, SplittingType::inert, 1, 2, 1, {}};
    auto gen = [&](const QuadInt& x) { return ideal_from_generators(f, {Q, x}); };

    if (q == 2) {
        const auto m8 = floor_mod(f.m(), std::int64_t{8});
        if (m8 == 1) {
            const QuadInt w = QuadInt::omega(f);
            r = {q, SplittingType::split, 1, 1, 2, {{gen(w), 1}, {gen(quad_conj(w)), 1}}};
        } else if (m8 == 5) {
            r.factors = {{principal_ideal(Q), 1}};
        } else {
            QuadInt x = floor_mod(f.m(), std::int64_t{4}) == 2 ? root_m : QuadInt(f, 1) + root_m;
            r = {q, SplittingType::ramified, 2, 1, 1, {{gen(x), 2}}};
        }
    } else if (floor_mod(BigInt(f.m()), q) == 0) {
        r = {q, SplittingType::ramified, 2, 1, 1, {{gen(root_m), 2}}};
    } else if (powmod(floor_mod(BigInt(f.m()), q), (q - 1) / 2, q) == 1) {
        const QuadInt s(f, sqrt_mod_prime(f.m(), q));
        r = {q, SplittingType::split, 1, 1, 2, {{gen(s + root_m), 1}, {gen(s - root_m), 1}}};
    } else {
        r.factors = {{principal_ideal(Q), 1}};
    }
    std::sort(r.factors.begin(), r.factors.end(), [](const PrimeFactor& x, const PrimeFactor& y) {
        return std::tuple(x.prime.a(), x.prime.b()) < std::tuple(y.prime.a(), y.prime.b());
    });

    QuadIdeal check = QuadIdeal::unit(f);
    for (const auto& pf : r.factors) check = ideal_product(check, ideal_power(pf.prime, static_cast<unsigned>(pf.exponent)));
    if (!(check == principal_ideal(Q))) throw std::logic_error("prime factors of (" + q.str() + ") do not multiply back");
    return r;
}

/// Prime factorization of a nonzero ideal, grouped by rational prime.
inline std::vector<PrimeFactor> factor_ideal(const QuadIdeal& x)
{
    if (x.is_zero()) throw precondition_error("the zero ideal has no factorization");
    std::vector<PrimeFactor> out;
    QuadIdeal rest = x;
    for (const auto& pp : factor_trial(x.norm())) {
        for (const auto& pf : split_prime(x.field(), pp.prime).factors) {
            int k = 0;
            while (auto q = ideal_quotient(rest, pf.prime)) {
                rest = *q;
                ++k;
            }
            if (k) out.push_back({pf.prime, k});
        }
    }
    if (!rest.is_unit()) throw std::logic_error("ideal factorization left a nontrivial cofactor");
    return out;
}

// ---------------------------------------------------------------------------
// Principality

inline constexpr std::int64_t kMaxPrincipalSearch = 5'000'000;

/**
 * A generator of the ideal, or nullopt when it is not principal.
 *
 * A generator of the primitive part has norm +-a; after scaling by a power of
 * the fundamental unit lambda it satisfies |x|, |x'| < sqrt(lambda * a), which
 * bounds its omega-coordinate y. Every y in that box is tried.
 */
inline std::optional<QuadInt> principal_generator(const QuadIdeal& x, const std::optional<QuadInt>& lambda = std::nullopt)
{
    const QuadraticField& f = x.field();
    if (x.is_zero()) return QuadInt(f, 0);
    if (x.is_unit()) return QuadInt(f, 1);
    const QuadIdeal prim = x.primitive_part();
    const BigInt& a = prim.a();
    const BigInt m = f.m();

    BigInt y_max;
    if (f.is_real()) {
        const QuadInt l = lambda ? *lambda : fundamental_unit(f);
        Real bound = 2 * mp::sqrt(real_value(l) * Real(a) / Real(m)) + 1;
        if (bound > kMaxPrincipalSearch)
            throw unverified_error("principality search box for " + to_text(x) + " is too large");
        y_max = BigInt(mp::floor(bound));
    } else {
        y_max = isqrt(4 * a / abs(m));
    }
    const std::vector<int> signs = f.is_real() ? std::vector<int>{1, -1} : std::vector<int>{1};

    auto try_y = [&](const BigInt& y) -> std::optional<QuadInt> {
        for (int s : signs) {
            BigInt t;
            if (f.is_half()) {
                // (2x + y)^2 = m y^2 + 4 s a
                if (!is_perfect_square(m * y * y + 4 * s * a, &t)) continue;
                for (const BigInt& u : {t, BigInt(-t)}) {
                    if (floor_mod(BigInt(u - y), BigInt(2)) != 0) continue;
                    QuadInt cand(f, (u - y) / 2, y);
                    if (prim.contains(cand)) return cand;
                }
            } else {
                if (!is_perfect_square(m * y * y + s * a, &t)) continue;
                for (const BigInt& u : {t, BigInt(-t)}) {
                    QuadInt cand(f, u, y);
                    if (prim.contains(cand)) return cand;
                }
            }
        }
        return std::nullopt;
    };

    for (BigInt y = 0; y <= y_max; ++y) {
        auto found = try_y(y);
        if (!found && y != 0) found = try_y(-y);
        if (found) {
            QuadInt g = x.c() * *found;
            if (!(principal_ideal(g) == x)) throw std::logic_error("principal generator failed confirmation");
            return g;
        }
    }
    return std::nullopt;
}

inline bool is_principal(const QuadIdeal& x, const std::optional<QuadInt>& lambda = std::nullopt)
{
    return principal_generator(x, lambda).has_value();
}

} // namespace quadrantal
