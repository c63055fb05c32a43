#pragma once

/**
 * @file units.hpp
 * @brief Unit groups of quadratic rings: roots of unity, fundamental units,
 *        Pell equations and regulators
 *
 * The fundamental unit of a real quadratic ring is read off the continued
 * fraction of omega itself, so it comes out directly in the basis {1, omega}
 * for both shapes of the ring of integers.
 */

#include "quadrantal/core.hpp"
#include "quadrantal/quadratic.hpp"

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadrantal {

inline constexpr std::size_t kDefaultMaxPeriod = 1'000'000;
inline constexpr int kDefaultDecimalDigits = 50;
inline constexpr int kMinDecimalDigits = 30;
inline constexpr int kMaxDecimalDigits = 150;

/// Decimal digits for regulator-style output: QUADRANTAL_PRECISION if set (clamped to [30, 150]), else 50.
inline int decimal_digits_from_env()
{
    const char* env = std::getenv("QUADRANTAL_PRECISION");
    if (!env || !*env) return kDefaultDecimalDigits;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0') throw input_error("QUADRANTAL_PRECISION must be an integer, got '" + std::string(env) + "'");
    if (v < kMinDecimalDigits) return kMinDecimalDigits;
    if (v > kMaxDecimalDigits) return kMaxDecimalDigits;
    return static_cast<int>(v);
}

// ---------------------------------------------------------------------------
// Roots of unity

/// The root of unity of smallest argument in (0, 2pi): i, (1 + sqrt -3)/2, or -1.
inline QuadInt torsion_generator(const QuadraticField& f)
{
    if (f.m() == -1 || f.m() == -3) return QuadInt::omega(f);
    return QuadInt(f, -1);
}

/// All roots of unity in the ring, as successive powers of torsion_generator.
inline std::vector<QuadInt> torsion_units(const QuadraticField& f)
{
    const QuadInt g = torsion_generator(f);
    std::vector<QuadInt> units{QuadInt(f, 1)};
    for (QuadInt x = g; !(x == units.front()); x = x * g) units.push_back(x);
    return units;
}

// ---------------------------------------------------------------------------
// Continued fraction of omega

struct ContinuedFraction {
    std::vector<BigInt> partial_quotients;  ///< a_0 ... through the end of the first period
    std::size_t preperiod = 0;              ///< index where the period starts
    std::size_t period = 0;
};

namespace detail {

/// State of the quadratic irrational (P + sqrt D)/Q with Q | D - P^2.
class QuadraticIrrational {
public:
    QuadraticIrrational(BigInt p, BigInt q, BigInt d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)), root_(isqrt(d_)) {}

    static QuadraticIrrational omega(const QuadraticField& f)
    {
        if (f.is_half()) return {1, 2, f.m()};
        return {0, 1, f.m()};
    }

    std::pair<BigInt, BigInt> state() const { return {p_, q_}; }

    /// Emit floor(xi) and replace xi by 1/(xi - floor(xi)).
    BigInt next()
    {
        BigInt a = q_ > 0 ? floor_div(p_ + root_, q_) : BigInt(-(floor_div(p_ + root_, -q_) + 1));
        p_ = a * q_ - p_;
        q_ = (d_ - p_ * p_) / q_;
        return a;
    }

private:
    BigInt p_, q_, d_, root_;
};

} // namespace detail

/// Periodic expansion of omega, with the period found by repetition of (P, Q).
inline ContinuedFraction continued_fraction_of_omega(const QuadraticField& f, std::size_t max_period = kDefaultMaxPeriod)
{
    if (!f.is_real()) throw precondition_error("continued fraction of omega needs m > 0");
    auto xi = detail::QuadraticIrrational::omega(f);
    std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
    ContinuedFraction cf;
    for (std::size_t k = 0;; ++k) {
        auto [it, inserted] = seen.emplace(xi.state(), k);
        if (!inserted) {
            cf.preperiod = it->second;
            cf.period = k - it->second;
            return cf;
        }
        if (k > max_period)
            throw precondition_error("continued fraction period exceeds the bound " + std::to_string(max_period));
        cf.partial_quotients.push_back(xi.next());
    }
}

// ---------------------------------------------------------------------------
// Fundamental unit

/**
 * The unit lambda > 1 generating U(R)/{+-1}, for m > 0.
 *
 * For each convergent p/q of omega the element p - q*conj(omega) is tested;
 * the first one of norm +-1 is returned, so no smaller convergent gives a unit.
 */
inline QuadInt fundamental_unit(const QuadraticField& f, std::size_t max_period = kDefaultMaxPeriod)
{
    if (!f.is_real()) throw precondition_error("imaginary quadratic rings have no fundamental unit");
    auto xi = detail::QuadraticIrrational::omega(f);
    BigInt p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
    // One full period always suffices; twice the cap bounds preperiod + period.
    for (std::size_t k = 0; k <= 2 * max_period; ++k) {
        BigInt a = xi.next();
        BigInt p = a * p_prev + p_prev2;
        BigInt q = a * q_prev + q_prev2;
        p_prev2 = std::exchange(p_prev, p);
        q_prev2 = std::exchange(q_prev, q);
        QuadInt candidate = quad_conj(QuadInt(f, p, -q));
        if (is_unit(candidate)) return candidate;
    }
    throw precondition_error("no unit found within " + std::to_string(max_period) + " continued-fraction steps");
}

// ---------------------------------------------------------------------------
// Pell equations

enum class PellKind { plus_one, minus_one, plus_four, minus_four };

inline int pell_rhs(PellKind kind)
{
    switch (kind) {
    case PellKind::plus_one: return 1;
    case PellKind::minus_one: return -1;
    case PellKind::plus_four: return 4;
    case PellKind::minus_four: return -4;
    }
    return 0;
}

struct PellSolution {
    BigInt x;
    BigInt y;
    PellKind kind;
    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/**
 * Least positive solution of x^2 - m y^2 = rhs, or nullopt.
 *
 * Every positive solution corresponds to a power lambda^k > 1 of the
 * fundamental unit (written as x + y sqrt m, or (x + y sqrt m)/2 for the +-4
 * forms), and powers increase with k, so the first power of the right norm
 * and shape is the least solution.
 */
inline std::optional<PellSolution> pell_solve(const BigInt& m, PellKind kind)
{
    if (m <= 1) throw precondition_error("Pell equations need a square-free m > 1");
    const QuadraticField f(m);
    const QuadInt lambda = fundamental_unit(f);
    const int rhs = pell_rhs(kind);
    const int norm_sign = rhs > 0 ? 1 : -1;
    const bool four = rhs == 4 || rhs == -4;
    if (norm_sign < 0 && quad_norm(lambda) == 1) return std::nullopt;

    if (four && !f.is_half()) {
        auto base = pell_solve(m, norm_sign > 0 ? PellKind::plus_one : PellKind::minus_one);
        if (!base) return std::nullopt;
        return PellSolution{2 * base->x, 2 * base->y, kind};
    }

    QuadInt power = lambda;
    // The unit index of Z[sqrt m] in Z[omega] divides 3, so k <= 6 covers every case.
    for (int k = 1; k <= 6; ++k, power = power * lambda) {
        if (quad_norm(power) != norm_sign) continue;
        // Surd form: power = X/2 + (Y/2) sqrt m.
        BigInt X = f.is_half() ? BigInt(2 * power.a() + power.b()) : BigInt(2 * power.a());
        BigInt Y = f.is_half() ? power.b() : BigInt(2 * power.b());
        if (four) return PellSolution{X, Y, kind};
        if (X % 2 == 0 && Y % 2 == 0) return PellSolution{X / 2, Y / 2, kind};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Unit group report

struct UnitGroupReport {
    QuadraticField field;
    int torsion_order = 2;
    QuadInt torsion_generator;
    int rank = 0;
    std::optional<QuadInt> fundamental_unit;
    Real regulator;  ///< log(lambda), or exactly 1 when the rank is 0
    int precision_digits = kDefaultDecimalDigits;

    std::string regulator_text() const { return to_decimal(regulator, precision_digits); }
};

inline UnitGroupReport unit_group_report(const QuadraticField& f, int digits = kDefaultDecimalDigits)
{
    if (digits < kMinDecimalDigits || digits > kMaxDecimalDigits)
        throw precondition_error("regulator precision must lie in [30, 150] digits");
    UnitGroupReport r{f, 0, torsion_generator(f), 0, std::nullopt, Real(1), digits};
    r.torsion_order = static_cast<int>(torsion_units(f).size());
    if (f.is_real()) {
        r.rank = 1;
        r.fundamental_unit = fundamental_unit(f);
        r.regulator = mp::log(real_value(*r.fundamental_unit));
    }
    return r;
}

struct UnitDecomposition {
    int torsion_exponent;  ///< k in u = g^k * lambda^a, 0 <= k < w
    BigInt unit_exponent;  ///< a; always 0 when the rank is 0
    friend bool operator==(const UnitDecomposition&, const UnitDecomposition&) = default;
};

/// The unique (k, a) with u = g^k * lambda^a, g = torsion_generator.
inline UnitDecomposition unit_membership(const QuadraticField& f, const QuadInt& u)
{
    if (!(u.field() == f)) throw precondition_error("unit belongs to a different field");
    if (!is_unit(u)) throw precondition_error(to_text(u) + " is not a unit");
    const auto torsion = torsion_units(f);
    if (!f.is_real()) {
        for (std::size_t k = 0; k < torsion.size(); ++k)
            if (torsion[k] == u) return {static_cast<int>(k), 0};
        throw precondition_error("unit not found among the roots of unity");
    }
    const QuadInt lambda = fundamental_unit(f);
    const int k = real_value(u) < 0 ? 1 : 0;
    const QuadInt v = k ? -u : u;
    const Real ratio = mp::log(real_value(v)) / mp::log(real_value(lambda));
    const BigInt a(mp::round(ratio));
    // lambda^-1 = N(lambda) * conj(lambda)
    const QuadInt step = a >= 0 ? lambda : quad_norm(lambda) * quad_conj(lambda);
    const QuadInt recomposed = pow(step, static_cast<unsigned>(abs(a)));
    if (!(recomposed == v)) throw precondition_error("unit decomposition failed exact confirmation");
    return {k, a};
}

} // namespace quadrantal
