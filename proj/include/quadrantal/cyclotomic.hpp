#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Splitting of rational primes in cyclotomic fields Q(zeta_m) and related constants
 *
 * Only the parameters (e, f, g) are computed; there is no ideal arithmetic
 * in Z[zeta_m].
 */

#include "quadrantal/core.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quadrantal {

inline BigInt euler_phi(const BigInt& m)
{
    if (m < 1) throw precondition_error("phi needs m >= 1");
    BigInt phi = 1;
    for (const auto& pp : factor_trial(m)) {
        phi *= pp.prime - 1;
        for (unsigned i = 1; i < pp.exponent; ++i) phi *= pp.prime;
    }
    return phi;
}

/// Least f >= 1 with a^f = 1 mod n.
inline BigInt multiplicative_order(const BigInt& a, const BigInt& n)
{
    if (n < 2) throw precondition_error("multiplicative order needs n >= 2");
    if (gcd(a, n) != 1) throw precondition_error("multiplicative order needs gcd(a, n) = 1");
    BigInt order = euler_phi(n);
    for (const auto& pp : factor_trial(order)) {
        while (order % pp.prime == 0 && powmod(a, order / pp.prime, n) == 1) order /= pp.prime;
    }
    return order;
}

struct CyclotomicDescriptor {
    BigInt m;
    BigInt degree;
    std::optional<BigInt> prime_discriminant;  ///< (-1)^((p-1)/2) p^(p-2) when m = p is an odd prime
};

inline CyclotomicDescriptor cyclotomic_descriptor(const BigInt& m)
{
    if (m < 3) throw precondition_error("cyclotomic modulus must be >= 3");
    CyclotomicDescriptor d{m, euler_phi(m), std::nullopt};
    if (m % 2 != 0 && is_prime(m)) {
        const auto p = static_cast<unsigned>(m);
        BigInt disc = pow(m, p - 2);
        if ((p - 1) / 2 % 2) disc = -disc;
        d.prime_discriminant = disc;
    }
    return d;
}

enum class CycloClass { split, inert, ramified, completely_ramified, mixed };

inline std::string to_string(CycloClass c)
{
    switch (c) {
    case CycloClass::split: return "split";
    case CycloClass::inert: return "inert";
    case CycloClass::ramified: return "ramified";
    case CycloClass::completely_ramified: return "completely_ramified";
    case CycloClass::mixed: return "mixed";
    }
    return "";
}

struct CycloSplitting {
    BigInt m;
    BigInt q;
    unsigned k = 0;  ///< m = q^k n with q not dividing n
    BigInt n;
    BigInt e, f, g;
    BigInt phi_m;
    std::vector<CycloClass> labels;  ///< every label that applies
    CycloClass classification;       ///< split, inert or completely_ramified when one applies, else mixed
    std::string notes;
};

inline CycloSplitting split_prime_cyclotomic(const BigInt& m, const BigInt& q)
{
    if (m < 3) throw precondition_error("cyclotomic modulus must be >= 3");
    if (q < 2 || !is_prime(q)) throw precondition_error("q = " + q.str() + " is not a prime");
    CycloSplitting s;
    s.m = m;
    s.q = q;
    s.n = m;
    BigInt qk = 1;
    while (s.n % q == 0) {
        s.n /= q;
        qk *= q;
        ++s.k;
    }
    s.phi_m = euler_phi(m);
    s.e = euler_phi(qk);
    if (s.n == 1) {
        s.f = 1;
        s.g = 1;
    } else {
        s.f = multiplicative_order(q, s.n);
        s.g = euler_phi(s.n) / s.f;
    }

    // e > 1 rather than q | m: for m = 2 mod 4 the prime 2 divides m but is unramified.
    const bool ramified = s.e > 1;
    if (ramified) s.labels.push_back(CycloClass::ramified);
    if (ramified && s.g == 1) s.labels.push_back(CycloClass::completely_ramified);
    if (!ramified && s.g == s.phi_m) s.labels.push_back(CycloClass::split);
    if (!ramified && s.g == 1) s.labels.push_back(CycloClass::inert);

    s.classification = CycloClass::mixed;
    for (auto c : {CycloClass::split, CycloClass::inert, CycloClass::completely_ramified})
        if (std::find(s.labels.begin(), s.labels.end(), c) != s.labels.end()) s.classification = c;
    if (s.classification == CycloClass::mixed) s.labels.push_back(CycloClass::mixed);

    if (s.n == 1) {
        s.notes = "(" + q.str() + ") = (1 - w)^" + s.e.str() + " where w is a primitive " + m.str() + "-th root of unity";
    } else if (s.classification == CycloClass::completely_ramified) {
        s.notes = "(" + q.str() + ") = P^" + s.e.str() + " with P of degree " + s.f.str();
    }
    return s;
}

/// m (up to m = 2 mod 4 duplicates) with Z[zeta_m] a unique factorization domain.
inline constexpr std::int64_t kCyclotomicClassNumberOne[] = {3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 17, 19, 20, 21,
                                                             24, 25, 27, 28, 32, 33, 35, 36, 40, 44, 45, 48, 60, 84};

/// Square-free m < 0 with Q(sqrt m) of class number one.
inline constexpr std::int64_t kImaginaryQuadraticClassNumberOne[] = {-1, -2, -3, -7, -11, -19, -43, -67, -163};

struct ClassNumberOneLists {
    std::span<const std::int64_t> cyclotomic;
    std::span<const std::int64_t> imaginary_quadratic;
};

inline ClassNumberOneLists class_number_one_lists()
{
    return {kCyclotomicClassNumberOne, kImaginaryQuadraticClassNumberOne};
}

} // namespace quadrantal
