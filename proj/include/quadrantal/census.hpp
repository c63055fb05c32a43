#pragma once

/**
 * @file census.hpp
 * @brief Counting ideals by norm and comparing Z(k)/k with its limit sigma * h
 *
 * sigma = 2^(r+1) pi^s rho / (w sqrt|d|), with r the unit rank, s the number
 * of complex embedding pairs, rho the regulator (1 when r = 0) and w the
 * number of roots of unity.
 */

#include "quadrantal/class_group.hpp"
#include "quadrantal/core.hpp"
#include "quadrantal/ideal.hpp"
#include "quadrantal/quadratic.hpp"
#include "quadrantal/units.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadrantal {

inline constexpr std::int64_t kMaxCensusCutoff = 10'000'000;
inline constexpr std::int64_t kMaxPerClassCells = 200'000'000;

namespace detail {

/// Smallest prime factor of every n <= k (0 and 1 map to 0).
inline std::vector<std::uint32_t> smallest_prime_factors(std::int64_t k)
{
    std::vector<std::uint32_t> spf(static_cast<std::size_t>(k) + 1, 0);
    for (std::int64_t i = 2; i <= k; ++i) {
        if (spf[static_cast<std::size_t>(i)]) continue;
        for (std::int64_t j = i; j <= k; j += i)
            if (!spf[static_cast<std::size_t>(j)]) spf[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(i);
    }
    return spf;
}

} // namespace detail

/// a[n] = number of ideals of norm exactly n, for 0 <= n <= k (a[0] = 0).
inline std::vector<std::uint64_t> ideal_count_sieve(const QuadraticField& f, std::int64_t k)
{
    if (k < 1) throw precondition_error("census cutoff must be >= 1");
    if (k > kMaxCensusCutoff) throw precondition_error("census cutoff exceeds " + std::to_string(kMaxCensusCutoff));
    const auto spf = detail::smallest_prime_factors(k);
    std::vector<std::uint64_t> a(static_cast<std::size_t>(k) + 1, 0);
    std::vector<SplittingType> type(static_cast<std::size_t>(k) + 1, SplittingType::inert);
    if (k >= 1) a[1] = 1;
    for (std::int64_t n = 2; n <= k; ++n) {
        const std::int64_t p = spf[static_cast<std::size_t>(n)];
        if (p == n) type[static_cast<std::size_t>(p)] = splitting_type(f.m(), f.discriminant(), p);
        std::int64_t r = n;
        std::uint64_t j = 0;
        while (r % p == 0) {
            r /= p;
            ++j;
        }
        std::uint64_t local = 1;
        switch (type[static_cast<std::size_t>(p)]) {
        case SplittingType::split: local = j + 1; break;
        case SplittingType::inert: local = j % 2 == 0 ? 1 : 0; break;
        case SplittingType::ramified: local = 1; break;
        }
        a[static_cast<std::size_t>(n)] = local * a[static_cast<std::size_t>(r)];
    }
    return a;
}

struct SigmaReport {
    Real sigma;
    std::optional<Real> real_closed_form;  ///< 2 log(lambda)/sqrt(m) or log(lambda)/sqrt(m), real fields only
};

inline SigmaReport sigma_theoretical(const QuadraticField& f)
{
    const auto units = unit_group_report(f);
    const int s = f.is_real() ? 0 : 1;
    const Real rho = units.regulator;
    const Real sqrt_d = mp::sqrt(Real(abs(BigInt(f.discriminant()))));
    const Real two_pow = units.rank == 1 ? Real(4) : Real(2);
    SigmaReport r{two_pow * (s ? pi_real() : Real(1)) * rho / (Real(units.torsion_order) * sqrt_d), std::nullopt};
    if (f.is_real()) {
        const Real log_lambda = rho / mp::sqrt(Real(f.m()));
        r.real_closed_form = f.is_half() ? 2 * log_lambda : log_lambda;
        if (abs(*r.real_closed_form - r.sigma) > Real("1e-40")) throw std::logic_error("sigma disagrees with its closed form");
    }
    return r;
}

struct CensusCheckpoint {
    std::int64_t k;
    std::uint64_t count;
    Real ratio;  ///< Z(k)/k
};

struct CensusResult {
    QuadraticField field;
    std::int64_t k = 0;
    std::uint64_t z_k = 0;
    std::size_t h = 1;
    Real sigma;
    Real empirical;             ///< Z(k)/k
    Real deviation;             ///< |Z(k)/k - sigma h|
    Real normalized_deviation;  ///< deviation * sqrt(k)
    std::optional<std::vector<std::uint64_t>> per_class;
    std::vector<Real> per_class_normalized_deviation;  ///< |Z_C(k)/k - sigma| * sqrt(k)
    std::vector<CensusCheckpoint> checkpoints;
};

/// 1, 2, 5, 10, 20, 50, ... up to k, and k itself.
inline std::vector<std::int64_t> census_checkpoints(std::int64_t k)
{
    std::vector<std::int64_t> out;
    for (std::int64_t scale = 1; scale <= k; scale *= 10)
        for (std::int64_t step : {1, 2, 5})
            if (step * scale <= k) out.push_back(step * scale);
    if (out.empty() || out.back() != k) out.push_back(k);
    return out;
}

/**
 * Number of ideals of norm <= k in each class. Norm counts are multiplicative
 * in n with local factors now carrying a class label, so each prime power
 * contributes a small distribution over the class group that is convolved in.
 */
inline std::vector<std::uint64_t> per_class_counts(const ClassGroupReport& g, std::int64_t k)
{
    const QuadraticField& f = g.field;
    const std::size_t h = g.h();
    if (static_cast<std::int64_t>(h) * k > kMaxPerClassCells) throw precondition_error("per-class census is too large for h * k");
    const auto spf = detail::smallest_prime_factors(k);
    // counts[n * h + c] = number of ideals of norm n in class c
    std::vector<std::uint32_t> counts(static_cast<std::size_t>(k + 1) * h, 0);
    std::vector<std::int32_t> prime_class(static_cast<std::size_t>(k) + 1, -1);
    std::vector<SplittingType> type(static_cast<std::size_t>(k) + 1, SplittingType::inert);
    counts[h * 1 + 0] = 1;
    std::vector<std::uint32_t> local(h);
    for (std::int64_t n = 2; n <= k; ++n) {
        const std::int64_t p = spf[static_cast<std::size_t>(n)];
        const auto pi = static_cast<std::size_t>(p);
        if (p == n) {
            type[pi] = splitting_type(f.m(), f.discriminant(), p);
            if (type[pi] != SplittingType::inert)
                prime_class[pi] = static_cast<std::int32_t>(g.class_index(split_prime(f, p).factors[0].prime));
        }
        std::int64_t r = n;
        unsigned j = 0;
        while (r % p == 0) {
            r /= p;
            ++j;
        }
        std::fill(local.begin(), local.end(), 0);
        if (type[pi] == SplittingType::inert) {
            if (j % 2 == 0) local[0] = 1;
        } else if (type[pi] == SplittingType::ramified) {
            local[g.power(static_cast<std::size_t>(prime_class[pi]), j)] = 1;
        } else {
            // P^i conj(P)^(j-i) lies in class x^i * (x^-1)^(j-i)
            const auto x = static_cast<std::size_t>(prime_class[pi]);
            const std::size_t xinv = g.inverse[x];
            for (unsigned i = 0; i <= j; ++i) ++local[g.table[g.power(x, i)][g.power(xinv, j - i)]];
        }
        const std::size_t base_r = static_cast<std::size_t>(r) * h, base_n = static_cast<std::size_t>(n) * h;
        for (std::size_t c1 = 0; c1 < h; ++c1) {
            if (!local[c1]) continue;
            for (std::size_t c2 = 0; c2 < h; ++c2) counts[base_n + g.table[c1][c2]] += local[c1] * counts[base_r + c2];
        }
    }
    std::vector<std::uint64_t> totals(h, 0);
    for (std::int64_t n = 1; n <= k; ++n)
        for (std::size_t c = 0; c < h; ++c) totals[c] += counts[static_cast<std::size_t>(n) * h + c];
    return totals;
}

inline CensusResult census_check(const QuadraticField& f, std::int64_t k, bool per_class = false)
{
    if (k < 100) throw precondition_error("census cutoff must be >= 100");
    const auto a = ideal_count_sieve(f, k);
    const ClassGroupReport g = class_group(f);
    CensusResult r{f};
    r.k = k;
    r.h = g.h();
    r.sigma = sigma_theoretical(f).sigma;

    std::uint64_t running = 0;
    std::size_t next = 0;
    const auto marks = census_checkpoints(k);
    for (std::int64_t n = 1; n <= k; ++n) {
        running += a[static_cast<std::size_t>(n)];
        if (next < marks.size() && marks[next] == n) {
            r.checkpoints.push_back({n, running, Real(running) / Real(n)});
            ++next;
        }
    }
    r.z_k = running;
    const Real kk(k);
    r.empirical = Real(r.z_k) / kk;
    r.deviation = abs(r.empirical - r.sigma * Real(r.h));
    r.normalized_deviation = r.deviation * mp::sqrt(kk);

    if (per_class) {
        r.per_class = per_class_counts(g, k);
        std::uint64_t sum = 0;
        for (auto c : *r.per_class) {
            sum += c;
            r.per_class_normalized_deviation.push_back(abs(Real(c) / kk - r.sigma) * mp::sqrt(kk));
        }
        if (sum != r.z_k) throw std::logic_error("per-class counts do not add up to Z(k)");
    }
    return r;
}

} // namespace quadrantal
