#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "chebknot/errors.hpp"
#include "chebknot/knot_class.hpp"
#include "chebknot/parallel.hpp"
#include "chebknot/sign_word.hpp"

namespace chebknot {

/// SplitMix64-style counter stream: value #index of the stream started at
/// `seed`. Pure function of (seed, index), so any partitioning of trials
/// across workers reproduces the same draws.
inline std::uint64_t stream_value(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Word for one trial: n fair sign choices from the (seed, trial) substream.
inline SignWord sample_word(long long n, std::uint64_t seed, std::uint64_t trial) {
    std::vector<std::int8_t> letters(static_cast<std::size_t>(n));
    std::uint64_t blocks = (static_cast<std::uint64_t>(n) + 63) / 64;
    std::uint64_t bits = 0;
    for (long long i = 0; i < n; ++i) {
        if (i % 64 == 0) bits = stream_value(seed, trial * blocks + static_cast<std::uint64_t>(i / 64));
        letters[static_cast<std::size_t>(i)] = (bits >> (i % 64)) & 1 ? 1 : -1;
    }
    return SignWord(std::move(letters));
}

struct EmpiricalDistribution {
    long long n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::map<KnotClass, std::uint64_t> counts;
};

/// Uniform Monte Carlo over {+,-}^n. Identical (n, trials, seed) give
/// identical counts regardless of CHEBKNOT_THREADS.
inline EmpiricalDistribution sample_distribution(long long n, std::uint64_t trials, std::uint64_t seed) {
    if (n < 0) throw InvalidInputError("word length must be nonnegative");
    if (n % 3 == 2) {
        throw LinkNotKnotError("word length " + std::to_string(n) +
                               " = 2 mod 3 gives two-component links, not knots");
    }
    if (trials < 1) throw InvalidInputError("trials must be >= 1");

    unsigned workers = worker_count();
    std::vector<std::map<KnotClass, std::uint64_t>> partial(std::max(1u, workers));
    parallel_chunks(0, trials, [&](unsigned worker, std::uint64_t lo, std::uint64_t hi) {
        auto& local = partial[worker];
        for (std::uint64_t t = lo; t < hi; ++t) {
            local[classify(sample_word(n, seed, t))] += 1;
        }
    });

    EmpiricalDistribution out;
    out.n = n;
    out.trials = trials;
    out.seed = seed;
    for (auto& local : partial) {
        for (auto& [cls, c] : local) out.counts[cls] += c;
    }
    return out;
}

struct ZScoreRow {
    KnotClass knot;
    std::uint64_t count = 0;
    double phat = 0.0;
    double p = 0.0;
    double z = 0.0;
    bool flagged = false;
};

struct ComparisonReport {
    std::vector<ZScoreRow> rows; // sorted by (alpha, beta)
    bool any_flagged = false;
};

inline constexpr double kZScoreThreshold = 4.0;

/// Per-class z = (phat - p) / sqrt(p(1-p)/T) against exact probabilities;
/// |z| > 4 is flagged (false-alarm rate ~6e-5 per class).
inline ComparisonReport compare(const EmpiricalDistribution& e, const std::map<KnotClass, double>& exact) {
    ComparisonReport report;
    double trials = static_cast<double>(e.trials);
    for (const auto& [cls, count] : e.counts) {
        ZScoreRow row;
        row.knot = cls;
        row.count = count;
        row.phat = static_cast<double>(count) / trials;
        auto it = exact.find(cls);
        row.p = it == exact.end() ? 0.0 : it->second;
        if (row.p > 0.0 && row.p < 1.0) {
            row.z = (row.phat - row.p) / std::sqrt(row.p * (1.0 - row.p) / trials);
        } else {
            row.z = row.phat == row.p ? 0.0 : std::numeric_limits<double>::infinity();
        }
        row.flagged = std::abs(row.z) > kZScoreThreshold;
        report.any_flagged = report.any_flagged || row.flagged;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace chebknot
