#pragma once

#include "chebknot/exact_engine.hpp"
#include "chebknot/oracle.hpp"

namespace chebknot {

/// Exact P(K appears in T(3, n+1)). Uses the closed formula for n >= 6;
/// for n < 6 (where the formula's index ranges degenerate) the answer comes
/// from enumerating all 2^n <= 32 words.
inline ExactProbability knot_probability(const ReducedProfile& p, long long n) {
    if (n < 0) throw InvalidInputError("word length must be nonnegative");
    if (n % 3 == 2) {
        throw LinkNotKnotError("word length " + std::to_string(n) +
                               " = 2 mod 3 gives a two-component link, not a knot");
    }
    if (n >= 6) return probability(p, n);
    Distribution d = enumerate_distribution(n);
    BigInt count = 0;
    if (auto it = d.counts.find(p.knot); it != d.counts.end()) count = it->second;
    double value = scaled_to_double(count, n);
    return ExactProbability{std::move(count), n, value};
}

inline ExactProbability knot_probability(const KnotClass& k, long long n) {
    return knot_probability(profile(k), n);
}

} // namespace chebknot
