#pragma once

#include <map>
#include <string>

#include "chebknot/bigint.hpp"
#include "chebknot/errors.hpp"
#include "chebknot/knot_class.hpp"

namespace chebknot {

/// Exact appearance probability: numerator / 2^n.
struct ExactProbability {
    BigInt numerator;
    long long n = 0;
    double value = 0.0;
};

inline int residue_of(long long n) { return static_cast<int>(mod_floor(n, 3)); }

/// Diagonal value x_k^{(k)} for k >= 1 from the closed forms: writing
/// k = 3m + ell against the residue's reduced length ell,
///   unknot:           x_{3m+1} = 4(m-1)+2 (m >= 1),  x_3 = 2,  x_{3m} = 4(m-1) (m >= 2)
///   other knots:      x_k = 0 for k <= ell,  x_{3+ell} = r(ell),  x_{3m+ell} = 4(m-1) r(ell)
/// and x_1 = x_4 for every knot.
inline BigInt x_positive(long long k, const ReducedProfile& p) {
    int residue = residue_of(k);
    if (residue == 2) {
        throw InvalidInputError("diagonal index " + std::to_string(k) + " = 2 mod 3 is invalid");
    }
    if (k < 1) throw InvalidInputError("x_positive requires k >= 1");
    if (k == 1) return x_positive(4, p); // base (i)

    if (p.knot.is_unknot()) {
        if (residue == 1) {
            long long m = (k - 1) / 3; // m >= 1
            return BigInt(static_cast<long>(4 * (m - 1) + 2));
        }
        if (k == 3) return BigInt(2);
        long long m = k / 3; // m >= 2; r(ell0) = 1 for the unknot
        return BigInt(static_cast<long>(4 * (m - 1)));
    }

    long long ell = residue == 0 ? p.ell0 : p.ell1;
    long long r = residue == 0 ? p.r0 : p.r1;
    if (k <= ell) return BigInt(0);
    long long m = (k - ell) / 3;
    if (m == 1) return BigInt(static_cast<long>(r));
    return BigInt(static_cast<long>(4 * (m - 1) * r));
}

/// Memoized diagonal values x_k^{(k)} of one residue class for one knot.
/// Nonpositive indices come from the two recursions (even k = 2(6-n),
/// odd k = 2(4-n)+1) whose operands are strictly larger same-residue
/// indices, so on-demand computation always terminates at the closed forms.
class XTable {
public:
    XTable(ReducedProfile p, int residue) : profile_(std::move(p)), residue_(residue) {
        if (residue != 0 && residue != 1) {
            throw InvalidInputError("x-table residue must be 0 or 1");
        }
    }

    const ReducedProfile& profile() const { return profile_; }
    int residue() const { return residue_; }
    const std::map<long long, BigInt>& values() const { return values_; }

    const BigInt& at(long long k) {
        if (residue_of(k) != residue_) {
            throw InvalidInputError("index " + std::to_string(k) + " is not " +
                                    std::to_string(residue_) + " mod 3");
        }
        auto it = values_.find(k);
        if (it != values_.end()) return it->second;
        BigInt v = k >= 1 ? x_positive(k, profile_) : compute_nonpositive(k);
        return values_.emplace(k, std::move(v)).first->second;
    }

private:
    BigInt compute_nonpositive(long long k) {
        if (k % 2 == 0) {
            // x_{2(6-n)} = -sum_{j=1}^{n-5} C(n-5, j-1) x_{n-3j}
            long long n = (12 - k) / 2;
            BigInt sum = 0;
            for (long long j = 1; j <= n - 5; ++j) {
                sum += binomial(n - 5, j - 1) * at(n - 3 * j);
            }
            return -sum;
        }
        // x_{2(4-n)+1} = sum_{j=0}^{n-4} [C(n-4, j) - C(n-4, j-1)] x_{n-3j},  C(.,-1) = 0
        long long n = (9 - k) / 2;
        BigInt sum = 0;
        for (long long j = 0; j <= n - 4; ++j) {
            sum += (binomial(n - 4, j) - binomial(n - 4, j - 1)) * at(n - 3 * j);
        }
        return sum;
    }

    ReducedProfile profile_;
    int residue_;
    std::map<long long, BigInt> values_;
};

/// Recursion value for k <= 0, reading operands from the table.
inline BigInt x_nonpositive(long long k, XTable& table) {
    if (k > 0) throw InvalidInputError("x_nonpositive requires k <= 0");
    return table.at(k);
}

/// Table holding every diagonal the probability formula at word length n
/// touches: n+3, n, n-3, ..., down to -2n+15.
inline XTable build_x_table(const ReducedProfile& p, long long n) {
    if (n < 6 || residue_of(n) == 2) {
        throw InvalidInputError("x-table word length must be >= 6 and 0 or 1 mod 3");
    }
    XTable table(p, residue_of(n));
    for (long long k = n + 3; k >= 15 - 2 * n; k -= 3) table.at(k);
    return table;
}

/// Off-diagonal value via the binomial expansion
/// x_i^{(n)} = sum_{j=0}^{n-i} C(n-i, j) x_{n-3j}^{(n-3j)}.
inline BigInt binom_x(long long i, long long n, XTable& table) {
    if (i > n) throw InvalidInputError("binom_x requires i <= n");
    BigInt sum = 0;
    for (long long j = 0; j <= n - i; ++j) {
        sum += binomial(n - i, j) * table.at(n - 3 * j);
    }
    return sum;
}

inline BigInt binom_x(long long i, long long n, const ReducedProfile& p) {
    XTable table(p, residue_of(n));
    return binom_x(i, n, table);
}

/// Main formula: the number of length-n words representing the knot is
///   x_{n+3} + sum_{i=0}^{n-6} [C(n-5, i+1) + 4 C(n-5, i)] x_{n-3i} + 4 x_{15-2n},
/// divided by 2^n. Valid for n >= 6; smaller n are answered by enumeration
/// (see knot_probability).
inline ExactProbability probability(XTable& table, long long n) {
    if (n >= 0 && residue_of(n) == 2) {
        throw LinkNotKnotError("word length " + std::to_string(n) +
                               " = 2 mod 3 gives a two-component link, not a knot");
    }
    if (n < 6) throw InvalidInputError("the closed formula requires n >= 6");
    if (residue_of(n) != table.residue()) {
        throw InvalidInputError("x-table residue does not match n");
    }
    BigInt num = table.at(n + 3);
    for (long long i = 0; i <= n - 6; ++i) {
        num += (binomial(n - 5, i + 1) + 4 * binomial(n - 5, i)) * table.at(n - 3 * i);
    }
    num += 4 * table.at(15 - 2 * n);
    double value = scaled_to_double(num, n);
    return ExactProbability{std::move(num), n, value};
}

inline ExactProbability probability(const ReducedProfile& p, long long n) {
    if (n < 6 || residue_of(n) == 2) {
        // Match the table/residue errors before building anything.
        XTable dummy(p, 0);
        return probability(dummy, n);
    }
    XTable table = build_x_table(p, n);
    return probability(table, n);
}

/// Count of length-n move-free words representing the knot: r(ell) at the
/// two reduced lengths, zero everywhere else.
inline long long no_move_count(const ReducedProfile& p, long long n) {
    if (n < 0) throw InvalidInputError("word length must be nonnegative");
    if (n == p.ell0) return p.r0;
    if (n == p.ell1) return p.r1;
    return 0;
}

} // namespace chebknot
