#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chebknot/bigint.hpp"
#include "chebknot/errors.hpp"
#include "chebknot/sign_word.hpp"

namespace chebknot {

/// Continued-fraction entries a_1..a_n, each +1 or -1.
struct FractionWord {
    std::vector<std::int8_t> entries;

    std::size_t size() const { return entries.size(); }

    FractionWord negated() const {
        FractionWord out;
        out.entries.resize(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) out.entries[i] = static_cast<std::int8_t>(-entries[i]);
        return out;
    }

    friend bool operator==(const FractionWord& a, const FractionWord& b) { return a.entries == b.entries; }
    friend bool operator!=(const FractionWord& a, const FractionWord& b) { return !(a == b); }
};

/// [a_1,...,a_n] = alpha/beta, normalized so alpha >= 0 and gcd = 1.
/// (1, 0) is the unknot marker (empty continued fraction).
struct Fraction {
    BigInt alpha;
    BigInt beta;

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
};

/// Crossing signs to continued-fraction entries: a_i = w_i for odd i,
/// a_i = -w_i for even i. The opposite global choice gives the mirror
/// image, which the knot class quotients away.
inline FractionWord fraction_word(const SignWord& w) {
    FractionWord fw;
    fw.entries.resize(w.size());
    const auto& v = w.letters();
    for (std::size_t i = 0; i < v.size(); ++i) {
        fw.entries[i] = (i % 2 == 0) ? v[i] : static_cast<std::int8_t>(-v[i]);
    }
    return fw;
}

/// Inverse of fraction_word (the alternating flip is an involution).
inline SignWord sign_word(const FractionWord& fw) {
    std::vector<std::int8_t> letters(fw.entries.size());
    for (std::size_t i = 0; i < fw.entries.size(); ++i) {
        letters[i] = (i % 2 == 0) ? fw.entries[i] : static_cast<std::int8_t>(-fw.entries[i]);
    }
    return SignWord(std::move(letters));
}

namespace detail {

// Continuant entries are bounded by Fibonacci numbers, |p_k| <= F(k+1),
// so words up to this length evaluate safely in int64.
inline constexpr std::size_t kInt64EvalLimit = 90;

inline Fraction normalize_projective(BigInt p, BigInt q) {
    if (sgn(p) < 0) {
        p = -p;
        q = -q;
    } else if (sgn(p) == 0) {
        q = abs(q);
    }
    return Fraction{std::move(p), std::move(q)};
}

} // namespace detail

/// Evaluates [a_1,...,a_n] as the 2x2 matrix product of [[a_i,1],[1,0]],
/// which never divides by zero on unreduced words. The empty word gives
/// the identity, i.e. the unknot marker 1/0. Successive matrices have
/// determinant -1, so the result is always in lowest terms.
inline Fraction evaluate(const FractionWord& fw) {
    const auto& a = fw.entries;
    if (a.size() <= detail::kInt64EvalLimit) {
        std::int64_t p = 1, pp = 0, q = 0, qq = 1;
        for (std::int64_t ai : a) {
            std::int64_t np = ai * p + pp;
            std::int64_t nq = ai * q + qq;
            pp = p;
            qq = q;
            p = np;
            q = nq;
        }
        return detail::normalize_projective(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q)));
    }
    BigInt p = 1, pp = 0, q = 0, qq = 1;
    for (std::int64_t ai : a) {
        BigInt np = ai * p + pp;
        BigInt nq = ai * q + qq;
        pp = p;
        qq = q;
        p = np;
        q = nq;
    }
    return detail::normalize_projective(std::move(p), std::move(q));
}

/// Conditions (ii) and (iii) on a +/-1 entry sequence: the last two entries
/// agree in sign and no two consecutive sign alternations occur. Equivalent
/// to the corresponding sign word admitting no internal move and no
/// external move on the right.
inline bool is_1regular(const FractionWord& fw) {
    const auto& a = fw.entries;
    std::size_t n = a.size();
    if (n >= 2 && a[n - 2] != a[n - 1]) return false;
    for (std::size_t i = 0; i + 2 < n; ++i) {
        if (a[i] != a[i + 1] && a[i + 1] != a[i + 2]) return false;
    }
    return true;
}

/// The unique +/-1 continued fraction for alpha/beta > 1 that is 1-regular
/// and starts (+1, +1). Greedy construction: with t the remaining value,
/// emit e = sign(t), stop when t = e, else recurse on 1/(t - e). After any
/// sign alternation |t| > 1, so a second alternation cannot follow and the
/// result is 1-regular by construction; the postcondition check below makes
/// the routine self-certifying against Koseleff-Pecker uniqueness.
inline FractionWord expand_1regular(const BigInt& alpha, const BigInt& beta) {
    if (!(alpha > beta && beta > 0)) {
        throw InvalidInputError("expand_1regular requires alpha > beta > 0");
    }
    if (gcd(alpha, beta) != 1) {
        throw InvalidInputError("expand_1regular requires gcd(alpha, beta) = 1");
    }

    constexpr std::size_t kHardCap = 50'000'000; // entries; expansions grow ~3*alpha/2
    BigInt step_cap = 3 * alpha;

    FractionWord fw;
    BigInt num = alpha, den = beta; // t = num/den, den > 0 maintained
    BigInt steps = 0;
    for (;;) {
        if (fw.entries.size() >= kHardCap) {
            throw ResourceLimitError("1-regular expansion exceeds " + std::to_string(kHardCap) +
                                     " entries; the fraction is too large to expand");
        }
        if (++steps > step_cap) {
            throw InternalError("expand_1regular exceeded 3*alpha iterations");
        }
        int e = sgn(num) > 0 ? 1 : -1;
        fw.entries.push_back(static_cast<std::int8_t>(e));
        if (num == e * den) break; // t == e
        BigInt next_den = num - e * den;
        num = den;
        den = std::move(next_den);
        if (sgn(den) < 0) {
            den = -den;
            num = -num;
        }
    }

    if (fw.entries.size() < 2 || fw.entries[0] != 1 || fw.entries[1] != 1 || !is_1regular(fw) ||
        !(evaluate(fw) == Fraction{alpha, beta})) {
        throw InternalError("expand_1regular postcondition failed for " + alpha.get_str() + "/" + beta.get_str());
    }
    return fw;
}

} // namespace chebknot
