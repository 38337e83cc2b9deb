#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "chebknot/bigint.hpp"
#include "chebknot/continued_fraction.hpp"
#include "chebknot/errors.hpp"
#include "chebknot/sign_word.hpp"

namespace chebknot {

/// A 2-bridge knot up to mirror image: odd alpha >= 1 together with the
/// smallest denominator in the Schubert orbit {b, b^-1, alpha-b, alpha-b^-1}
/// (mod alpha). The unknot is (1, 0).
struct KnotClass {
    BigInt alpha;
    BigInt beta;

    static KnotClass unknot() { return KnotClass{BigInt(1), BigInt(0)}; }
    bool is_unknot() const { return alpha == 1; }

    std::string str() const { return alpha.get_str() + "/" + beta.get_str(); }

    friend bool operator==(const KnotClass& a, const KnotClass& b) {
        return a.alpha == b.alpha && a.beta == b.beta;
    }
    friend bool operator!=(const KnotClass& a, const KnotClass& b) { return !(a == b); }
    friend bool operator<(const KnotClass& a, const KnotClass& b) {
        int c = cmp(a.alpha, b.alpha);
        if (c != 0) return c < 0;
        return cmp(a.beta, b.beta) < 0;
    }
};

namespace detail {

inline BigInt mod_inverse(const BigInt& value, const BigInt& modulus) {
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        throw InternalError("no inverse of " + value.get_str() + " mod " + modulus.get_str());
    }
    return inv;
}

} // namespace detail

/// Schubert + palindrome + mirror equivalence: beta may be replaced by
/// beta^{+-1} mod alpha and negated, so the class keeps the orbit minimum.
/// Even alpha is a two-component link and rejected.
inline KnotClass canonicalize(const Fraction& f) {
    if (sgn(f.alpha) < 0) throw InvalidInputError("fraction numerator must be nonnegative");
    if (mpz_even_p(f.alpha.get_mpz_t())) {
        throw LinkNotKnotError("fraction " + f.alpha.get_str() + "/" + f.beta.get_str() +
                               " has even numerator: a two-component link, not a knot");
    }
    if (gcd(f.alpha, f.beta) != 1) {
        throw InvalidInputError("fraction " + f.alpha.get_str() + "/" + f.beta.get_str() +
                                " is not in lowest terms");
    }
    if (f.alpha == 1) return KnotClass::unknot();

    BigInt b;
    mpz_mod(b.get_mpz_t(), f.beta.get_mpz_t(), f.alpha.get_mpz_t()); // b in [0, alpha)
    BigInt binv = detail::mod_inverse(b, f.alpha);
    BigInt best = b;
    for (const BigInt& cand : {binv, BigInt(f.alpha - b), BigInt(f.alpha - binv)}) {
        if (cand < best) best = cand;
    }
    return KnotClass{f.alpha, best};
}

/// Deduplicated ascending orbit {b, b^-1, alpha-b, alpha-b^-1} mod alpha.
/// Size 2 when beta^2 = +-1 mod alpha (the palindrome coincidence), else 4.
inline std::vector<BigInt> denominator_orbit(const KnotClass& k) {
    if (k.is_unknot()) return {};
    BigInt binv = detail::mod_inverse(k.beta, k.alpha);
    std::vector<BigInt> orbit{k.beta, binv, k.alpha - k.beta, k.alpha - binv};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

/// Reduce, read off the continued fraction, evaluate, canonicalize. Also
/// evaluates the unreduced word directly; the two routes must give the same
/// class (the reduction moves preserve knot type), which cross-checks the
/// rewriting system on every call.
inline KnotClass classify(const SignWord& w) {
    if (w.size() % 3 == 2) {
        throw LinkNotKnotError("word length " + std::to_string(w.size()) +
                               " = 2 mod 3 gives a two-component link, not a knot");
    }
    ReductionTrace trace = reduce(w);
    KnotClass reduced_class = canonicalize(evaluate(fraction_word(trace.final)));
    KnotClass direct_class = canonicalize(evaluate(fraction_word(w)));
    if (reduced_class != direct_class) {
        throw InternalError("reduction changed the knot class of \"" + w.str() + "\": " +
                            reduced_class.str() + " vs " + direct_class.str());
    }
    return reduced_class;
}

/// Per-knot reduction invariants: the two reduced lengths ell0 = 0 and
/// ell1 = 1 (mod 3), the move-free word counts r at each length, and the
/// crossing number N = (ell0 + ell1 + 2)/3.
struct ReducedProfile {
    KnotClass knot;
    long long ell0 = 0;
    long long ell1 = 0;
    int r0 = 0;
    int r1 = 0;
    long long crossing_number = 0;
};

/// Expands alpha/d for every orbit denominator d. Each length-l expansion
/// and its negation is a distinct move-free word, so r(l) is twice the
/// number of denominators of that length. The unknot is special: the empty
/// word (r = 1) at length 0 and the words + and - at length 1.
inline ReducedProfile profile(const KnotClass& k) {
    if (k.is_unknot()) return ReducedProfile{k, 0, 1, 1, 2, 0};

    std::map<long long, int> length_counts;
    for (const BigInt& d : denominator_orbit(k)) {
        FractionWord fw = expand_1regular(k.alpha, d);
        length_counts[static_cast<long long>(fw.size())] += 1;
    }
    if (length_counts.size() != 2) {
        throw InternalError("knot " + k.str() + " has " + std::to_string(length_counts.size()) +
                            " reduced lengths, expected 2");
    }
    ReducedProfile p;
    p.knot = k;
    for (const auto& [len, mult] : length_counts) {
        if (len % 3 == 0) {
            p.ell0 = len;
            p.r0 = 2 * mult;
        } else if (len % 3 == 1) {
            p.ell1 = len;
            p.r1 = 2 * mult;
        } else {
            throw InternalError("knot " + k.str() + " has reduced length " + std::to_string(len) +
                                " = 2 mod 3");
        }
    }
    if (p.ell0 == 0 || p.ell1 == 0 || p.r0 != p.r1) {
        throw InternalError("knot " + k.str() + " has inconsistent reduced lengths/multiplicities");
    }
    p.crossing_number = (p.ell0 + p.ell1 + 2) / 3;
    return p;
}

/// All move-free sign words representing the knot, shorter length first;
/// per denominator the expansion word then its negation.
inline std::vector<SignWord> move_free_words(const ReducedProfile& p) {
    if (p.knot.is_unknot()) {
        return {SignWord{}, parse_word("+"), parse_word("-")};
    }
    std::vector<std::pair<long long, SignWord>> tagged;
    for (const BigInt& d : denominator_orbit(p.knot)) {
        SignWord w = sign_word(expand_1regular(p.knot.alpha, d));
        tagged.emplace_back(static_cast<long long>(w.size()), w);
    }
    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SignWord> out;
    for (auto& [len, w] : tagged) {
        out.push_back(w);
        out.push_back(w.negated());
    }
    return out;
}

} // namespace chebknot
