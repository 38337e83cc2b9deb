#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "chebknot/errors.hpp"

namespace chebknot {

using BigInt = mpz_class;

/// C(m, j) with the convention C(m, j) = 0 for j < 0 or j > m.
inline BigInt binomial(long long m, long long j) {
    if (j < 0 || j > m || m < 0) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(j));
    return r;
}

inline BigInt pow2(unsigned long n) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r;
}

/// num / 2^n as a double, good to ~1 ulp even when num has thousands of bits.
inline double scaled_to_double(const BigInt& num, long long n) {
    int sgn = mpz_sgn(num.get_mpz_t());
    if (sgn == 0) return 0.0;
    std::size_t bits = mpz_sizeinbase(num.get_mpz_t(), 2);
    if (bits <= 512) {
        return std::ldexp(mpz_get_d(num.get_mpz_t()), static_cast<int>(-n));
    }
    // Keep the top 64 bits and track the dropped exponent explicitly so the
    // intermediate double never overflows.
    BigInt top;
    long long shift = static_cast<long long>(bits) - 64;
    mpz_tdiv_q_2exp(top.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    return std::ldexp(mpz_get_d(top.get_mpz_t()), static_cast<int>(shift - n));
}

inline BigInt parse_bigint(const std::string& text) {
    BigInt r;
    if (text.empty() || mpz_set_str(r.get_mpz_t(), text.c_str(), 10) != 0) {
        throw InvalidInputError("not a base-10 integer: \"" + text + "\"");
    }
    return r;
}

/// Mathematical residue in [0, m), also for negative values.
inline long long mod_floor(long long value, long long m) {
    long long r = value % m;
    return r < 0 ? r + m : r;
}

} // namespace chebknot
