#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "chebknot/bigint.hpp"
#include "chebknot/errors.hpp"
#include "chebknot/exact_engine.hpp"
#include "chebknot/knot_class.hpp"
#include "chebknot/parallel.hpp"
#include "chebknot/sign_word.hpp"

namespace chebknot {

inline constexpr long long kEnumerationCap = 24;
inline constexpr long long kBruteTableCap = 18;

/// Exact class counts over all 2^n words of length n.
struct Distribution {
    long long n = 0;
    std::map<KnotClass, BigInt> counts;
    BigInt total;
};

/// Raw per-class tallies from one pass over the word space. The histogram
/// indexes words by the position of their first internal move (Def 4.1's
/// filtration data); `no_move` additionally excludes external moves.
struct ClassStats {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> first_int_hist; // [j] for 1 <= j <= n-2; [0] unused
    std::uint64_t no_internal = 0;
    std::uint64_t no_move = 0;
};

struct Enumeration {
    long long n = 0;
    std::map<KnotClass, ClassStats> classes;
};

inline SignWord word_from_mask(std::uint64_t mask, long long n) {
    std::vector<std::int8_t> letters(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        letters[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? 1 : -1;
    }
    return SignWord(std::move(letters));
}

/// Classifies every word in {+,-}^n. Deliberately naive — one classify()
/// call per word — so it stays an independent check of the engine.
inline Enumeration enumerate_words(long long n) {
    if (n < 0) throw InvalidInputError("word length must be nonnegative");
    if (n % 3 == 2) {
        throw LinkNotKnotError("word length " + std::to_string(n) +
                               " = 2 mod 3 gives two-component links, not knots");
    }
    if (n > kEnumerationCap) {
        throw ResourceLimitError("enumeration capped at n = " + std::to_string(kEnumerationCap) +
                                 " (2^" + std::to_string(n) + " words); use the sampler instead");
    }

    std::uint64_t total = std::uint64_t(1) << n;
    unsigned workers = worker_count();
    std::vector<std::map<KnotClass, ClassStats>> partial(std::max(1u, workers));

    parallel_chunks(0, total, [&](unsigned worker, std::uint64_t lo, std::uint64_t hi) {
        auto& local = partial[worker];
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            SignWord w = word_from_mask(mask, n);
            KnotClass cls = classify(w);
            auto& stats = local[cls];
            if (stats.first_int_hist.empty()) {
                stats.first_int_hist.assign(static_cast<std::size_t>(n) + 1, 0);
            }
            stats.count += 1;
            int j = first_internal_move(w);
            if (j == 0) {
                stats.no_internal += 1;
                auto ext = find_external_moves(w);
                if (!ext.left && !ext.right) stats.no_move += 1;
            } else {
                stats.first_int_hist[static_cast<std::size_t>(j)] += 1;
            }
        }
    });

    Enumeration out;
    out.n = n;
    for (auto& local : partial) {
        for (auto& [cls, stats] : local) {
            auto& agg = out.classes[cls];
            if (agg.first_int_hist.empty()) {
                agg.first_int_hist.assign(static_cast<std::size_t>(n) + 1, 0);
            }
            agg.count += stats.count;
            agg.no_internal += stats.no_internal;
            agg.no_move += stats.no_move;
            for (std::size_t j = 0; j < stats.first_int_hist.size(); ++j) {
                agg.first_int_hist[j] += stats.first_int_hist[j];
            }
        }
    }
    return out;
}

inline Distribution to_distribution(const Enumeration& e) {
    Distribution d;
    d.n = e.n;
    d.total = pow2(static_cast<unsigned long>(e.n));
    for (const auto& [cls, stats] : e.classes) {
        d.counts[cls] = BigInt(static_cast<unsigned long>(stats.count));
    }
    return d;
}

inline Distribution enumerate_distribution(long long n) { return to_distribution(enumerate_words(n)); }

/// Filtration cardinalities of Def 4.1 computed by brute force:
///   S_1 = S + S (doubled), S_2 = S_3 = S,
///   S_i = {class words with no internal move at positions j < i-2}, i <= n+1,
///   x_i = |S_i| - |S_{i+1}|,  y_i = x_i - x_{i+1}.
/// Accessors are 1-based like the notation.
struct BruteXTable {
    long long n = 0;
    KnotClass knot;
    std::vector<long long> x;       // x_1..x_n
    std::vector<long long> y;       // y_1..y_{n-1}
    std::vector<long long> s_sizes; // |S_1|..|S_{n+1}|

    long long s(long long i) const { return s_sizes.at(static_cast<std::size_t>(i - 1)); }
    long long xv(long long i) const { return x.at(static_cast<std::size_t>(i - 1)); }
    long long yv(long long i) const { return y.at(static_cast<std::size_t>(i - 1)); }
};

inline BruteXTable brute_x_table(const Enumeration& e, const KnotClass& cls) {
    long long n = e.n;
    ClassStats stats;
    if (auto it = e.classes.find(cls); it != e.classes.end()) stats = it->second;
    if (stats.first_int_hist.empty()) {
        stats.first_int_hist.assign(static_cast<std::size_t>(n) + 1, 0);
    }

    BruteXTable t;
    t.n = n;
    t.knot = cls;
    t.s_sizes.resize(static_cast<std::size_t>(n) + 1);
    auto count = static_cast<long long>(stats.count);
    for (long long i = 1; i <= n + 1; ++i) {
        long long size;
        if (i == 1) {
            size = 2 * count;
        } else if (i <= 3) {
            size = count;
        } else {
            // words whose first internal move is >= i-2, or absent
            size = count;
            for (long long j = 1; j < i - 2; ++j) {
                size -= static_cast<long long>(stats.first_int_hist[static_cast<std::size_t>(j)]);
            }
        }
        t.s_sizes[static_cast<std::size_t>(i - 1)] = size;
    }
    t.x.resize(static_cast<std::size_t>(n > 0 ? n : 0));
    for (long long i = 1; i <= n; ++i) {
        t.x[static_cast<std::size_t>(i - 1)] = t.s(i) - t.s(i + 1);
    }
    t.y.resize(static_cast<std::size_t>(n > 1 ? n - 1 : 0));
    for (long long i = 1; i <= n - 1; ++i) {
        t.y[static_cast<std::size_t>(i - 1)] = t.xv(i) - t.xv(i + 1);
    }
    return t;
}

inline BruteXTable brute_x_table(const KnotClass& cls, long long n) {
    if (n < 1 || n > kBruteTableCap) {
        throw InvalidInputError("brute x-table supports 1 <= n <= " + std::to_string(kBruteTableCap));
    }
    return brute_x_table(enumerate_words(n), cls);
}

struct VerifyReport {
    std::vector<std::string> lines;
    bool pass = true;

    std::string text() const {
        std::string out;
        for (const auto& l : lines) {
            out += l;
            out += '\n';
        }
        out += pass ? "PASS\n" : "FAIL\n";
        return out;
    }
};

namespace detail {

struct CheckContext {
    VerifyReport& report;
    bool ok = true;

    void mismatch(const std::string& what) {
        ok = false;
        report.pass = false;
        report.lines.push_back("MISMATCH " + what);
    }
};

} // namespace detail

/// Sweeps every valid n <= n_max and cross-checks the enumeration against
/// the exact engine: per-class counts vs the main formula, the brute
/// filtration tables vs the binomial expansion and the x/y identities, and
/// move-free counts vs r(ell). An all-ok report ends in PASS.
inline VerifyReport verify_engine(long long n_max) {
    VerifyReport report;
    std::map<KnotClass, ReducedProfile> profiles;
    auto profile_of = [&](const KnotClass& cls) -> const ReducedProfile& {
        auto it = profiles.find(cls);
        if (it == profiles.end()) it = profiles.emplace(cls, profile(cls)).first;
        return it->second;
    };

    std::map<long long, Enumeration> history;
    for (long long n = 0; n <= n_max; ++n) {
        if (n % 3 == 2) continue;
        Enumeration en = enumerate_words(n);

        detail::CheckContext dist{report};
        detail::CheckContext xids{report};
        detail::CheckContext nomove{report};

        BigInt sum = 0;
        for (const auto& [cls, stats] : en.classes) sum += static_cast<unsigned long>(stats.count);
        if (sum != pow2(static_cast<unsigned long>(n))) {
            dist.mismatch("n=" + std::to_string(n) + " kind=conservation total=" + sum.get_str());
        }

        for (const auto& [cls, stats] : en.classes) {
            const ReducedProfile& prof = profile_of(cls);
            std::string tag = "n=" + std::to_string(n) + " class=" + cls.str();

            if (n >= 6) {
                ExactProbability p = probability(prof, n);
                if (p.numerator != static_cast<unsigned long>(stats.count)) {
                    dist.mismatch(tag + " kind=dist engine=" + p.numerator.get_str() +
                                  " oracle=" + std::to_string(stats.count));
                }
            }

            long long expected_no_move = no_move_count(prof, n);
            if (static_cast<long long>(stats.no_move) != expected_no_move) {
                nomove.mismatch(tag + " kind=nomove expected=" + std::to_string(expected_no_move) +
                                " actual=" + std::to_string(stats.no_move));
            }

            BruteXTable bt = brute_x_table(en, cls);
            // Property (X1)-(X4), (Y1)-(Y4) on the brute values.
            if (n >= 1 && bt.xv(1) != static_cast<long long>(stats.count)) xids.mismatch(tag + " kind=X1");
            if (n >= 2 && bt.xv(2) != 0) xids.mismatch(tag + " kind=X2");
            if (n >= 4 && bt.xv(3) != 2 * bt.xv(4)) xids.mismatch(tag + " kind=X3");
            if (n >= 5 && bt.xv(4) != bt.xv(5)) xids.mismatch(tag + " kind=X4");
            if (n >= 2 && bt.yv(1) != static_cast<long long>(stats.count)) xids.mismatch(tag + " kind=Y1");
            if (n >= 4 && bt.yv(2) != -2 * bt.xv(4)) xids.mismatch(tag + " kind=Y2");
            if (n >= 4 && bt.yv(3) != bt.xv(4)) xids.mismatch(tag + " kind=Y3");
            if (n >= 5 && bt.yv(4) != 0) xids.mismatch(tag + " kind=Y4");

            XTable xt(prof, residue_of(n));
            // (Sn): the no-internal-move count equals the engine diagonal.
            if (n >= 1 && xt.at(n + 3) != static_cast<long>(bt.s(n + 1))) {
                xids.mismatch(tag + " kind=Sn brute=" + std::to_string(bt.s(n + 1)) +
                              " engine=" + xt.at(n + 3).get_str());
            }
            // Binomial expansion of x_i^{(n)} over engine diagonals.
            for (long long i = 1; i <= n; ++i) {
                if (binom_x(i, n, xt) != static_cast<long>(bt.xv(i))) {
                    xids.mismatch(tag + " kind=binom i=" + std::to_string(i));
                }
            }
            // x_i = x_n + sum_{j>=i} y_j, internal to one table.
            for (long long i = 1; i <= n; ++i) {
                long long acc = bt.xv(n);
                for (long long j = i; j <= n - 1; ++j) acc += bt.yv(j);
                if (acc != bt.xv(i)) xids.mismatch(tag + " kind=fact i=" + std::to_string(i));
            }
            // Downward identities against the n-3 enumeration.
            if (n >= 4) {
                auto prev = history.find(n - 3);
                if (prev != history.end()) {
                    BruteXTable pbt = brute_x_table(prev->second, cls);
                    for (long long i = 3; i <= n; ++i) {
                        if (bt.xv(i) != pbt.s(i - 2)) {
                            xids.mismatch(tag + " kind=lem:xs i=" + std::to_string(i));
                        }
                    }
                    for (long long i = 3; i <= n - 1; ++i) {
                        if (i - 2 <= n - 3 && bt.yv(i) != pbt.xv(i - 2)) {
                            xids.mismatch(tag + " kind=lem:XY i=" + std::to_string(i));
                        }
                    }
                }
            }
        }
        // Every class seen at n-3 must reappear at n (append an internal move).
        if (auto prev = history.find(n - 3); prev != history.end()) {
            for (const auto& [cls, stats] : prev->second.classes) {
                if (!en.classes.count(cls)) {
                    xids.mismatch("n=" + std::to_string(n) + " class=" + cls.str() + " kind=lem:xs missing-class");
                }
            }
        }

        std::ostringstream line;
        line << "check n=" << n << " words=" << (std::uint64_t(1) << n) << " classes=" << en.classes.size()
             << " dist=" << (dist.ok ? "ok" : "FAIL") << " xids=" << (xids.ok ? "ok" : "FAIL")
             << " nomove=" << (nomove.ok ? "ok" : "FAIL");
        report.lines.push_back(line.str());

        history.emplace(n, std::move(en));
        history.erase(n - 6); // only the n-3 lookback is needed
    }
    return report;
}

} // namespace chebknot
