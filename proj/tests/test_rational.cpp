#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <random>

#include "chebknot/continued_fraction.hpp"
#include "chebknot/knot_class.hpp"
#include "chebknot/oracle.hpp"

using namespace chebknot;

TEST_CASE("fraction_word flips every second sign") {
    CHECK(fraction_word(parse_word("+-+")).entries == std::vector<std::int8_t>{1, 1, 1});
    CHECK(fraction_word(parse_word("++")).entries == std::vector<std::int8_t>{1, -1});
    CHECK(fraction_word(parse_word("+-+-")).entries == std::vector<std::int8_t>{1, 1, 1, 1});
    // involution
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
        SignWord w = word_from_mask(mask, 6);
        CHECK(sign_word(fraction_word(w)) == w);
    }
}

namespace {

FractionWord fw_of(std::initializer_list<int> entries) {
    FractionWord fw;
    for (int e : entries) fw.entries.push_back(static_cast<std::int8_t>(e));
    return fw;
}

} // namespace

TEST_CASE("evaluate computes the continued fraction projectively") {
    CHECK(evaluate(fw_of({1, 1, 1})) == Fraction{3, 2});
    CHECK(evaluate(fw_of({1, 1, -1, -1})) == Fraction{3, 1});
    CHECK(evaluate(FractionWord{}) == Fraction{1, 0});
    CHECK(evaluate(fw_of({1})) == Fraction{1, 1});
    CHECK(evaluate(fw_of({-1})) == Fraction{1, -1});
    CHECK(evaluate(fw_of({1, -1})) == Fraction{0, 1}); // link marker, no division by zero
}

TEST_CASE("evaluate of the negated word mirrors the fraction") {
    std::mt19937 rng(7);
    for (int len = 0; len <= 14; ++len) {
        for (int rep = 0; rep < 20; ++rep) {
            FractionWord fw;
            for (int i = 0; i < len; ++i) fw.entries.push_back(rng() & 1 ? 1 : -1);
            Fraction f = evaluate(fw);
            Fraction g = evaluate(fw.negated());
            CHECK(g.alpha == f.alpha);
            CHECK(g.beta == -f.beta);
            if (mpz_odd_p(f.alpha.get_mpz_t())) {
                CHECK(canonicalize(f) == canonicalize(g));
            }
        }
    }
}

TEST_CASE("evaluate agrees across the int64 and bigint paths") {
    // straddle the fast-path limit with the all-ones word (largest continuants)
    for (std::size_t len : {85, 90, 91, 96, 120}) {
        FractionWord fw;
        for (std::size_t i = 0; i < len; ++i) fw.entries.push_back(1);
        Fraction f = evaluate(fw);
        // continuants of [1,1,...,1] are consecutive Fibonacci numbers
        BigInt a = 1, b = 1;
        for (std::size_t i = 1; i < len; ++i) {
            BigInt next = a + b;
            b = a;
            a = next;
        }
        CHECK(f.alpha == a);
        CHECK(f.beta == b);
    }
}

TEST_CASE("canonicalize folds the Schubert orbit and mirrors") {
    CHECK(canonicalize(Fraction{5, 3}) == KnotClass{5, 2});
    CHECK(canonicalize(Fraction{3, 2}) == KnotClass{3, 1});
    CHECK(canonicalize(Fraction{1, 0}) == KnotClass::unknot());
    CHECK(canonicalize(Fraction{3, -2}) == KnotClass{3, 1});  // mirror
    CHECK(canonicalize(Fraction{3, 5}) == KnotClass{3, 1});   // beta reduced mod alpha
    CHECK(canonicalize(Fraction{1, 7}) == KnotClass::unknot());
    CHECK_THROWS_AS(canonicalize(Fraction{4, 2}), InvalidInputError);
    CHECK_THROWS_AS(canonicalize(Fraction{4, 1}), LinkNotKnotError);
    CHECK_THROWS_AS(canonicalize(Fraction{0, 1}), LinkNotKnotError);
    CHECK_THROWS_AS(canonicalize(Fraction{9, 3}), InvalidInputError);
}

TEST_CASE("classify matches the worked examples") {
    CHECK(classify(parse_word("+-+")) == KnotClass{3, 1});
    CHECK(classify(parse_word("+++")) == KnotClass::unknot());
    CHECK(classify(parse_word("+-+-")) == KnotClass{5, 2});
    CHECK(classify(SignWord{}) == KnotClass::unknot());
    CHECK_THROWS_AS(classify(parse_word("++")), LinkNotKnotError);
    CHECK_THROWS_AS(classify(parse_word("+-+-+")), LinkNotKnotError);
}

TEST_CASE("expand_1regular reproduces the unique expansion") {
    CHECK(expand_1regular(2, 1) == fw_of({1, 1}));
    CHECK(expand_1regular(3, 1) == fw_of({1, 1, -1, -1}));
    CHECK(expand_1regular(5, 3) == fw_of({1, 1, 1, 1}));
    CHECK(expand_1regular(3, 2) == fw_of({1, 1, 1}));
    CHECK_THROWS_AS(expand_1regular(3, 3), InvalidInputError);
    CHECK_THROWS_AS(expand_1regular(2, 3), InvalidInputError);
    CHECK_THROWS_AS(expand_1regular(10, 4), InvalidInputError);
}

namespace {

// All 1-regular words with leading (+1,+1): compositions of len into runs
// of size >= 2 with alternating signs, first run positive.
void each_1regular(int len, const std::function<void(const FractionWord&)>& fn) {
    std::vector<int> runs;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            FractionWord fw;
            int sign = 1;
            for (int run : runs) {
                for (int i = 0; i < run; ++i) fw.entries.push_back(static_cast<std::int8_t>(sign));
                sign = -sign;
            }
            fn(fw);
            return;
        }
        for (int run = 2; run <= remaining; ++run) {
            if (remaining - run == 1) continue; // a trailing run of 1 is not allowed
            runs.push_back(run);
            rec(remaining - run);
            runs.pop_back();
        }
    };
    rec(len);
}

} // namespace

TEST_CASE("expand_1regular round-trips every short 1-regular word") {
    int checked = 0;
    for (int len = 2; len <= 12; ++len) {
        each_1regular(len, [&](const FractionWord& fw) {
            Fraction f = evaluate(fw);
            REQUIRE(f.alpha > f.beta);
            REQUIRE(f.beta > 0);
            CHECK(expand_1regular(f.alpha, f.beta) == fw);
            ++checked;
        });
    }
    CHECK(checked > 100);
}

TEST_CASE("profile computes the two reduced lengths") {
    auto u = profile(KnotClass::unknot());
    CHECK(u.ell0 == 0);
    CHECK(u.ell1 == 1);
    CHECK(u.r0 == 1);
    CHECK(u.r1 == 2);
    CHECK(u.crossing_number == 0);

    auto t = profile(KnotClass{3, 1});
    CHECK(t.ell0 == 3);
    CHECK(t.ell1 == 4);
    CHECK(t.r0 == 2);
    CHECK(t.r1 == 2);
    CHECK(t.crossing_number == 3);

    auto f8 = profile(KnotClass{5, 2});
    CHECK(f8.ell0 == 6);
    CHECK(f8.ell1 == 4);
    CHECK(f8.r0 == 2);
    CHECK(f8.crossing_number == 4);
}

TEST_CASE("profile invariants hold for every class seen at short lengths") {
    for (long long n : {6, 9, 12}) {
        for (const auto& [cls, stats] : enumerate_words(n).classes) {
            auto p = profile(cls);
            CHECK(p.ell0 % 3 == 0);
            CHECK(p.ell1 % 3 == 1);
            if (!cls.is_unknot()) {
                CHECK(p.ell0 + p.ell1 == 3 * p.crossing_number - 2);
                CHECK(p.r0 == p.r1);
                CHECK((p.r0 == 2 || p.r0 == 4));
                // Koseleff-Pecker: one representative is short
                CHECK(2 * std::min(p.ell0, p.ell1) < 3 * p.crossing_number - 2);
                // r = 2 exactly when the orbit collapses (beta^2 = +-1 mod alpha)
                BigInt sq = (cls.beta * cls.beta) % cls.alpha;
                bool collapses = sq == 1 || sq == cls.alpha - 1;
                CHECK((p.r0 == 2) == collapses);
            }
        }
    }
}

TEST_CASE("move_free_words lists both reduced lengths") {
    auto words = move_free_words(profile(KnotClass{3, 1}));
    REQUIRE(words.size() == 4);
    CHECK(words[0].str() == "+-+");
    CHECK(words[1].str() == "-+-");
    CHECK(words[2].str() == "+--+");
    CHECK(words[3].str() == "-++-");
    for (const auto& w : words) {
        CHECK_FALSE(has_any_move(w));
        CHECK(classify(w) == KnotClass{3, 1});
    }

    auto unknot_words = move_free_words(profile(KnotClass::unknot()));
    REQUIRE(unknot_words.size() == 3);
    CHECK(unknot_words[0].empty());
    CHECK(unknot_words[1].str() == "+");
    CHECK(unknot_words[2].str() == "-");
}
