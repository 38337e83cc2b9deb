#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chebknot/knot_class.hpp"
#include "chebknot/oracle.hpp"
#include "chebknot/sign_word.hpp"

using namespace chebknot;

TEST_CASE("parse_word transcribes signs") {
    CHECK(parse_word("+-+").letters() == std::vector<std::int8_t>{1, -1, 1});
    CHECK(parse_word("").empty());
    CHECK_THROWS_WITH(parse_word("+?+"), Catch::Matchers::ContainsSubstring("position 2"));
    CHECK_THROWS_AS(parse_word("+ +"), InvalidInputError);
}

TEST_CASE("find_internal_moves scans equal triples") {
    CHECK(find_internal_moves(parse_word("+++")) == std::vector<int>{1});
    CHECK(find_internal_moves(parse_word("+-+")).empty());
    CHECK(find_internal_moves(parse_word("-++++")) == std::vector<int>{2, 3});
    CHECK(find_internal_moves(parse_word("")).empty());
}

TEST_CASE("find_external_moves checks boundary pairs") {
    auto m = find_external_moves(parse_word("++-"));
    CHECK(m.left);
    CHECK_FALSE(m.right);
    m = find_external_moves(parse_word("+--"));
    CHECK_FALSE(m.left);
    CHECK(m.right);
    m = find_external_moves(parse_word("+-+"));
    CHECK_FALSE(m.left);
    CHECK_FALSE(m.right);
    // too short for any external move
    m = find_external_moves(parse_word("++"));
    CHECK_FALSE(m.left);
    CHECK_FALSE(m.right);
}

TEST_CASE("apply_move deletes the 3-letter block") {
    CHECK(apply_move(parse_word("-+++"), Move{MoveKind::Internal, 2}).str() == "-");
    CHECK(apply_move(parse_word("++-"), Move{MoveKind::ExternalLeft, 1}).str().empty());
    CHECK(apply_move(parse_word("+--"), Move{MoveKind::ExternalRight, 1}).str().empty());
    CHECK(apply_move(parse_word("+-++--"), Move{MoveKind::ExternalRight, 4}).str() == "+-+");
    CHECK_THROWS_AS(apply_move(parse_word("+-+"), Move{MoveKind::Internal, 1}), InvalidInputError);
    CHECK_THROWS_AS(apply_move(parse_word("+-+"), Move{MoveKind::ExternalLeft, 1}), InvalidInputError);
    CHECK_THROWS_AS(apply_move(parse_word("++"), Move{MoveKind::Internal, 1}), InvalidInputError);
}

TEST_CASE("reduce runs to a move-free word") {
    auto t = reduce(parse_word("+++"));
    CHECK(t.final.empty());
    CHECK(t.steps.size() == 1);
    CHECK(t.steps[0].move.kind == MoveKind::Internal);
    CHECK(t.steps[0].move.position == 1);

    t = reduce(parse_word("+-+"));
    CHECK(t.final.str() == "+-+");
    CHECK(t.steps.empty());

    t = reduce(parse_word("-+++"));
    CHECK(t.final.str() == "-");

    // internal move has priority over the available external-left move
    t = reduce(parse_word("++++"));
    CHECK(t.steps[0].move.kind == MoveKind::Internal);
    CHECK(t.final.str() == "+");
}

TEST_CASE("reduction preserves length mod 3 and shortens by 3 per step") {
    for (long long n : {0, 1, 3, 4, 6, 7, 9, 10}) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            SignWord w = word_from_mask(mask, n);
            auto t = reduce(w);
            std::size_t prev = w.size();
            for (const auto& step : t.steps) {
                CHECK(step.result.size() + 3 == prev);
                prev = step.result.size();
            }
            CHECK(t.final.size() % 3 == w.size() % 3);
            CHECK_FALSE(has_any_move(t.final));
        }
    }
}

TEST_CASE("reduce is idempotent and negation-equivariant") {
    for (long long n : {3, 6, 9}) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            SignWord w = word_from_mask(mask, n);
            SignWord f = reduce(w).final;
            CHECK(reduce(f).final == f);
            CHECK(reduce(w.negated()).final == f.negated());
        }
    }
}

namespace {

// Applies moves in a randomized order until none remain.
chebknot::SignWord reduce_random_order(chebknot::SignWord w, std::mt19937& rng) {
    for (;;) {
        std::vector<Move> moves;
        for (int j : find_internal_moves(w)) moves.push_back(Move{MoveKind::Internal, j});
        auto ext = find_external_moves(w);
        if (ext.left) moves.push_back(Move{MoveKind::ExternalLeft, 1});
        if (ext.right) moves.push_back(Move{MoveKind::ExternalRight, static_cast<int>(w.size()) - 2});
        if (moves.empty()) return w;
        w = apply_move(w, moves[rng() % moves.size()]);
    }
}

} // namespace

TEST_CASE("knot class does not depend on the move order") {
    std::mt19937 rng(20160607);
    // exhaustive over short words, sampled over longer ones
    for (long long n : {6, 9}) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            SignWord w = word_from_mask(mask, n);
            KnotClass expected = classify(w);
            for (int rep = 0; rep < 3; ++rep) {
                SignWord f = reduce_random_order(w, rng);
                CHECK(classify(f) == expected);
            }
        }
    }
    for (long long n : {12, 13, 15}) {
        for (int rep = 0; rep < 400; ++rep) {
            std::uint64_t mask = rng() & ((std::uint64_t(1) << n) - 1);
            SignWord w = word_from_mask(mask, n);
            KnotClass expected = classify(w);
            SignWord f = reduce_random_order(w, rng);
            CHECK(classify(f) == expected);
        }
    }
}

TEST_CASE("reduced words are 1-regular after polarity normalization") {
    for (long long n : {3, 6, 9, 12}) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            SignWord f = reduce(word_from_mask(mask, n)).final;
            if (f.size() < 2) continue;
            FractionWord fw = fraction_word(f);
            if (fw.entries[0] < 0) fw = fw.negated();
            CHECK(is_1regular(fw));
            CHECK(fw.entries[0] == 1);
            CHECK(fw.entries[1] == 1); // no external move on the left
        }
    }
}
