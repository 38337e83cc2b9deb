#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "chebknot/knot_names.hpp"

using namespace chebknot;

TEST_CASE("name_lookup on the derived anchors") {
    CHECK(name_lookup(KnotClass{3, 1}) == "3_1");
    CHECK(name_lookup(KnotClass{5, 2}) == "4_1");
    CHECK(name_lookup(KnotClass::unknot()) == "unknot");
    CHECK_FALSE(name_lookup(KnotClass{9901, 100}).has_value());
}

TEST_CASE("every table entry is canonical and its crossing number matches the name") {
    std::map<long long, int> per_n;
    for (const auto& [cls, name] : NameTable::builtin().entries()) {
        // the stored pair must already be the canonical representative
        CHECK(canonicalize(Fraction{cls.alpha, cls.beta}) == cls);
        auto p = profile(cls);
        if (name == "unknot") {
            CHECK(p.crossing_number == 0);
            continue;
        }
        auto underscore = name.find('_');
        REQUIRE(underscore != std::string::npos);
        CHECK(p.crossing_number == std::stoll(name.substr(0, underscore)));
        per_n[p.crossing_number] += 1;
    }
    // complete 2-bridge census through 8 crossings
    CHECK(per_n == std::map<long long, int>{{3, 1}, {4, 1}, {5, 2}, {6, 3}, {7, 7}, {8, 12}});
}

TEST_CASE("reduced lengths behind the coincidence classes") {
    auto prof = [](const char* name) {
        return profile(*NameTable::builtin().find_name(name));
    };
    CHECK(prof("3_1").ell1 == 4);
    CHECK(prof("4_1").ell1 == 4);
    CHECK(prof("4_1").ell0 == 6);
    CHECK(prof("5_1").ell0 == 6);
    CHECK(prof("6_3").ell0 == 6);
    CHECK(prof("5_2").ell1 == 7);
    CHECK(prof("6_1").ell1 == 7);
    CHECK(prof("6_2").ell1 == 7);
    CHECK(prof("6_1").ell0 == 9);
    CHECK(prof("6_2").ell0 == 9);
    CHECK(prof("6_1").r0 == prof("6_2").r0);
    CHECK(prof("5_2").r1 == prof("6_1").r1);
    CHECK(prof("4_1").r0 == prof("5_1").r0);
    CHECK(prof("4_1").r0 == prof("6_3").r0);
    CHECK(prof("3_1").r1 == prof("4_1").r1);
}

TEST_CASE("name table file format") {
    std::istringstream in("# comment\n3 1 3_1\n\n5 2 4_1 # inline comment\n");
    auto t = NameTable::parse(in);
    CHECK(t.find(KnotClass{3, 1}) == "3_1");
    CHECK(t.find_name("4_1") == KnotClass{5, 2});
    CHECK(t.entries().size() == 2);

    std::istringstream bad("3 1\n");
    CHECK_THROWS_AS(NameTable::parse(bad), InvalidInputError);
    CHECK_THROWS_AS(NameTable::load("/nonexistent/names.txt"), InvalidInputError);
}

TEST_CASE("bundled data file matches the builtin table") {
    auto t = NameTable::load(std::string(CHEBKNOT_SOURCE_DIR) + "/data/knot_names.txt");
    CHECK(t.entries() == NameTable::builtin().entries());
}
