#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qlsm/errors.hpp"
#include "qlsm/sat.hpp"
#include "support/test_helpers.hpp"

using namespace qlsm;

TEST_CASE("DIMACS parsing") {
    SUBCASE("comments, header, multi-line clauses") {
        std::istringstream in(
            "c example instance\n"
            "p cnf 4 3\n"
            "1 2 0\n"
            "3 0\n"
            "-2 -3\n"
            "4 0\n");
        const SatInstance inst = parse_dimacs(in);
        CHECK(inst.num_vars == 4);
        REQUIRE(inst.clauses.size() == 3);
        CHECK(inst.clauses[0].size() == 2);
        CHECK(inst.clauses[1].size() == 1);
        CHECK(inst.clauses[2].size() == 3);
        CHECK(inst.clauses[2][0].var == 1);
        CHECK(inst.clauses[2][0].negated);
        CHECK(inst.clauses[2][2].var == 3);
        CHECK_FALSE(inst.clauses[2][2].negated);
    }
    SUBCASE("missing header") {
        std::istringstream in("1 2 0\n");
        CHECK_THROWS_AS(parse_dimacs(in), IngestError);
    }
    SUBCASE("clause count mismatch") {
        std::istringstream in("p cnf 2 2\n1 0\n");
        CHECK_THROWS_AS(parse_dimacs(in), IngestError);
    }
    SUBCASE("literal exceeds variable count") {
        std::istringstream in("p cnf 2 1\n3 0\n");
        CHECK_THROWS_AS(parse_dimacs(in), IngestError);
    }
    SUBCASE("empty clause rejected") {
        std::istringstream in("p cnf 2 1\n0\n");
        CHECK_THROWS_AS(parse_dimacs(in), IngestError);
    }
    SUBCASE("unterminated clause rejected") {
        std::istringstream in("p cnf 2 1\n1 2\n");
        CHECK_THROWS_AS(parse_dimacs(in), IngestError);
    }
    SUBCASE("junk token rejected") {
        std::istringstream in("p cnf 2 1\n1 x 0\n");
        CHECK_THROWS_AS(parse_dimacs(in), IngestError);
    }
}

TEST_CASE("clause evaluation agrees with direct enumeration") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const SatInstance inst = testsup::random_cnf(4, 6, 3, rng);
        for (std::uint64_t x = 0; x < 16; ++x) {
            CHECK(inst.violated_count(x) == testsup::violations_by_enumeration(inst, x));
            CHECK(inst.satisfied(x) == (testsup::violations_by_enumeration(inst, x) == 0));
        }
    }
}

TEST_CASE("truth table parsing") {
    SUBCASE("accepts a power-of-two table") {
        std::istringstream in("0\n1\n1\n0\n");
        const std::vector<bool> t = parse_truth_table(in);
        REQUIRE(t.size() == 4);
        CHECK_FALSE(t[0]);
        CHECK(t[1]);
    }
    SUBCASE("rejects wrong line count") {
        std::istringstream in("0\n1\n1\n");
        CHECK_THROWS_AS(parse_truth_table(in), IngestError);
    }
    SUBCASE("rejects junk values") {
        std::istringstream in("0\n2\n");
        CHECK_THROWS_AS(parse_truth_table(in), IngestError);
    }
}
