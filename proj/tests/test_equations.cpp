#include "doctest.h"

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ccd/equations.hpp"
#include "test_util.hpp"

using namespace ccd;

namespace {

bool admitted(const RootCountReport& rep, uint64_t count) {
    for (uint64_t a : rep.admissible)
        if (a == count) return true;
    return false;
}

FieldElem elem_of_witness_log(const FieldTower& tw, int64_t lg) {
    return lg < 0 ? tw.zero() : tw.from_log(static_cast<uint64_t>(lg));
}

// Re-derives the root count of x^(p^k+1) + a x + b over the base level with
// plain element arithmetic; the scanner works in log space throughout.
uint64_t brute_base_roots(const FieldTower& tw, uint64_t k, FieldElem a, FieldElem b) {
    int64_t e = 1;
    for (uint64_t i = 0; i < k; ++i) e *= tw.p();
    ++e;
    std::vector<FieldElem> xs{tw.zero()};
    for (uint64_t j = 0; j + 1 < tw.q(); ++j)
        xs.push_back(tw.from_log(j * tw.level_stride(Level::fq)));
    uint64_t roots = 0;
    for (FieldElem x : xs)
        if ((x.pow(e) + a * x + b).is_zero()) ++roots;
    return roots;
}

// Same for b x^(p^k+1) + a x^(p^k) + a^q x + b^q over the unit circle U_{q+1}.
uint64_t brute_circle_roots(const FieldTower& tw, uint64_t k, FieldElem a, FieldElem b) {
    int64_t pk = 1;
    for (uint64_t i = 0; i < k; ++i) pk *= tw.p();
    int64_t qe = static_cast<int64_t>(tw.q());
    uint64_t roots = 0;
    for (FieldElem x : tw.unit_circle(tw.q() + 1)) {
        FieldElem v = b * x.pow(pk + 1) + a * x.pow(pk) + a.pow(qe) * x + b.pow(qe);
        if (v.is_zero()) ++roots;
    }
    return roots;
}

}  // namespace

TEST_CASE("base-field root histogram satisfies the two counting identities") {
    for (uint64_t q : {8, 9}) {
        const FieldTower& tw = tower_q(q);
        RootCountReport rep = bluher_root_histogram(tw, 1);
        CHECK(rep.all_admissible);
        CHECK(rep.pairs == (q - 1) * (q - 1));

        uint64_t total = 0, weighted = 0;
        for (auto [count, pairs] : rep.histogram) {
            CHECK(admitted(rep, count));
            total += pairs;
            weighted += count * pairs;
        }
        CHECK(total == (q - 1) * (q - 1));
        // Each x in F_q^* solves the equation for exactly q-2 pairs (a, b):
        // a free off one forbidden value, b determined.
        CHECK(weighted == (q - 1) * (q - 2));

        for (auto [count, w] : rep.witnesses) {
            FieldElem a = elem_of_witness_log(tw, w.first);
            FieldElem b = elem_of_witness_log(tw, w.second);
            CHECK(brute_base_roots(tw, 1, a, b) == count);
        }
    }

    // Doubling the Frobenius exponent at q = 9 raises the admissible cap to
    // p^2 + 1 = 10, which no pair can attain in a 9-element field; the
    // observed histogram is frozen from an independent run.
    const FieldTower& t9 = tower_q(9);
    RootCountReport rep2 = bluher_root_histogram(t9, 2);
    CHECK(rep2.all_admissible);
    std::map<uint64_t, uint64_t> frozen{{0, 32}, {1, 8}, {2, 24}};
    CHECK(rep2.histogram == frozen);

    CHECK_THROWS_WITH_AS(bluher_root_histogram(t9, 1, 10),
                         doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("unit-circle root histogram and its witnesses") {
    for (uint64_t q : {3, 4}) {
        const FieldTower& tw = tower_q(q);
        RootCountReport rep = unit_circle_root_histogram(tw, 1);
        CHECK(rep.all_admissible);
        CHECK(rep.pairs == tw.q4() - 1);
        uint64_t total = 0;
        for (auto [count, pairs] : rep.histogram) {
            CHECK(admitted(rep, count));
            total += pairs;
        }
        CHECK(total == tw.q4() - 1);

        for (auto [count, w] : rep.witnesses) {
            FieldElem a = elem_of_witness_log(tw, w.first);
            FieldElem b = elem_of_witness_log(tw, w.second);
            CHECK(brute_circle_roots(tw, 1, a, b) == count);
        }
    }

    // q = 9 with k = 2: the top admissible count 10 is attained on the
    // 10-element circle. Frozen from an independent run.
    const FieldTower& t9 = tower_q(9);
    RootCountReport rep = unit_circle_root_histogram(t9, 2);
    CHECK(rep.all_admissible);
    std::map<uint64_t, uint64_t> frozen{{0, 2592}, {1, 720}, {2, 3240}, {10, 8}};
    CHECK(rep.histogram == frozen);
    REQUIRE(rep.witnesses.count(10) == 1);
    CHECK(brute_circle_roots(t9, 2, elem_of_witness_log(t9, rep.witnesses.at(10).first),
                             elem_of_witness_log(t9, rep.witnesses.at(10).second)) == 10);

    CHECK_THROWS_WITH_AS(unit_circle_root_histogram(t9, 2, 10),
                         doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("four-root conjecture holds at m = 1 and rejects even m") {
    ConjectureReport rep = conjecture_check(1);
    CHECK(rep.q == 3);
    CHECK(rep.affirmed);
    CHECK(rep.max_count == 4);
    CHECK(rep.predicted_count == 4);
    CHECK(rep.pairs_at_max >= 1);
    CHECK(rep.predicted_b_log == -1);
    CHECK(rep.scan.pairs == 80);

    // The predicted coefficient pair must re-derive to four roots with plain
    // arithmetic as well.
    const FieldTower& tw = tower_q(3);
    CHECK(brute_circle_roots(tw, 2, elem_of_witness_log(tw, rep.predicted_a_log), tw.zero()) ==
          4);

    CHECK_THROWS_WITH_AS(conjecture_check(2), doctest::Contains("NotOdd"), Error);
}

TEST_CASE("power maps from the large circle respect cosets and fibers") {
    const FieldTower& t3 = tower_q(3);
    CHECK(preimage_structure_check(t3, 4, 4));  // family A: x -> x^(q+1)
    CHECK(preimage_structure_check(t3, 2, 2));  // family B: x -> x^(q-1)
    const FieldTower& t4 = tower_q(4);
    CHECK(preimage_structure_check(t4, 1, 5));
    CHECK(preimage_structure_check(t4, 5, 5));
    CHECK(preimage_structure_check(t4, 3, 3));

    CHECK_THROWS_WITH_AS(preimage_structure_check(t3, 2, 3),
                         doctest::Contains("BadArgument"), Error);
    // r = 2 violates the family A valuation condition for exponent q+1 = 4.
    CHECK_THROWS_WITH_AS(preimage_structure_check(t3, 2, 4), doctest::Contains("InvalidR"),
                         Error);
}
