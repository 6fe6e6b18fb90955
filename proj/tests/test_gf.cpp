#include "doctest.h"

#include <map>
#include <set>
#include <vector>

#include "ccd/gf.hpp"
#include "test_util.hpp"

using namespace ccd;

namespace {

// Independent addition oracle: unpack base-p digit vectors, add digitwise
// mod p, repack. Exercises none of the Zech machinery.
uint64_t packed_add(uint32_t p, uint64_t a, uint64_t b) {
    uint64_t out = 0, mul = 1;
    while (a != 0 || b != 0) {
        out += ((a + b) % p) * mul;
        a /= p;
        b /= p;
        mul *= p;
    }
    return out;
}

}  // namespace

TEST_CASE("tower construction is deterministic with frozen moduli") {
    // Regression values for the lexicographically smallest primitive modulus
    // (coefficients compared low degree first). For q=3 the constant term is
    // forced: the product of the four conjugate roots is beta^40, the unique
    // element of order 2, i.e. 2.
    const FieldTower& t2 = tower_q(2);
    CHECK(t2.descriptor().modulus == std::vector<uint32_t>{1, 0, 0, 1, 1});
    const FieldTower& t3 = tower_q(3);
    CHECK(t3.descriptor().modulus == std::vector<uint32_t>{2, 0, 0, 1, 1});

    FieldTower again(3, 1);
    CHECK(again.descriptor().modulus == t3.descriptor().modulus);

    CHECK(t3.q() == 3);
    CHECK(t3.q2() == 9);
    CHECK(t3.q4() == 81);
    CHECK(t3.order() == 80);
    CHECK(t2.q4() == 16);
}

TEST_CASE("prime power splitting") {
    CHECK(FieldTower::split_prime_power(2) == std::pair<uint32_t, uint32_t>{2, 1});
    CHECK(FieldTower::split_prime_power(4) == std::pair<uint32_t, uint32_t>{2, 2});
    CHECK(FieldTower::split_prime_power(8) == std::pair<uint32_t, uint32_t>{2, 3});
    CHECK(FieldTower::split_prime_power(9) == std::pair<uint32_t, uint32_t>{3, 2});
    CHECK(FieldTower::split_prime_power(27) == std::pair<uint32_t, uint32_t>{3, 3});
    CHECK(FieldTower::split_prime_power(121) == std::pair<uint32_t, uint32_t>{11, 2});
    CHECK_THROWS_WITH_AS(FieldTower::split_prime_power(6), doctest::Contains("NotPrime"), Error);
    CHECK_THROWS_WITH_AS(FieldTower::split_prime_power(12), doctest::Contains("NotPrime"), Error);
    CHECK_THROWS_WITH_AS(FieldTower::split_prime_power(1), doctest::Contains("NotPrime"), Error);
}

TEST_CASE("construction preconditions") {
    CHECK_THROWS_WITH_AS(FieldTower(4, 1), doctest::Contains("NotPrime"), Error);
    CHECK_THROWS_WITH_AS(FieldTower(2, 1, 8), doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("addition agrees with digitwise packed arithmetic") {
    // Exhaustive cross-check of the Zech table against the independent
    // base-p oracle, zero included on both sides.
    for (uint64_t q : {2, 3}) {
        const FieldTower& tw = tower_q(q);
        std::vector<FieldElem> all{tw.zero()};
        for (uint64_t i = 0; i < tw.order(); ++i) all.push_back(tw.from_log(i));
        for (const FieldElem& x : all)
            for (const FieldElem& y : all)
                CHECK((x + y).packed() == packed_add(tw.p(), x.packed(), y.packed()));
    }
}

TEST_CASE("prime subfield arithmetic matches integers mod p") {
    const FieldTower& tw = tower_q(3);
    for (uint64_t a = 0; a < 3; ++a) {
        for (uint64_t b = 0; b < 3; ++b) {
            FieldElem x = tw.from_int(a), y = tw.from_int(b);
            CHECK((x + y) == tw.from_int((a + b) % 3));
            CHECK((x * y) == tw.from_int((a * b) % 3));
            CHECK((x - y) == tw.from_int((a + 3 - b) % 3));
        }
    }
}

TEST_CASE("multiplicative structure") {
    const FieldTower& tw = tower_q(3);
    FieldElem b = tw.beta();
    CHECK(tw.multiplicative_order(b) == 80);
    CHECK(b.pow(80) == tw.one());
    CHECK(b * b.pow(79) == tw.one());
    CHECK(b.pow(-1) * b == tw.one());
    CHECK(b.inv() == b.pow(79));

    // every nonzero element satisfies x^(q^4-1) = 1
    for (uint64_t i = 0; i < tw.order(); ++i) CHECK(tw.from_log(i).pow(80) == tw.one());

    CHECK(tw.minus_one() * tw.minus_one() == tw.one());
    CHECK(tw.minus_one() != tw.one());
    CHECK(tower_q(2).minus_one() == tower_q(2).one());  // characteristic 2

    CHECK_THROWS_WITH_AS(tw.zero().inv(), doctest::Contains("DivisionByZero"), Error);
    CHECK_THROWS_WITH_AS(tw.one() / tw.zero(), doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("elements of different towers never mix") {
    FieldTower a(2, 1), b(2, 1);
    CHECK_THROWS_WITH_AS(a.add(a.one(), b.one()), doctest::Contains("TowerMismatch"), Error);
}

TEST_CASE("subfield membership counts and Frobenius fixed points") {
    const FieldTower& tw = tower_q(3);
    std::map<Level, uint64_t> sizes;
    for (Level lv : {Level::fp, Level::fq, Level::fq2, Level::fq4}) {
        uint64_t count = 1;  // zero belongs to every level
        for (uint64_t i = 0; i < tw.order(); ++i)
            if (tw.contains(tw.from_log(i), lv)) ++count;
        sizes[lv] = count;
        CHECK(count == tw.level_size(lv));
    }
    CHECK(sizes[Level::fq] == 3);
    CHECK(sizes[Level::fq2] == 9);
    CHECK(sizes[Level::fq4] == 81);

    // x in F_{q^s} iff x^(q^s) = x
    for (uint64_t i = 0; i < tw.order(); ++i) {
        FieldElem x = tw.from_log(i);
        CHECK(tw.contains(x, Level::fq) == (x.pow(3) == x));
        CHECK(tw.contains(x, Level::fq2) == (x.pow(9) == x));
    }
}

TEST_CASE("Frobenius is a field homomorphism") {
    const FieldTower& tw = tower_q(2);  // F_16: 17^2 pairs, exhaustive
    std::vector<FieldElem> all{tw.zero()};
    for (uint64_t i = 0; i < tw.order(); ++i) all.push_back(tw.from_log(i));
    for (const FieldElem& x : all) {
        for (const FieldElem& y : all) {
            CHECK(tw.frobenius(x + y, Level::fq) ==
                  tw.frobenius(x, Level::fq) + tw.frobenius(y, Level::fq));
            CHECK(tw.frobenius(x * y, Level::fq2) ==
                  tw.frobenius(x, Level::fq2) * tw.frobenius(y, Level::fq2));
        }
    }
    // frobenius at level fq2 is x -> x^(q^2)
    for (const FieldElem& x : all) CHECK(tw.frobenius(x, Level::fq2) == x.pow(4));
}

TEST_CASE("trace onto the middle level") {
    const FieldTower& tw = tower_q(3);
    CHECK(tw.trace(tw.zero(), Level::fq4, Level::fq2) == tw.zero());

    // fixed-field case: Tr_{q^4/q^2}(x) = 2x for x in F_{q^2}, char != 2
    for (uint64_t i = 0; i < tw.order(); ++i) {
        FieldElem x = tw.from_log(i);
        if (tw.contains(x, Level::fq2))
            CHECK(tw.trace(x, Level::fq4, Level::fq2) == x + x);
    }

    // surjective onto F_9 with fibers of size q^4/q^2 = 9
    std::map<uint64_t, int> fiber;
    fiber[tw.trace(tw.zero(), Level::fq4, Level::fq2).packed()]++;
    for (uint64_t i = 0; i < tw.order(); ++i)
        fiber[tw.trace(tw.from_log(i), Level::fq4, Level::fq2).packed()]++;
    CHECK(fiber.size() == 9);
    for (const auto& [value, count] : fiber) CHECK(count == 9);

    // transitivity: Tr_{q^4/q} = Tr_{q^2/q} o Tr_{q^4/q^2}
    for (uint64_t i = 0; i < tw.order(); ++i) {
        FieldElem x = tw.from_log(i);
        CHECK(tw.trace(x, Level::fq4, Level::fq) ==
              tw.trace(tw.trace(x, Level::fq4, Level::fq2), Level::fq2, Level::fq));
    }

    CHECK_THROWS_WITH_AS(tw.trace(tw.one(), Level::fq, Level::fq4),
                         doctest::Contains("InvalidLevels"), Error);
}

TEST_CASE("log-space trace-zero table matches the element-level trace") {
    const FieldTower& tw = tower_q(3);
    CHECK(tw.trace_to_fq2_is_zero(FieldTower::kLogZero));
    for (uint64_t i = 0; i < tw.order(); ++i)
        CHECK(tw.trace_to_fq2_is_zero(static_cast<uint32_t>(i)) ==
              (tw.trace(tw.from_log(i), Level::fq4, Level::fq2) == tw.zero()));
}

TEST_CASE("unit circles") {
    const FieldTower& tw = tower_q(3);
    CHECK(tw.unit_circle(1) == std::vector<FieldElem>{tw.one()});

    std::vector<FieldElem> u4 = tw.unit_circle(4);
    CHECK(u4.size() == 4);
    for (const FieldElem& x : u4) CHECK(x.pow(4) == tw.one());

    std::vector<FieldElem> u20 = tw.unit_circle(20);
    CHECK(u20.size() == 20);
    std::set<uint64_t> seen;
    for (const FieldElem& x : u20) seen.insert(x.log());
    CHECK(seen.size() == 20);
    // closed under multiplication and inverse
    for (const FieldElem& x : u20) {
        CHECK(seen.count((x * u20[1]).log()) == 1);
        CHECK(seen.count(x.inv().log()) == 1);
    }

    CHECK_THROWS_WITH_AS(tw.unit_circle(7), doctest::Contains("NotADivisor"), Error);
}

TEST_CASE("shift-root and shift-constant pair") {
    const FieldTower& tw = tower_q(3);
    auto [delta, lambda] = tw.delta_lambda(4);
    CHECK(tw.multiplicative_order(delta) == 40);
    CHECK(tw.multiplicative_order(lambda) == 4);
    CHECK(tw.contains(lambda, Level::fq2));
    CHECK(delta.pow(10) == lambda);

    auto [d2, l2] = tw.delta_lambda(2);
    CHECK(l2 == tw.minus_one());
    auto [d1, l1] = tw.delta_lambda(1);
    CHECK(l1 == tw.one());
    CHECK(tw.multiplicative_order(d1) == 10);

    CHECK_THROWS_WITH_AS(tw.delta_lambda(3), doctest::Contains("NotADivisor"), Error);
}

TEST_CASE("packed representation round-trips") {
    const FieldTower& tw = tower_q(3);
    CHECK(tw.from_packed(0) == tw.zero());
    std::set<uint64_t> images;
    for (uint64_t i = 0; i < tw.order(); ++i) {
        uint64_t v = tw.from_log(i).packed();
        CHECK(v != 0);
        CHECK(v < 81);
        CHECK(tw.from_packed(v) == tw.from_log(i));
        images.insert(v);
    }
    CHECK(images.size() == 80);
}
