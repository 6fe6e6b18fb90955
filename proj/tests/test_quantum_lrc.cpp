#include "doctest.h"

#include "ccd/quantum_lrc.hpp"
#include "test_util.hpp"

using namespace ccd;

TEST_CASE("intersection dimensions: closed form, hulls, and LCD pairs") {
    const FieldTower& tw = tower_q(3);
    ConstacyclicCode a = build_code(tw, 4, Family::A);
    ConstacyclicCode b = build_code(tw, 2, Family::B);

    // Different shift constants, k1 + k2 <= n: trivial intersection.
    IntersectionDim ab = intersection_dimension(a, b);
    CHECK(ab.formula_applicable);
    CHECK(ab.formula_dim == 0);
    CHECK(ab.explicit_dim == 0);

    // Same code: the closed form does not apply; the intersection is the code.
    IntersectionDim aa = intersection_dimension(a, a);
    CHECK_FALSE(aa.formula_applicable);
    CHECK(aa.explicit_dim == 4);

    // The order-4 shift constant differs from its inverse, so the dual pair
    // falls under the closed form: the code is LCD.
    IntersectionDim lcd = intersection_dimension(dual_code(a), a);
    CHECK(lcd.formula_applicable);
    CHECK(lcd.explicit_dim == 0);

    // lambda = -1 is self-inverse: closed form mute, and the hull is all of
    // the code (it is self-orthogonal).
    IntersectionDim hull = intersection_dimension(dual_code(b), b);
    CHECK_FALSE(hull.formula_applicable);
    CHECK(hull.explicit_dim == 4);

    ConstacyclicCode other = build_code(tower_q(5), 2, Family::A);
    CHECK_THROWS_WITH_AS(intersection_dimension(a, other), doctest::Contains("TowerMismatch"),
                         Error);
}

TEST_CASE("entanglement-assisted parameters from code pairs") {
    const FieldTower& tw = tower_q(3);
    ConstacyclicCode a = build_code(tw, 4, Family::A);
    ConstacyclicCode b = build_code(tw, 2, Family::B);

    EaqeccParams ea = eaqecc_from_pair(a, 6, b, 6);
    CHECK(ea.n == 10);
    CHECK(ea.k_logical == 4);
    CHECK(ea.d == 6);
    CHECK(ea.c == 6);
    CHECK(ea.alphabet == 9);
    CHECK(ea.maximal_entanglement);
    CHECK(ea.shift_product_hypothesis);
    CHECK(ea.net_rate == Rational(BigInt(7) - 9, BigInt(10)));

    EaqeccParams ed = eaqecc_from_pair(dual_code(a), 4, dual_code(b), 4);
    CHECK(ed.k_logical == 6);
    CHECK(ed.d == 4);
    CHECK(ed.c == 4);
    CHECK(ed.maximal_entanglement);
    CHECK(ed.shift_product_hypothesis);
    CHECK(ed.net_rate == Rational(BigInt(9) - 7, BigInt(10)));

    // Pairing the self-orthogonal code with itself: the shift constants
    // multiply to one, the hypothesis fails, and no logical qudits remain.
    EaqeccParams eb = eaqecc_from_pair(b, 6, b, 6);
    CHECK_FALSE(eb.shift_product_hypothesis);
    CHECK(eb.c == 2);
    CHECK(eb.k_logical == 0);
    CHECK_FALSE(eb.maximal_entanglement);

    EaqeccParams e2 = eaqecc_from_pair(a, 6, a, 6);
    CHECK(e2.shift_product_hypothesis);  // order-4 constant squares away from 1
    CHECK(e2.c == 6);
    CHECK(e2.k_logical == 4);
}

TEST_CASE("locality reports meet both optimality bounds at desk scale") {
    LrcReport r3 = lrc_report(10, 6, 4, 6, 9);
    CHECK(r3.locality == 5);
    CHECK(r3.singleton_like_bound == 4);
    CHECK(r3.distance_optimal);
    CHECK(r3.cm_bound == 6);
    CHECK(r3.dimension_optimal);

    LrcReport r4 = lrc_report(17, 13, 4, 12, 16);
    CHECK(r4.locality == 11);
    CHECK(r4.singleton_like_bound == 4);
    CHECK(r4.distance_optimal);
    CHECK(r4.cm_bound == 13);
    CHECK(r4.dimension_optimal);

    LrcReport r5 = lrc_report(26, 22, 4, 20, 25);
    CHECK(r5.locality == 19);
    CHECK(r5.singleton_like_bound == 4);
    CHECK(r5.distance_optimal);
    CHECK(r5.cm_bound == 22);
    CHECK(r5.dimension_optimal);

    CHECK_THROWS_WITH_AS(lrc_report(10, 6, 4, 2, 9), doctest::Contains("LocalityUndefined"),
                         Error);
    CHECK_THROWS_WITH_AS(lrc_report(10, 0, 4, 6, 9), doctest::Contains("BadArgument"), Error);
}
