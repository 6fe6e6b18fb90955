#include "doctest.h"

#include <set>
#include <vector>

#include "ccd/polyring.hpp"
#include "test_util.hpp"

using namespace ccd;

TEST_CASE("construction normalizes and checks coefficient levels") {
    const FieldTower& tw = tower_q(3);
    Poly f(tw, Level::fq2, {tw.one(), tw.zero(), tw.zero()});  // 1 + 0x + 0x^2
    CHECK(f.deg() == 0);
    CHECK(f == Poly::one(tw, Level::fq2));

    CHECK(Poly::zero(tw, Level::fq2).is_zero());
    CHECK(Poly::zero(tw, Level::fq2).deg() == -1);

    // beta generates F_81 and lies outside F_9
    CHECK_THROWS_WITH_AS(Poly(tw, Level::fq2, {tw.beta()}),
                         doctest::Contains("LevelMismatch"), Error);
}

TEST_CASE("arithmetic identities") {
    const FieldTower& tw = tower_q(3);
    FieldElem one = tw.one(), mone = tw.minus_one();
    Poly x2m1(tw, Level::fq2, {mone, tw.zero(), one});  // x^2 - 1
    Poly xm1(tw, Level::fq2, {mone, one});              // x - 1
    Poly xp1(tw, Level::fq2, {one, one});               // x + 1

    auto [quot, rem] = x2m1.divmod(xm1);
    CHECK(quot == xp1);
    CHECK(rem.is_zero());
    CHECK(quot * xm1 + rem == x2m1);

    CHECK(x2m1 * Poly::one(tw, Level::fq2) == x2m1);
    CHECK(x2m1 - x2m1 == Poly::zero(tw, Level::fq2));
    CHECK(x2m1.eval(one) == tw.zero());
    CHECK(x2m1.eval(tw.from_int(2)) == tw.zero());

    CHECK_THROWS_WITH_AS(x2m1.divmod(Poly::zero(tw, Level::fq2)),
                         doctest::Contains("DivisionByZero"), Error);

    Poly at_fq(tw, Level::fq, {one, one});
    CHECK_THROWS_WITH_AS(x2m1 + at_fq, doctest::Contains("LevelMismatch"), Error);
    CHECK(at_fq.promoted(Level::fq2) + x2m1 == x2m1 + xp1);
    CHECK_THROWS_WITH_AS(x2m1.promoted(Level::fq), doctest::Contains("InvalidLevels"), Error);
}

TEST_CASE("gcd is monic and picks out common roots") {
    const FieldTower& tw = tower_q(3);
    Poly f(tw, Level::fq, {tw.from_int(2), tw.from_int(2)});  // 2x + 2
    Poly g = poly_gcd(f, Poly::zero(tw, Level::fq));
    CHECK(g.is_monic());
    CHECK(g == Poly(tw, Level::fq, {tw.one(), tw.one()}));

    // elements of F_9 sit at discrete logs divisible by (q^4-1)/(q^2-1) = 10
    FieldElem u = tw.from_log(10), v = tw.from_log(20), w = tw.from_log(30);
    auto linear = [&](FieldElem root) {
        return Poly(tw, Level::fq2, {tw.neg(root), tw.one()});
    };
    Poly a = linear(u) * linear(v);
    Poly b = linear(u) * linear(w);
    CHECK(poly_gcd(a, b) == linear(u));
}

TEST_CASE("monomial helpers") {
    const FieldTower& tw = tower_q(3);
    Poly f = Poly::x_pow_minus(tw, Level::fq2, 10, tw.minus_one());  // x^10 + 1
    CHECK(f.deg() == 10);
    CHECK(f.is_monic());
    CHECK(f.coeff(0) == tw.one());
    for (size_t i = 1; i < 10; ++i) CHECK(f.coeff(i) == tw.zero());

    Poly m = Poly::monomial(tw, Level::fq2, tw.from_int(2), 3);
    CHECK(m.deg() == 3);
    CHECK(m.leading() == tw.from_int(2));
    CHECK(m.str() == "[0,0,0,2]@fq2");
}

TEST_CASE("cyclotomic cosets") {
    CyclotomicCoset zero = cyclotomic_coset(0, 3, 20);
    CHECK(zero.members == std::vector<uint64_t>{0});

    // orbit of 19 under multiplication by 3 mod 20: 19 -> 17 -> 11 -> 13
    CyclotomicCoset c19 = cyclotomic_coset(19, 3, 20);
    CHECK(c19.members == std::vector<uint64_t>{11, 13, 17, 19});
    CHECK(c19.representative == 11);

    // negative residues are admitted: -1 mod 40 under multiplication by 3
    // gives {39, 37, 31, 13} = {-1, -q, -q^2, q^2+q+1} at q=3, rn=40
    CyclotomicCoset cm1 = cyclotomic_coset(-1, 3, 40);
    CHECK(cm1.members == std::vector<uint64_t>{13, 31, 37, 39});

    CHECK_THROWS_WITH_AS(cyclotomic_coset(1, 2, 10), doctest::Contains("NotCoprime"), Error);
}

TEST_CASE("cosets partition the residues") {
    const uint64_t N = 20, base = 3;
    std::set<uint64_t> covered;
    uint64_t total = 0;
    for (uint64_t h = 0; h < N; ++h) {
        CyclotomicCoset c = cyclotomic_coset(static_cast<int64_t>(h), base, N);
        if (c.representative == h) {
            for (uint64_t e : c.members) CHECK(covered.insert(e).second);
            total += c.members.size();
        }
    }
    CHECK(total == N);
}

TEST_CASE("minimal polynomials") {
    const FieldTower& tw = tower_q(3);

    // element of the level itself: degree 1
    FieldElem two = tw.from_int(2);
    Poly lin = minimal_polynomial(two, Level::fq2);
    CHECK(lin.deg() == 1);
    CHECK(lin.eval(two) == tw.zero());

    // delta for r=2 has order rn = 20, so it generates a quadratic extension
    // of F_9; its conjugate over F_9 is delta^9
    auto [delta, lambda] = tw.delta_lambda(2);
    Poly mp = minimal_polynomial(delta, Level::fq2);
    CHECK(mp.deg() == 2);
    CHECK(mp.is_monic());
    CHECK(mp.eval(delta) == tw.zero());
    CHECK(mp.eval(delta.pow(9)) == tw.zero());
    for (const FieldElem& c : mp.coeffs()) CHECK(tw.contains(c, Level::fq2));

    // the two check-polynomial factors at q=3, r=4 are both quadratic
    auto [d4, l4] = tw.delta_lambda(4);
    Poly g1 = minimal_polynomial(d4, Level::fq2);
    Poly gs = minimal_polynomial(d4.pow(13), Level::fq2);  // s = q^2+q+1
    CHECK(g1.deg() == 2);
    CHECK(gs.deg() == 2);
    CHECK((g1 * gs).deg() == 4);
    CHECK(g1 != gs);
}

TEST_CASE("root sets of x^n - lambda") {
    const FieldTower& t3 = tower_q(3);
    auto [delta, lambda] = t3.delta_lambda(2);
    std::vector<FieldElem> roots = roots_of_xn_minus_lambda(t3, 2);
    CHECK(roots.size() == 10);
    std::set<uint64_t> logs;
    for (const FieldElem& z : roots) {
        CHECK(z.pow(10) == lambda);
        logs.insert(z.log());
    }
    CHECK(logs.size() == 10);

    const FieldTower& t4 = tower_q(4);
    std::vector<FieldElem> r17 = roots_of_xn_minus_lambda(t4, 5);
    CHECK(r17.size() == 17);
    std::set<uint64_t> l17;
    auto [d5, l5] = t4.delta_lambda(5);
    for (const FieldElem& z : r17) {
        CHECK(z.pow(17) == l5);
        l17.insert(z.log());
    }
    CHECK(l17.size() == 17);
}
