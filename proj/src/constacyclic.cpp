#include "ccd/constacyclic.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ccd {

int nu2(uint64_t x) {
    internal_check(x != 0, "nu2 of zero");
    int v = 0;
    while ((x & 1) == 0) {
        x >>= 1;
        ++v;
    }
    return v;
}

uint64_t ConstacyclicCode::s_exponent() const {
    require(family != Family::custom, Errc::bad_argument,
            "custom codes have no distinguished second exponent");
    uint64_t q = tower->q();
    return family == Family::A ? q * q + q + 1 : q * q - q + 1;
}

std::vector<uint64_t> admissible_r(uint64_t q, Family fam) {
    require(fam != Family::custom, Errc::bad_argument, "admissible_r is per-family");
    uint64_t base = fam == Family::A ? q + 1 : q - 1;
    std::vector<uint64_t> out;
    for (uint64_t r = 1; r <= base; ++r)
        if (base % r == 0 && nu2(r) == nu2(base)) out.push_back(r);
    return out;
}

namespace {

// The two q^2-conjugation orbits {1, q^2} and {s, s q^2} mod rn.
std::vector<uint64_t> family_nonzeros(uint64_t q, uint64_t r, uint64_t s) {
    uint64_t rn = r * (q * q + 1);
    std::set<uint64_t> set;
    for (uint64_t e : {uint64_t(1), s}) {
        uint64_t cur = e % rn;
        do {
            set.insert(cur);
            cur = cur * (q * q % rn) % rn;
        } while (cur != e % rn);
    }
    return std::vector<uint64_t>(set.begin(), set.end());
}

ConstacyclicCode assemble(const FieldTower& tw, Family fam, uint64_t r,
                          std::vector<uint64_t> nonzeros) {
    uint64_t n = tw.q2() + 1;
    auto [delta, lambda] = tw.delta_lambda(r);
    uint64_t rn = r * n;

    // h = product of the minimal polynomials over F_{q^2} of one root per
    // conjugation orbit; every nonzero exponent must name a root of x^n - lambda.
    std::set<uint64_t> pending(nonzeros.begin(), nonzeros.end());
    Poly h = Poly::one(tw, Level::fq2);
    while (!pending.empty()) {
        uint64_t e = *pending.begin();
        require(e % r == 1 % r, Errc::invalid_r,
                "nonzero exponent " + std::to_string(e) + " does not lie on x^n - lambda");
        uint64_t cur = e;
        do {
            require(pending.erase(cur) == 1, Errc::invalid_r,
                    "nonzero exponent set not closed under multiplication by q^2");
            cur = cur * (tw.q2() % rn) % rn;
        } while (cur != e);
        h = h * minimal_polynomial(tw.pow(delta, static_cast<int64_t>(e)), Level::fq2);
    }

    Poly xn = Poly::x_pow_minus(tw, Level::fq2, n, lambda);
    auto [g, rem] = xn.divmod(h);
    internal_check(rem.is_zero(), "check polynomial does not divide x^n - lambda");
    internal_check(g * h == xn, "g*h != x^n - lambda");

    ConstacyclicCode code{&tw,  fam, r, n, static_cast<uint64_t>(h.deg()),
                          delta, lambda, std::move(nonzeros), std::move(g), std::move(h)};
    for (uint64_t e : code.nonzero_exponents)
        internal_check(code.h.promoted(Level::fq4)
                           .eval(tw.pow(delta, static_cast<int64_t>(e)))
                           .is_zero(),
                       "nonzero exponent is not a root of h");
    return code;
}

}  // namespace

ConstacyclicCode build_code(const FieldTower& tw, uint64_t r, Family fam) {
    require(fam != Family::custom, Errc::bad_argument, "use build_custom for custom codes");
    uint64_t q = tw.q();
    uint64_t base = fam == Family::A ? q + 1 : q - 1;
    const char* which = fam == Family::A ? "q+1" : "q-1";
    require(r >= 1 && base % r == 0, Errc::invalid_r,
            std::string("family ") + family_name(fam) + " requires r | " + which);
    require(nu2(r) == nu2(base), Errc::invalid_r,
            std::string("family ") + family_name(fam) + " requires nu2(r) = nu2(" + which +
                "): nu2(" + std::to_string(r) + ")=" + std::to_string(nu2(r)) + " vs " +
                std::to_string(nu2(base)));
    internal_check((tw.q2() - 1) % r == 0, "r | q^2 - 1 implied by the family condition");

    uint64_t s = fam == Family::A ? q * q + q + 1 : q * q - q + 1;
    ConstacyclicCode code = assemble(tw, fam, r, family_nonzeros(q, r, s));
    internal_check(code.k == 4, "family code dimension must be 4");
    return code;
}

ConstacyclicCode build_custom(const FieldTower& tw, uint64_t r,
                              std::vector<uint64_t> nonzeros) {
    require((tw.q2() - 1) % r == 0, Errc::invalid_r, "r must divide q^2 - 1");
    uint64_t rn = r * (tw.q2() + 1);
    std::set<uint64_t> set;
    for (uint64_t e : nonzeros) set.insert(e % rn);
    return assemble(tw, Family::custom, r,
                    std::vector<uint64_t>(set.begin(), set.end()));
}

ConstacyclicCode dual_code(const ConstacyclicCode& c) {
    const FieldTower& tw = *c.tower;
    uint64_t rn = c.r * c.n;

    // h0^{-1} x^k h(1/x): reverse the check polynomial and normalize.
    FieldElem h0 = c.h.coeff(0);
    internal_check(!h0.is_zero(), "check polynomial has zero constant term");
    std::vector<FieldElem> rev(c.h.coeffs().rbegin(), c.h.coeffs().rend());
    Poly hhat = Poly(tw, Level::fq2, std::move(rev)).scaled(h0.inv());

    FieldElem lambda_inv = c.lambda.inv();
    Poly xn = Poly::x_pow_minus(tw, Level::fq2, c.n, lambda_inv);
    auto [hdual, rem] = xn.divmod(hhat);
    internal_check(rem.is_zero(), "reversed check polynomial does not divide x^n - 1/lambda");

    // Nonzeros of the dual are the negated zeros of the primal. Enumerate the
    // root exponents of x^n - lambda from the code's own shift constant rather
    // than assuming the canonical residue class, so duals of duals stay honest.
    std::set<uint64_t> zeros;
    for (uint64_t e = 0; e < rn; ++e)
        if (tw.pow(c.delta, static_cast<int64_t>(e * c.n % rn)) == c.lambda) zeros.insert(e);
    internal_check(zeros.size() == c.n, "x^n - lambda must have n simple roots");
    for (uint64_t e : c.nonzero_exponents)
        internal_check(zeros.erase(e) == 1, "code nonzero is not a root exponent");
    std::vector<uint64_t> dual_nonzeros;
    for (uint64_t z : zeros) dual_nonzeros.push_back((rn - z) % rn);
    std::sort(dual_nonzeros.begin(), dual_nonzeros.end());

    ConstacyclicCode dual{c.tower,     Family::custom, c.r,        c.n,
                          c.n - c.k,   c.delta,        lambda_inv, std::move(dual_nonzeros),
                          std::move(hhat), std::move(hdual)};

    // Every dual generator row is orthogonal to every primal generator row.
    Matrix gp = generator_matrix(c), gd = generator_matrix(dual);
    for (const Row& u : gp)
        for (const Row& v : gd) {
            FieldElem dot = tw.zero();
            for (uint64_t i = 0; i < c.n; ++i) dot = dot + u[i] * v[i];
            internal_check(dot.is_zero(), "dual generator row not orthogonal to primal");
        }
    return dual;
}

std::vector<FieldElem> trace_codeword(const ConstacyclicCode& c, FieldElem a, FieldElem b) {
    const FieldTower& tw = *c.tower;
    tw.check_same(a);
    tw.check_same(b);
    uint64_t s = c.s_exponent();
    std::vector<FieldElem> word;
    word.reserve(c.n);
    for (uint64_t i = 0; i < c.n; ++i) {
        FieldElem x = a * tw.pow(c.delta, -static_cast<int64_t>(i)) +
                      b * tw.pow(c.delta, -static_cast<int64_t>(s * i % (c.r * c.n)));
        word.push_back(tw.trace(x, Level::fq4, Level::fq2));
    }
    return word;
}

Matrix generator_matrix(const ConstacyclicCode& c) {
    const FieldTower& tw = *c.tower;
    Matrix mat;
    if (c.family != Family::custom) {
        mat.push_back(trace_codeword(c, tw.one(), tw.zero()));
        mat.push_back(trace_codeword(c, tw.beta(), tw.zero()));
        mat.push_back(trace_codeword(c, tw.zero(), tw.one()));
        mat.push_back(trace_codeword(c, tw.zero(), tw.beta()));
    } else {
        for (uint64_t i = 0; i < c.k; ++i) {
            Row row(c.n, tw.zero());
            for (int j = 0; j <= c.g.deg(); ++j)
                row[i + static_cast<uint64_t>(j)] = c.g.coeff(static_cast<size_t>(j));
            mat.push_back(std::move(row));
        }
    }
    require(rank(mat) == c.k, Errc::rank_deficient, "generator matrix rank below dimension");
    return mat;
}

bool is_codeword(const ConstacyclicCode& c, const std::vector<FieldElem>& word) {
    require(word.size() == c.n, Errc::length_mismatch, "word length != n");
    Poly w(*c.tower, Level::fq2, word);
    return (w % c.g).is_zero();
}

std::vector<FieldElem> constacyclic_shift(const ConstacyclicCode& c,
                                          const std::vector<FieldElem>& word) {
    require(word.size() == c.n, Errc::length_mismatch, "word length != n");
    std::vector<FieldElem> out;
    out.reserve(c.n);
    out.push_back(c.lambda * word.back());
    out.insert(out.end(), word.begin(), word.end() - 1);
    return out;
}

TraceKernel::TraceKernel(const ConstacyclicCode& code)
    : tw(code.tower), n(static_cast<uint32_t>(code.n)) {
    uint64_t M = tw->order();
    uint64_t ld = code.delta.log();
    uint64_t s = code.s_exponent();
    da.resize(n);
    db.resize(n);
    for (uint32_t i = 0; i < n; ++i) {
        uint64_t e1 = i * ld % M;
        uint64_t e2 = (static_cast<uint64_t>(i) * (s % M)) % M * ld % M;
        da[i] = static_cast<uint32_t>((M - e1) % M);
        db[i] = static_cast<uint32_t>((M - e2) % M);
    }
}

}  // namespace ccd
