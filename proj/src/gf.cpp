#include "ccd/gf.hpp"

#include <algorithm>

namespace ccd {
namespace {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense coefficient vectors over F_p (low degree first, fixed length) used
// only during the modulus search; the Zech tables take over afterwards.
using Digits = std::vector<uint32_t>;

// c = a*b mod f, where f is monic of degree d and a, b have degree < d.
Digits mulmod(const Digits& a, const Digits& b, const Digits& f, uint32_t p) {
    size_t d = f.size() - 1;
    Digits prod(2 * d - 1, 0);
    for (size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < d; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (size_t i = 2 * d - 2; i + 1 > d; --i) {
        uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < d; ++j)  // prod -= c * x^(i-d) * f
            prod[i - d + j] = (prod[i - d + j] + c * (p - f[j])) % p;
    }
    prod.resize(d);
    return prod;
}

Digits powmod_x(uint64_t e, const Digits& f, uint32_t p) {
    size_t d = f.size() - 1;
    Digits acc(d, 0), base(d, 0);
    acc[0] = 1;
    base[1 % d] = 1;  // the element x (d >= 4 always here)
    while (e) {
        if (e & 1) acc = mulmod(acc, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

bool is_one(const Digits& a) {
    if (a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

// x has multiplicative order exactly L-1 modulo f. A cyclic unit group of
// order L-1 plus zero exhausts the L-element ring, so this simultaneously
// proves f irreducible and primitive.
bool x_is_primitive_root(const Digits& f, uint32_t p, uint64_t ring_size,
                         const std::vector<uint64_t>& factors_of_order) {
    if (!is_one(powmod_x(ring_size - 1, f, p))) return false;
    for (uint64_t ell : factors_of_order)
        if (is_one(powmod_x((ring_size - 1) / ell, f, p))) return false;
    return true;
}

}  // namespace

FieldTower::FieldTower(uint32_t p, uint32_t m, uint64_t cap) : p_(p), m_(m) {
    require(is_prime_u64(p), Errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    require(m >= 1, Errc::bad_argument, "m must be positive");
    uint32_t d = 4 * m;
    uint64_t size = 1;
    for (uint32_t i = 0; i < d; ++i) {
        size *= p;
        require(size <= cap, Errc::cap_exceeded,
                "tower size p^(4m) exceeds the cap of " + std::to_string(cap) + " elements");
    }
    q_ = 1;
    for (uint32_t i = 0; i < m; ++i) q_ *= p;
    q2_ = q_ * q_;
    q4_ = q2_ * q2_;
    order_ = q4_ - 1;
    level_size_[0] = p_;
    level_size_[1] = q_;
    level_size_[2] = q2_;
    level_size_[3] = q4_;
    for (int i = 0; i < 4; ++i) level_stride_[i] = order_ / (level_size_[i] - 1);

    // Lexicographically smallest primitive modulus: enumerate coefficient
    // tuples (c_0, ..., c_{d-1}) in lex order (c_0 varies slowest) and keep
    // the first candidate whose residue class of x has full order.
    auto factors = prime_factors(order_);
    std::vector<uint64_t> pw(d);  // pw[i] = p^(d-1-i) for big-endian digit decode
    pw[d - 1] = 1;
    for (int i = static_cast<int>(d) - 2; i >= 0; --i) pw[i] = pw[i + 1] * p;
    Digits f(d + 1, 0);
    f[d] = 1;
    bool found = false;
    for (uint64_t w = 0; w < q4_ && !found; ++w) {
        for (uint32_t i = 0; i < d; ++i) f[i] = static_cast<uint32_t>((w / pw[i]) % p);
        if (f[0] == 0) continue;  // x | f: never primitive
        if (x_is_primitive_root(f, p, q4_, factors)) found = true;
    }
    internal_check(found, "no primitive polynomial found");  // cannot happen
    desc_.p = p_;
    desc_.m = m_;
    desc_.modulus.assign(f.begin(), f.end());
    build_tables();
}

std::pair<uint32_t, uint32_t> FieldTower::split_prime_power(uint64_t q) {
    require(q >= 2, Errc::not_prime, "q must be a prime power >= 2");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    uint32_t m = 0;
    uint64_t t = q;
    while (t > 1) {
        require(t % p == 0, Errc::not_prime, std::to_string(q) + " is not a prime power");
        t /= p;
        ++m;
    }
    return {static_cast<uint32_t>(p), m};
}

FieldTower FieldTower::from_q(uint64_t q, uint64_t cap) {
    auto [p, m] = split_prime_power(q);
    return FieldTower(p, m, cap);
}

void FieldTower::build_tables() {
    uint32_t d = 4 * m_;
    exp_.assign(order_, 0);
    log_.assign(q4_, kLogZero);

    // Walk beta^0, beta^1, ... via multiply-by-x with reduction; primitivity
    // of the modulus guarantees all q^4-1 packed values are distinct.
    Digits cur(d, 0);
    cur[0] = 1;
    const auto& f = desc_.modulus;
    for (uint64_t e = 0; e < order_; ++e) {
        uint64_t packed = 0, b = 1;
        for (uint32_t i = 0; i < d; ++i) {
            packed += cur[i] * b;
            b *= p_;
        }
        internal_check(log_[packed] == kLogZero, "modulus is not primitive");
        exp_[e] = static_cast<uint32_t>(packed);
        log_[packed] = static_cast<uint32_t>(e);
        uint32_t carry = cur[d - 1];
        for (uint32_t i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry != 0) {
            for (uint32_t i = 0; i < d; ++i)
                cur[i] = (cur[i] + carry * (p_ - f[i])) % p_;
        }
    }

    // Zech table: adding one to beta^i touches only the constant digit.
    zech_.assign(order_, kLogZero);
    for (uint64_t i = 0; i < order_; ++i) {
        uint32_t rep = exp_[i];
        uint32_t c0 = rep % p_;
        uint32_t rep1 = rep - c0 + (c0 + 1) % p_;
        zech_[i] = rep1 == 0 ? kLogZero : log_[rep1];
    }
    log_minus_one_ = p_ == 2 ? 0 : static_cast<uint32_t>(order_ / 2);

    tr2z_.assign(order_, 0);
    for (uint64_t i = 0; i < order_; ++i) {
        uint32_t conj = static_cast<uint32_t>(i * q2_ % order_);
        tr2z_[i] = add_log(static_cast<uint32_t>(i), conj) == kLogZero ? 1 : 0;
    }
}

FieldElem FieldTower::from_packed(uint64_t v) const {
    require(v < q4_, Errc::bad_argument, "packed value out of range");
    if (v == 0) return zero();
    return FieldElem(this, log_[v]);
}

FieldElem FieldTower::from_int(uint64_t c) const {
    c %= p_;
    return c == 0 ? zero() : FieldElem(this, log_[c]);
}

FieldElem FieldTower::add(FieldElem x, FieldElem y) const {
    check_same(x);
    check_same(y);
    return FieldElem(this, add_log(x.raw(), y.raw()));
}

FieldElem FieldTower::neg(FieldElem x) const {
    check_same(x);
    return FieldElem(this, neg_log(x.raw()));
}

FieldElem FieldTower::sub(FieldElem x, FieldElem y) const { return add(x, neg(y)); }

FieldElem FieldTower::mul(FieldElem x, FieldElem y) const {
    check_same(x);
    check_same(y);
    return FieldElem(this, mul_log(x.raw(), y.raw()));
}

FieldElem FieldTower::inv(FieldElem x) const {
    check_same(x);
    require(!x.is_zero(), Errc::division_by_zero, "inverse of zero");
    return FieldElem(this, static_cast<uint32_t>((order_ - x.log()) % order_));
}

FieldElem FieldTower::div(FieldElem x, FieldElem y) const { return mul(x, inv(y)); }

FieldElem FieldTower::pow(FieldElem x, int64_t e) const {
    check_same(x);
    if (x.is_zero()) {
        if (e == 0) return one();
        require(e > 0, Errc::division_by_zero, "negative power of zero");
        return zero();
    }
    int64_t em = e % static_cast<int64_t>(order_);
    if (em < 0) em += static_cast<int64_t>(order_);
    uint64_t lg = static_cast<uint64_t>(x.log()) * static_cast<uint64_t>(em) % order_;
    return FieldElem(this, static_cast<uint32_t>(lg));
}

FieldElem FieldTower::frobenius(FieldElem x, Level base, uint32_t times) const {
    check_same(x);
    if (x.is_zero()) return x;
    uint64_t s = level_size(base) % order_;
    uint64_t lg = x.log();
    for (uint32_t i = 0; i < times; ++i) lg = lg * s % order_;
    return FieldElem(this, static_cast<uint32_t>(lg));
}

FieldElem FieldTower::trace(FieldElem x, Level upper, Level lower) const {
    check_same(x);
    require(static_cast<int>(lower) <= static_cast<int>(upper), Errc::invalid_levels,
            "trace requires lower <= upper in the tower chain");
    require(contains(x, upper), Errc::level_mismatch, "element not in the upper level");
    uint32_t steps = level_degree(upper) / level_degree(lower);
    FieldElem acc = x, y = x;
    for (uint32_t j = 1; j < steps; ++j) {
        y = frobenius(y, lower);
        acc = add(acc, y);
    }
    internal_check(contains(acc, lower), "trace left the target field");
    return acc;
}

std::vector<FieldElem> FieldTower::unit_circle(uint64_t d) const {
    require(d >= 1 && order_ % d == 0, Errc::not_a_divisor,
            "requested order does not divide q^4 - 1");
    uint64_t g = order_ / d;
    std::vector<FieldElem> out;
    out.reserve(d);
    for (uint64_t t = 0; t < d; ++t) out.push_back(FieldElem(this, static_cast<uint32_t>(t * g)));
    return out;
}

std::pair<FieldElem, FieldElem> FieldTower::delta_lambda(uint64_t r) const {
    require(r >= 1 && (q2_ - 1) % r == 0, Errc::not_a_divisor, "r does not divide q^2 - 1");
    uint64_t n = q2_ + 1;
    FieldElem delta = from_log((q2_ - 1) / r);
    FieldElem lambda = pow(delta, static_cast<int64_t>(n));
    internal_check(multiplicative_order(delta) == r * n, "ord(delta) != r(q^2+1)");
    internal_check(r == 1 ? lambda == one() : multiplicative_order(lambda) == r,
                   "ord(lambda) != r");
    internal_check(contains(lambda, Level::fq2), "lambda not in F_{q^2}");
    return {delta, lambda};
}

uint64_t FieldTower::multiplicative_order(FieldElem x) const {
    check_same(x);
    require(!x.is_zero(), Errc::bad_argument, "order of zero");
    return order_ / std::gcd(order_, static_cast<uint64_t>(x.log()));
}

}  // namespace ccd
