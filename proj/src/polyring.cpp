#include "ccd/polyring.hpp"

#include <algorithm>
#include <numeric>

namespace ccd {

Poly::Poly(const FieldTower& tw, Level lv, std::vector<FieldElem> coeffs)
    : tw_(&tw), lv_(lv), c_(std::move(coeffs)) {
    for (auto& x : c_) {
        tw.check_same(x);
        require(tw.contains(x, lv), Errc::level_mismatch,
                "coefficient outside the declared level");
        if (x.is_zero()) x = tw.zero();  // normalize detached zeros
    }
    trim();
}

Poly Poly::constant(const FieldTower& tw, Level lv, FieldElem c) {
    return Poly(tw, lv, std::vector<FieldElem>{c});
}

Poly Poly::monomial(const FieldTower& tw, Level lv, FieldElem c, size_t degree) {
    std::vector<FieldElem> v(degree + 1, tw.zero());
    v[degree] = c;
    return Poly(tw, lv, std::move(v));
}

Poly Poly::x_pow_minus(const FieldTower& tw, Level lv, uint64_t n, FieldElem c) {
    std::vector<FieldElem> v(n + 1, tw.zero());
    v[0] = -c;
    v[n] = tw.one();
    return Poly(tw, lv, std::move(v));
}

FieldElem Poly::leading() const {
    require(!is_zero(), Errc::bad_argument, "leading coefficient of zero polynomial");
    return c_.back();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_compatible(const Poly& o) const {
    require(tw_ == o.tw_, Errc::tower_mismatch, "polynomials from different towers");
    require(lv_ == o.lv_, Errc::level_mismatch,
            "polynomials at different levels; promote explicitly");
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly out(*tw_, lv_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), tw_->zero());
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = coeff(i) + o.coeff(i);
    out.trim();
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    check_compatible(o);
    Poly out(*tw_, lv_);
    out.c_.resize(std::max(c_.size(), o.c_.size()), tw_->zero());
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = coeff(i) - o.coeff(i);
    out.trim();
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Poly(*tw_, lv_);
    Poly out(*tw_, lv_);
    out.c_.assign(c_.size() + o.c_.size() - 1, tw_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            out.c_[i + j] = out.c_[i + j] + c_[i] * o.c_[j];
    }
    out.trim();
    return out;
}

Poly Poly::scaled(FieldElem s) const {
    Poly out = *this;
    for (auto& x : out.c_) x = x * s;
    out.trim();
    return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_compatible(d);
    require(!d.is_zero(), Errc::division_by_zero, "polynomial division by zero");
    Poly q(*tw_, lv_), r = *this;
    if (deg() < d.deg()) return {q, r};
    q.c_.assign(c_.size() - d.c_.size() + 1, tw_->zero());
    FieldElem lead_inv = d.leading().inv();
    for (int i = r.deg(); i >= d.deg(); --i) {
        FieldElem ci = r.coeff(static_cast<size_t>(i));
        if (ci.is_zero()) continue;
        FieldElem f = ci * lead_inv;
        size_t shift = static_cast<size_t>(i - d.deg());
        q.c_[shift] = f;
        for (size_t j = 0; j < d.c_.size(); ++j)
            r.c_[shift + j] = r.c_[shift + j] - f * d.c_[j];
    }
    q.trim();
    r.trim();
    internal_check(r.deg() < d.deg(), "divmod remainder degree");
    return {q, r};
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inv());
}

Poly Poly::promoted(Level lv) const {
    require(static_cast<int>(lv) >= static_cast<int>(lv_), Errc::invalid_levels,
            "promotion must go up the chain");
    Poly out = *this;
    out.lv_ = lv;
    return out;
}

FieldElem Poly::eval(FieldElem x) const {
    tw_->check_same(x);
    FieldElem acc = tw_->zero();
    for (size_t i = c_.size(); i > 0; --i) acc = acc * x + c_[i - 1];
    return acc;
}

bool Poly::operator==(const Poly& o) const {
    if (tw_ != o.tw_ || lv_ != o.lv_ || c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::string Poly::str() const {
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i].packed());
    }
    s += "]@";
    s += level_name(lv_);
    return s;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

CyclotomicCoset cyclotomic_coset(int64_t h, uint64_t base, uint64_t N) {
    require(N >= 1, Errc::bad_argument, "modulus must be positive");
    require(std::gcd(base % N, N) == 1, Errc::not_coprime, "gcd(base, N) != 1");
    int64_t hm = h % static_cast<int64_t>(N);
    if (hm < 0) hm += static_cast<int64_t>(N);
    uint64_t h0 = static_cast<uint64_t>(hm);
    CyclotomicCoset out;
    out.base = base;
    out.modulus = N;
    uint64_t cur = h0;
    do {
        out.members.push_back(cur);
        cur = cur * (base % N) % N;
    } while (cur != h0);
    std::sort(out.members.begin(), out.members.end());
    out.representative = out.members.front();
    return out;
}

Poly minimal_polynomial(FieldElem x, Level level) {
    const FieldTower& tw = *x.tower_ptr();
    if (x.is_zero())  // minimal polynomial of 0 is X at every level
        return Poly::monomial(tw, level, tw.one(), 1);
    std::vector<FieldElem> conj{x};
    FieldElem y = tw.frobenius(x, level);
    while (y != x) {
        conj.push_back(y);
        y = tw.frobenius(y, level);
    }
    Poly out = Poly::one(tw, Level::fq4);
    for (FieldElem z : conj)
        out = out * Poly(tw, Level::fq4, {-z, tw.one()});
    // The orbit product has coefficients fixed by Frobenius, hence in the
    // requested level; retagging below re-runs the membership checks.
    Poly tagged(tw, level, out.coeffs());
    internal_check(tagged.promoted(Level::fq4).eval(x).is_zero(),
                   "minimal polynomial does not vanish at x");
    return tagged;
}

std::vector<FieldElem> roots_of_xn_minus_lambda(const FieldTower& tw, uint64_t r) {
    auto [delta, lambda] = tw.delta_lambda(r);
    uint64_t n = tw.q2() + 1;
    std::vector<FieldElem> roots;
    roots.reserve(n);
    for (uint64_t j = 0; j < n; ++j)
        roots.push_back(tw.pow(delta, static_cast<int64_t>(1 + r * j)));
    Poly prod = Poly::one(tw, Level::fq4);
    for (FieldElem z : roots)
        prod = prod * Poly(tw, Level::fq4, {-z, tw.one()});
    internal_check(prod == Poly::x_pow_minus(tw, Level::fq4, n, lambda),
                   "linear factors do not reassemble x^n - lambda");
    return roots;
}

}  // namespace ccd
