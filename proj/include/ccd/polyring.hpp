#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ccd/gf.hpp"

namespace ccd {

// Polynomial over one tower level, coefficients low degree first with no
// trailing zeros (the zero polynomial has an empty coefficient vector).
// Coefficients are membership-checked against the declared level; levels
// are promoted explicitly, never implicitly.
class Poly {
public:
    Poly(const FieldTower& tw, Level lv) : tw_(&tw), lv_(lv) {}
    Poly(const FieldTower& tw, Level lv, std::vector<FieldElem> coeffs);

    static Poly zero(const FieldTower& tw, Level lv) { return Poly(tw, lv); }
    static Poly one(const FieldTower& tw, Level lv) { return constant(tw, lv, tw.one()); }
    static Poly constant(const FieldTower& tw, Level lv, FieldElem c);
    static Poly monomial(const FieldTower& tw, Level lv, FieldElem c, size_t degree);
    // x^n - c
    static Poly x_pow_minus(const FieldTower& tw, Level lv, uint64_t n, FieldElem c);

    const FieldTower& tower() const { return *tw_; }
    Level level() const { return lv_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == tw_->one(); }
    FieldElem coeff(size_t i) const { return i < c_.size() ? c_[i] : tw_->zero(); }
    FieldElem leading() const;
    const std::vector<FieldElem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(FieldElem s) const;
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }
    Poly monic() const;
    Poly promoted(Level lv) const;  // retag at a higher chain level
    FieldElem eval(FieldElem x) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // "[c0,c1,...,ck]@level" with packed base-p integer coefficients.
    std::string str() const;

private:
    void trim();
    void check_compatible(const Poly& o) const;

    const FieldTower* tw_;
    Level lv_;
    std::vector<FieldElem> c_;
};

Poly poly_gcd(Poly a, Poly b);  // monic gcd; gcd(f, 0) = monic(f)

struct CyclotomicCoset {
    uint64_t representative = 0;  // smallest member
    uint64_t base = 0;
    uint64_t modulus = 0;
    std::vector<uint64_t> members;  // sorted
};

// Orbit of h under multiplication by base modulo N; h may be given as a
// negative residue. Requires gcd(base, N) = 1.
CyclotomicCoset cyclotomic_coset(int64_t h, uint64_t base, uint64_t N);

// Monic minimal polynomial of x over the given level: the product of
// (X - x^(size^j)) over the distinct conjugates.
Poly minimal_polynomial(FieldElem x, Level level);

// The n = q^2+1 roots delta^(1+rj) of x^n - lambda in F_{q^4}; the linear
// factors are multiplied back together and checked against x^n - lambda.
std::vector<FieldElem> roots_of_xn_minus_lambda(const FieldTower& tw, uint64_t r);

}  // namespace ccd
