#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ccd/error.hpp"

namespace ccd {

// Tower chain F_p < F_q < F_{q^2} < F_{q^4}, degrees {1, m, 2m, 4m} over F_p.
enum class Level : int { fp = 0, fq = 1, fq2 = 2, fq4 = 3 };

inline const char* level_name(Level lv) {
    switch (lv) {
        case Level::fp: return "fp";
        case Level::fq: return "fq";
        case Level::fq2: return "fq2";
        case Level::fq4: return "fq4";
    }
    return "?";
}

struct TowerDescriptor {
    uint32_t p = 0;
    uint32_t m = 0;
    std::vector<uint32_t> modulus;  // degree 4m, coefficients low-first, monic
};

class FieldTower;

// Value type: zero, or the discrete log of a power of beta. Cheap to copy.
// Elements of different towers never mix in arithmetic.
class FieldElem {
public:
    FieldElem() = default;  // detached zero; compatible with any tower

    bool is_zero() const { return lg_ == kZeroTag; }
    uint32_t log() const {
        require(!is_zero(), Errc::bad_argument, "discrete log of zero");
        return lg_;
    }
    const FieldTower* tower_ptr() const { return tw_; }

    uint64_t packed() const;  // base-p packed coefficient vector; 0 for zero

    FieldElem operator+(FieldElem o) const;
    FieldElem operator-(FieldElem o) const;
    FieldElem operator-() const;
    FieldElem operator*(FieldElem o) const;
    FieldElem operator/(FieldElem o) const;
    FieldElem inv() const;
    FieldElem pow(int64_t e) const;

    bool operator==(FieldElem o) const {
        if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
        return tw_ == o.tw_ && lg_ == o.lg_;
    }
    bool operator!=(FieldElem o) const { return !(*this == o); }

private:
    friend class FieldTower;
    static constexpr uint32_t kZeroTag = 0xffffffffu;
    FieldElem(const FieldTower* tw, uint32_t lg) : tw_(tw), lg_(lg) {}
    uint32_t raw() const { return lg_; }
    const FieldTower* tw_ = nullptr;
    uint32_t lg_ = kZeroTag;
};

// Discrete-log (Zech) representation of F_{q^4} and its subfield chain.
// One exp/log/Zech table triple covers the whole tower; the modulus is the
// lexicographically smallest primitive polynomial of degree 4m over F_p
// (coefficients compared low-to-high degree), so towers are reproducible.
class FieldTower {
public:
    static constexpr uint64_t kDefaultCap = uint64_t(1) << 27;
    static constexpr uint32_t kLogZero = 0xffffffffu;  // zero tag in log space

    FieldTower(uint32_t p, uint32_t m, uint64_t cap = kDefaultCap);
    static FieldTower from_q(uint64_t q, uint64_t cap = kDefaultCap);
    // (p, m) with q = p^m; throws NotPrime when q is not a prime power.
    static std::pair<uint32_t, uint32_t> split_prime_power(uint64_t q);

    FieldTower(const FieldTower&) = delete;
    FieldTower& operator=(const FieldTower&) = delete;

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t q() const { return q_; }
    uint64_t q2() const { return q2_; }
    uint64_t q4() const { return q4_; }
    uint64_t order() const { return order_; }  // q^4 - 1
    const TowerDescriptor& descriptor() const { return desc_; }

    FieldElem zero() const { return FieldElem(this, kLogZero); }
    FieldElem one() const { return FieldElem(this, 0); }
    FieldElem beta() const { return FieldElem(this, 1 % order_); }
    FieldElem minus_one() const { return FieldElem(this, log_minus_one_); }
    FieldElem from_log(uint64_t e) const { return FieldElem(this, static_cast<uint32_t>(e % order_)); }
    FieldElem from_packed(uint64_t v) const;
    FieldElem from_int(uint64_t c) const;  // prime-field value c mod p
    FieldElem element(uint32_t log_or_zero) const { return FieldElem(this, log_or_zero); }

    // Raw log-space kernel API for bulk enumeration. Arguments and results
    // are logs in [0, order) or kLogZero.
    uint32_t add_log(uint32_t a, uint32_t b) const {
        if (a == kLogZero) return b;
        if (b == kLogZero) return a;
        uint32_t d = b >= a ? b - a : b + static_cast<uint32_t>(order_) - a;
        uint32_t z = zech_[d];
        if (z == kLogZero) return kLogZero;
        uint32_t s = a + z;
        if (s >= order_) s -= static_cast<uint32_t>(order_);
        return s;
    }
    uint32_t mul_log(uint32_t a, uint32_t b) const {
        if (a == kLogZero || b == kLogZero) return kLogZero;
        uint32_t s = a + b;
        if (s >= order_) s -= static_cast<uint32_t>(order_);
        return s;
    }
    uint32_t neg_log(uint32_t a) const {
        return a == kLogZero ? kLogZero : mul_log(a, log_minus_one_);
    }
    uint32_t zech(uint32_t i) const { return zech_[i]; }
    uint32_t log_minus_one() const { return log_minus_one_; }
    uint32_t packed_of_log(uint32_t lg) const { return lg == kLogZero ? 0 : exp_[lg]; }
    bool trace_to_fq2_is_zero(uint32_t lg) const { return lg == kLogZero || tr2z_[lg] != 0; }

    // Subfield levels and membership: x in F_s <=> (q^4-1)/(s-1) divides log x.
    uint32_t level_degree(Level lv) const {
        int i = static_cast<int>(lv);
        return i == 0 ? 1 : m_ << (i - 1);
    }
    uint64_t level_size(Level lv) const { return level_size_[static_cast<int>(lv)]; }
    uint64_t level_stride(Level lv) const { return level_stride_[static_cast<int>(lv)]; }
    bool contains(FieldElem x, Level lv) const {
        if (x.is_zero()) return true;
        check_same(x);
        return x.log() % level_stride(lv) == 0;
    }

    FieldElem add(FieldElem x, FieldElem y) const;
    FieldElem sub(FieldElem x, FieldElem y) const;
    FieldElem neg(FieldElem x) const;
    FieldElem mul(FieldElem x, FieldElem y) const;
    FieldElem div(FieldElem x, FieldElem y) const;
    FieldElem inv(FieldElem x) const;
    FieldElem pow(FieldElem x, int64_t e) const;
    FieldElem frobenius(FieldElem x, Level base, uint32_t times = 1) const;  // x^(|base|^times)

    // Trace from the upper level onto the lower one (both in the chain,
    // lower <= upper); result membership in the lower level is asserted.
    FieldElem trace(FieldElem x, Level upper, Level lower) const;

    // All elements of multiplicative order dividing d, as consecutive powers
    // of beta^((q^4-1)/d); d must divide q^4 - 1.
    std::vector<FieldElem> unit_circle(uint64_t d) const;

    // delta = beta^((q^2-1)/r), lambda = delta^n with n = q^2 + 1.
    // Asserts ord(delta) = r*n, ord(lambda) = r, lambda in F_{q^2}.
    std::pair<FieldElem, FieldElem> delta_lambda(uint64_t r) const;

    uint64_t multiplicative_order(FieldElem x) const;

    void check_same(FieldElem x) const {
        require(x.tw_ == nullptr || x.tw_ == this, Errc::tower_mismatch,
                "element belongs to a different tower");
    }

private:
    void build_tables();

    uint32_t p_ = 0, m_ = 0;
    uint64_t q_ = 0, q2_ = 0, q4_ = 0, order_ = 0;
    uint64_t level_size_[4] = {0, 0, 0, 0};
    uint64_t level_stride_[4] = {0, 0, 0, 0};
    uint32_t log_minus_one_ = 0;
    TowerDescriptor desc_;
    std::vector<uint32_t> exp_;   // log -> packed representation
    std::vector<uint32_t> log_;   // packed -> log (index 0 unused)
    std::vector<uint32_t> zech_;  // i -> log(1 + beta^i), kLogZero when zero
    std::vector<uint8_t> tr2z_;   // i -> Tr_{q^4/q^2}(beta^i) == 0
};

inline uint64_t FieldElem::packed() const {
    if (is_zero()) return 0;
    return tw_->packed_of_log(lg_);
}
inline FieldElem FieldElem::operator+(FieldElem o) const {
    const FieldTower* t = tw_ ? tw_ : o.tw_;
    return t ? t->add(*this, o) : FieldElem();
}
inline FieldElem FieldElem::operator-(FieldElem o) const {
    const FieldTower* t = tw_ ? tw_ : o.tw_;
    return t ? t->sub(*this, o) : FieldElem();
}
inline FieldElem FieldElem::operator-() const { return tw_ ? tw_->neg(*this) : *this; }
inline FieldElem FieldElem::operator*(FieldElem o) const {
    const FieldTower* t = tw_ ? tw_ : o.tw_;
    return t ? t->mul(*this, o) : FieldElem();
}
inline FieldElem FieldElem::operator/(FieldElem o) const {
    const FieldTower* t = tw_ ? tw_ : o.tw_;
    require(t != nullptr, Errc::division_by_zero, "division by zero");
    return t->div(*this, o);
}
inline FieldElem FieldElem::inv() const {
    require(tw_ != nullptr, Errc::division_by_zero, "inverse of zero");
    return tw_->inv(*this);
}
inline FieldElem FieldElem::pow(int64_t e) const {
    require(tw_ != nullptr || e > 0, Errc::bad_argument, "power of detached zero");
    return tw_ ? tw_->pow(*this, e) : *this;
}

}  // namespace ccd
