#pragma once

#include <cstdint>
#include <vector>

#include "ccd/gf.hpp"
#include "ccd/linalg.hpp"
#include "ccd/polyring.hpp"

namespace ccd {

// Family A is the pair of nonzero exponents {1, q^2+q+1}; family B is
// {1, q^2-q+1}; `custom` codes carry an arbitrary conjugation-closed set.
enum class Family { A, B, custom };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::custom: return "custom";
    }
    return "?";
}

// lambda-constacyclic code of length n = q^2 + 1 over F_{q^2}, presented by
// its generator/check pair g*h = x^n - lambda and the exponent set of the
// roots of h among the powers of delta.
struct ConstacyclicCode {
    const FieldTower* tower;
    Family family;
    uint64_t r;  // multiplicative order of lambda
    uint64_t n;
    uint64_t k;  // dimension = deg h
    FieldElem delta, lambda;
    std::vector<uint64_t> nonzero_exponents;  // sorted residues mod rn
    Poly g, h;                                // over level fq2

    uint64_t s_exponent() const;  // q^2+q+1 (A) or q^2-q+1 (B)
};

int nu2(uint64_t x);  // 2-adic valuation

// Divisors r of q+1 (family A) or q-1 (family B) with matching 2-adic
// valuation, ascending.
std::vector<uint64_t> admissible_r(uint64_t q, Family fam);

ConstacyclicCode build_code(const FieldTower& tw, uint64_t r, Family fam);

// Arbitrary constacyclic code for the same length: nonzeros must be root
// exponents of x^n - lambda (== 1 mod r) closed under multiplication by q^2.
ConstacyclicCode build_custom(const FieldTower& tw, uint64_t r,
                              std::vector<uint64_t> nonzeros);

// lambda^{-1}-constacyclic dual, generated by h0^{-1} x^k h(1/x);
// orthogonality of the two generator matrices is asserted.
ConstacyclicCode dual_code(const ConstacyclicCode& c);

// c(a,b)_i = Tr_{q^4/q^2}(a delta^{-i} + b delta^{-s i}), i = 0..q^2.
std::vector<FieldElem> trace_codeword(const ConstacyclicCode& c, FieldElem a, FieldElem b);

// Family codes: rows are the trace codewords of the four basis messages
// (1,0), (beta,0), (0,1), (0,beta). Custom/dual codes: rows are x^i g(x).
// Rank k is asserted either way.
Matrix generator_matrix(const ConstacyclicCode& c);

bool is_codeword(const ConstacyclicCode& c, const std::vector<FieldElem>& word);

// (lambda * w_{n-1}, w_0, ..., w_{n-2})
std::vector<FieldElem> constacyclic_shift(const ConstacyclicCode& c,
                                          const std::vector<FieldElem>& word);

// Log-space evaluator for bulk enumeration of the trace representation;
// coordinates are tested for zero without materializing field elements.
struct TraceKernel {
    const FieldTower* tw;
    uint32_t n;
    std::vector<uint32_t> da, db;  // logs of delta^{-i} and delta^{-s i}

    explicit TraceKernel(const ConstacyclicCode& code);

    bool coord_is_zero(uint32_t la, uint32_t lb, uint32_t i) const {
        uint32_t sum = tw->add_log(tw->mul_log(la, da[i]), tw->mul_log(lb, db[i]));
        return tw->trace_to_fq2_is_zero(sum);
    }
};

}  // namespace ccd
