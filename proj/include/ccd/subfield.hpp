#pragma once

#include <cstdint>
#include <vector>

#include "ccd/bigint.hpp"
#include "ccd/constacyclic.hpp"
#include "ccd/wdist.hpp"

namespace ccd {

// Subcode of words with all coordinates in the base subfield, as a code over
// that subfield.
struct SubfieldCode {
    const FieldTower* tower = nullptr;
    uint64_t n = 0;
    uint64_t k = 0;          // dimension over F_q
    Family parent_family = Family::custom;
    uint64_t parent_r = 0;
    Matrix basis;            // k rows over F_q, reduced row echelon form
};

// Distinguished generator of F_{q^2} over F_q used to split coordinates into
// components: the smallest power of the canonical F_{q^2} generator that
// lies outside F_q.
FieldElem canonical_theta(const FieldTower& tw);

// The two components of x = x0 + x1*theta with x0, x1 in F_q.
std::pair<FieldElem, FieldElem> theta_components(const FieldTower& tw, const FieldElem& x);

// F_q-subfield subcode computed directly: kernel of the theta-component
// condition on the F_q-span of the parent generators.
SubfieldCode subfield_subcode_direct(const ConstacyclicCode& code);

// Recomputes the subcode through the dual route (componentwise trace of the
// dual, then its dual) and compares row spaces with the direct route.
bool delsarte_cross_check(const ConstacyclicCode& code);

// Closed-form weight enumerator of the ovoid subcode: 1 + (q^2-q)(q^2+1)
// z^(q^2-q) + (q-1)(q^2+1) z^(q^2).
WeightDistribution ovoid_enumerator_analytic(uint64_t q);

struct OvoidReport {
    WeightDistribution wd;         // exhaustive distribution of the subcode
    bool matches_analytic = false;
    uint64_t dual_distance = 0;    // via the MacWilliams transform
    bool dual_distance_is_4 = false;
};

// Exhaustive check that a four-dimensional subfield subcode has the ovoid
// enumerator and a dual at distance 4.
OvoidReport ovoid_check(const SubfieldCode& sub, uint64_t budget = kDefaultBudget,
                        unsigned workers = 0);

struct TrivialityReport {
    uint64_t k_ord = 0;        // multiplicative order of q modulo r
    uint64_t t2_size = 0;      // size of the united exponent set
    Rational threshold;        // n / k_ord
    bool trivial_predicted = false;
    uint64_t direct_dimension = 0;
    bool consistent = false;   // prediction agrees with the direct computation
};

// Size criterion for triviality of the subfield subcode when the shift
// constant lies outside F_q. Throws InvalidRegime otherwise.
TrivialityReport t2_triviality_criterion(const ConstacyclicCode& code);

// Triviality argument for the remaining family-A case (shift constant -1):
// every candidate dual-zero exponent has a conjugacy coset escaping the
// four-element zero set, so no nonzero subfield word exists.
bool triviality_coset_argument(const ConstacyclicCode& code);

}  // namespace ccd
