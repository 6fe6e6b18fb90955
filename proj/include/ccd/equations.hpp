#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ccd/gf.hpp"
#include "ccd/wdist.hpp"

namespace ccd {

// Histogram of root counts of a parameterised equation over its coefficient
// space, with one colex-least witness pair per observed count.
struct RootCountReport {
    uint64_t q = 0;          // base field size
    uint64_t k = 0;          // Frobenius exponent parameter
    uint64_t pairs = 0;      // coefficient pairs scanned
    std::map<uint64_t, uint64_t> histogram;  // root count -> number of pairs
    // count -> (log a, log b) of the first witness; -1 encodes the zero
    // coefficient.
    std::map<uint64_t, std::pair<int64_t, int64_t>> witnesses;
    std::vector<uint64_t> admissible;  // admitted root counts
    bool all_admissible = false;
};

// Root counts of x^(p^k+1) + a x + b over F_q, for all (a, b) in (F_q^*)^2,
// roots counted in F_q. Admissible counts: 0, 1, 2, p^gcd(k,m) + 1.
RootCountReport bluher_root_histogram(const FieldTower& tw, uint64_t k,
                                      uint64_t budget = kDefaultBudget, unsigned workers = 0);

// Root counts of b x^(p^k+1) + a x^(p^k) + a^q x + b^q on the unit circle
// U_{q+1} of F_{q^2}, for all (a, b) in F_{q^2}^2 minus the origin.
RootCountReport unit_circle_root_histogram(const FieldTower& tw, uint64_t k,
                                           uint64_t budget = kDefaultBudget,
                                           unsigned workers = 0);

struct ConjectureReport {
    uint64_t q = 0;          // 3^m
    uint64_t max_count = 0;  // largest root count observed
    uint64_t pairs_at_max = 0;
    // A pair predicted to attain four roots: a = w^((q+1)/2) for a generator
    // w of F_{q^2}, b = 0.
    int64_t predicted_a_log = 0;
    int64_t predicted_b_log = -1;
    uint64_t predicted_count = 0;
    bool affirmed = false;  // max_count == 4 and the predicted pair attains it
    RootCountReport scan;
};

// Exhaustive check of the four-root conjecture for p = 3, k = 2 over
// F_{3^m}^2 with m odd.
ConjectureReport conjecture_check(uint64_t m, uint64_t budget = kDefaultBudget,
                                  unsigned workers = 0);

// Structural check of the power maps x -> x^(q+1) and x -> x^(q-1) from
// U_{rn} onto U_n: every fiber is a multiplicative translate of the shift
// root's powers and meets every coset of the base point set exactly once.
// `exponent` must be q+1 (family A conditions on r) or q-1 (family B).
bool preimage_structure_check(const FieldTower& tw, uint64_t r, uint64_t exponent);

}  // namespace ccd
