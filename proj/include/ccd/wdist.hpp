#pragma once

#include <cstdint>
#include <vector>

#include "ccd/bigint.hpp"
#include "ccd/constacyclic.hpp"

namespace ccd {

// Ceiling on the number of coordinate evaluations a bulk enumeration may
// spend before it must refuse with BudgetExceeded.
inline constexpr uint64_t kDefaultBudget = uint64_t(1) << 32;

struct WeightDistribution {
    uint64_t n = 0;       // block length
    uint64_t k = 0;       // dimension over the code alphabet
    uint64_t alphabet = 0;  // alphabet size
    std::vector<BigInt> counts;  // counts[w] = number of codewords of weight w

    // Throws on a malformed distribution: counts must have n+1 entries,
    // counts[0] == 1, and the total must equal alphabet^k.
    void validate() const;

    BigInt total() const;
    // Smallest positive weight with a nonzero count; throws ZeroCode if none.
    uint64_t min_distance() const;
    // Number of nonzero weights w in [1, hi].
    uint64_t nonzero_weights_up_to(uint64_t hi) const;
};

// Full enumeration of the message space. Family codes go through the trace
// kernel (alphabet^4 messages); custom codes walk the span of the generator
// matrix. Refuses with BudgetExceeded if messages * n would exceed `budget`.
// `workers` = 0 picks the hardware concurrency; the result is identical for
// every worker count.
WeightDistribution weight_distribution_exhaustive(const ConstacyclicCode& code,
                                                  uint64_t budget = kDefaultBudget,
                                                  unsigned workers = 0);

// Closed-form distribution of the four-dimensional family codes. Defined for
// prime powers q > 2 (the q = 2 code is degenerate and has its own shape);
// both families share one distribution.
WeightDistribution weight_distribution_analytic(uint64_t q);

// MacWilliams transform: exact dual distribution of a code with the given
// distribution. Every division by alphabet^k is checked to be exact.
WeightDistribution macwilliams_dual(const WeightDistribution& wd);

// Number of dual codewords of weight 4, by the closed form
// q^2 (q-2) (q^2+1) (q^2-1)^2 / 24. Requires q > 2.
BigInt a4_dual_closed_form(uint64_t q);

struct PlessMomentReport {
    bool holds = false;           // all four moments match
    std::vector<BigInt> moments;  // power moments S_0..S_3 of the distribution
    std::vector<BigInt> expected;
};

// First four Pless power moments of a distribution with k = 4 and n =
// alphabet + 1, under the hypothesis that the dual distribution vanishes at
// weights 1..dual_zero_prefix. Only dual_zero_prefix == 3 is supported.
PlessMomentReport pless_moment_check(const WeightDistribution& wd, unsigned dual_zero_prefix);

struct DualWord {
    std::vector<uint32_t> support;  // ascending coordinate indices
    std::vector<FieldElem> word;    // full-length codeword, first support entry scaled to 1
};

// All dual codewords of weight <= wmax, one canonical representative per
// scalar class (first nonzero coordinate scaled to 1). Entries are sorted by
// (weight, support in colex order). Requires wmax <= 5.
std::vector<DualWord> low_weight_dual_codewords(const ConstacyclicCode& code, unsigned wmax,
                                                uint64_t budget = kDefaultBudget);

// Number of dual codewords of exactly weight w represented by the list:
// canonical entries of that weight times (alphabet - 1).
BigInt dual_word_count(const std::vector<DualWord>& words, unsigned w, uint64_t alphabet);

// Whether [n, k, d] over the given alphabet satisfies the Griesmer bound.
bool griesmer_check(uint64_t n, uint64_t k, uint64_t d, uint64_t alphabet);

}  // namespace ccd
