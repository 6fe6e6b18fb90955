#pragma once

#include <cstdint>
#include <vector>

#include "ccd/bigint.hpp"
#include "ccd/constacyclic.hpp"
#include "ccd/wdist.hpp"

namespace ccd {

// Incidence structure extracted from the supports of fixed-weight codewords.
struct Design {
    uint64_t v = 0;      // point count
    uint64_t kappa = 0;  // block size
    std::vector<std::vector<uint32_t>> blocks;  // distinct supports, ascending indices,
                                                // sorted lexicographically
    uint64_t raw_words = 0;          // codewords of the target weight
    uint64_t scalar_class_size = 0;  // alphabet - 1
    // Whether every block is hit by exactly scalar_class_size codewords, i.e.
    // the supports carry a uniform multiplicity.
    bool multiplicity_uniform = false;

    // Filled in by verify_t_design on success.
    unsigned t = 0;
    BigInt eta = 0;

    BigInt block_count() const { return BigInt(blocks.size()); }
};

// Supports of all weight-w codewords of a family code, via full message
// enumeration (same budget semantics as the weight distribution).
Design supports_of_weight(const ConstacyclicCode& code, unsigned w,
                          uint64_t budget = kDefaultBudget, unsigned workers = 0);

// Supports of the weight-w entries of a canonical low-weight list.
Design supports_of_weight(const std::vector<DualWord>& words, unsigned w, uint64_t n,
                          uint64_t alphabet);

// Supports of all weight-w words in the row space of `basis` with message
// coefficients restricted to the given level.
Design supports_of_weight_span(const FieldTower& tw, const Matrix& basis, Level coeff_level,
                               unsigned w, uint64_t budget = kDefaultBudget,
                               unsigned workers = 0);

struct DesignCheck {
    bool is_design = false;
    BigInt eta = 0;  // common covering count when is_design
    // First t-subset (in colex order) whose covering count differs from the
    // reference subset {0, .., t-1}; empty when is_design.
    std::vector<uint32_t> witness;
    BigInt witness_count = 0;
};

// Exhaustively checks that every t-subset of points lies in the same number
// of blocks. On success stamps d.t and d.eta. Refuses with BudgetExceeded if
// C(v, t) exceeds the budget.
DesignCheck verify_t_design(Design& d, unsigned t, uint64_t budget = kDefaultBudget,
                            unsigned workers = 0);

// C(v, t) * eta == C(kappa, t) * b, the double count of (t-subset, block)
// incidences.
bool design_identity_check(uint64_t v, unsigned t, uint64_t kappa, const BigInt& eta,
                           const BigInt& b);

struct AssmusMattsonReport {
    bool applies = false;        // hypothesis of the theorem holds for this t
    uint64_t d = 0;              // primal minimum distance
    uint64_t d_dual = 0;         // dual minimum distance
    uint64_t weights_in_range = 0;  // nonzero primal weights in [1, n-t]
    uint64_t allowed = 0;           // d_dual - t
};

// Literal hypothesis check of the Assmus-Mattson theorem for the given t:
// 1 <= t < min(d, d_dual) and at most d_dual - t nonzero primal weights in
// [1, n-t].
AssmusMattsonReport assmus_mattson_check(const WeightDistribution& primal,
                                         const WeightDistribution& dual, unsigned t);

// Design on the same points whose blocks are the complements of d's blocks.
Design complementary_design(const Design& d);

// Whether d is a Steiner system S(3, kappa, v): a 3-design with eta == 1.
bool steiner_check(Design& d, uint64_t budget = kDefaultBudget, unsigned workers = 0);

}  // namespace ccd
