#pragma once

#include <cstdint>
#include <vector>

#include "ccd/bigint.hpp"
#include "ccd/constacyclic.hpp"

namespace ccd {

struct IntersectionDim {
    uint64_t explicit_dim = 0;    // rank computation on stacked generators
    bool formula_applicable = false;  // shift constants differ
    uint64_t formula_dim = 0;     // 0 when k1 + k2 <= n, else k1 + k2 - n
};

// dim(C1 ∩ C2) for two codes of the same length over the same tower. The
// closed form applies only when the shift constants differ; the explicit
// rank route is always computed, and the two are asserted equal whenever the
// closed form applies.
IntersectionDim intersection_dimension(const ConstacyclicCode& c1, const ConstacyclicCode& c2);

struct EaqeccParams {
    uint64_t n = 0;
    uint64_t k_logical = 0;
    uint64_t d = 0;
    uint64_t c = 0;  // pre-shared entanglement pairs
    uint64_t alphabet = 0;
    bool maximal_entanglement = false;  // c == n - k_logical
    bool shift_product_hypothesis = false;  // lambda1 * lambda2 != 1
    Rational net_rate;  // (k_logical - c) / n
};

// Entanglement-assisted parameters [[n, k1 + k2 - n + c, min(d1, d2); c]]
// from a pair of codes, with c = n - k1 - dim(C1^perp ∩ C2).
EaqeccParams eaqecc_from_pair(const ConstacyclicCode& c1, uint64_t d1,
                              const ConstacyclicCode& c2, uint64_t d2);

struct LrcReport {
    uint64_t n = 0, k = 0, d = 0;
    uint64_t locality = 0;            // dual_distance - 1
    uint64_t singleton_like_bound = 0;  // n - k - ceil(k/locality) + 2
    bool distance_optimal = false;      // d meets the bound
    BigInt cm_bound = 0;                // Cadambe-Mazumdar dimension bound
    bool dimension_optimal = false;     // k meets the bound
};

// Locality and optimality report for an [n, k, d] code whose dual distance
// exceeds 2: every coordinate is recoverable from dual_distance - 2 others.
LrcReport lrc_report(uint64_t n, uint64_t k, uint64_t d, uint64_t dual_distance,
                     uint64_t alphabet);

}  // namespace ccd
