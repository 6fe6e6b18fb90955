#include "ccd/quantum_lrc.hpp"

#include <algorithm>

#include "ccd/error.hpp"
#include "ccd/linalg.hpp"

namespace ccd {

IntersectionDim intersection_dimension(const ConstacyclicCode& c1, const ConstacyclicCode& c2) {
    require(c1.tower == c2.tower, Errc::tower_mismatch, "codes live in different towers");
    require(c1.n == c2.n, Errc::length_mismatch, "codes have different lengths");

    Matrix stacked = generator_matrix(c1);
    Matrix g2 = generator_matrix(c2);
    stacked.insert(stacked.end(), g2.begin(), g2.end());

    IntersectionDim res;
    res.explicit_dim = c1.k + c2.k - rank(stacked);
    res.formula_applicable = c1.lambda != c2.lambda;
    if (res.formula_applicable) {
        res.formula_dim = c1.k + c2.k <= c1.n ? 0 : c1.k + c2.k - c1.n;
        internal_check(res.explicit_dim == res.formula_dim,
                       "intersection dimension must match the closed form");
    }
    return res;
}

EaqeccParams eaqecc_from_pair(const ConstacyclicCode& c1, uint64_t d1,
                              const ConstacyclicCode& c2, uint64_t d2) {
    require(c1.tower == c2.tower, Errc::tower_mismatch, "codes live in different towers");
    require(c1.n == c2.n, Errc::length_mismatch, "codes have different lengths");
    const FieldTower& tw = *c1.tower;

    ConstacyclicCode c1_dual = dual_code(c1);
    IntersectionDim inter = intersection_dimension(c1_dual, c2);

    EaqeccParams ea;
    ea.n = c1.n;
    ea.c = c1.n - c1.k - inter.explicit_dim;
    ea.k_logical = c2.k - inter.explicit_dim;  // k1 + k2 - n + c
    ea.d = std::min(d1, d2);
    ea.alphabet = tw.q2();
    ea.maximal_entanglement = ea.c == ea.n - ea.k_logical;
    ea.shift_product_hypothesis = c1.lambda * c2.lambda != tw.one();
    ea.net_rate = Rational{BigInt(ea.k_logical) - BigInt(ea.c), BigInt(ea.n)};
    return ea;
}

LrcReport lrc_report(uint64_t n, uint64_t k, uint64_t d, uint64_t dual_distance,
                     uint64_t alphabet) {
    require(dual_distance > 2, Errc::locality_undefined,
            "locality needs a dual distance greater than 2");
    require(k >= 1 && n >= k, Errc::bad_argument, "malformed code parameters");
    (void)alphabet;

    LrcReport rep;
    rep.n = n;
    rep.k = k;
    rep.d = d;
    rep.locality = dual_distance - 1;

    int64_t ceil_k = static_cast<int64_t>((k + rep.locality - 1) / rep.locality);
    int64_t sl = static_cast<int64_t>(n) - static_cast<int64_t>(k) - ceil_k + 2;
    require(sl >= 0, Errc::bad_argument, "Singleton-like bound degenerates");
    rep.singleton_like_bound = static_cast<uint64_t>(sl);
    rep.distance_optimal = d == rep.singleton_like_bound;

    // Cadambe-Mazumdar: k <= min_t { t*locality + k_opt(n - t(locality+1), d) }
    // with k_opt replaced by its Singleton upper bound and t restricted to
    // residual lengths >= 1.
    bool any = false;
    BigInt best = 0;
    for (uint64_t t = 1; n >= t * (rep.locality + 1) + 1; ++t) {
        int64_t residual = static_cast<int64_t>(n - t * (rep.locality + 1));
        int64_t k_opt = std::max<int64_t>(0, residual - static_cast<int64_t>(d) + 1);
        BigInt term = BigInt(t) * rep.locality + k_opt;
        if (!any || term < best) {
            best = term;
            any = true;
        }
    }
    require(any, Errc::bad_argument, "no admissible split in the dimension bound");
    rep.cm_bound = best;
    rep.dimension_optimal = BigInt(k) == rep.cm_bound;
    return rep;
}

}  // namespace ccd
