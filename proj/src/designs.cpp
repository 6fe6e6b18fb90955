#include "ccd/designs.hpp"

#include <algorithm>
#include <utility>

#include "ccd/error.hpp"
#include "ccd/span_scan.hpp"

namespace ccd {

namespace {

using Mask = std::pair<uint64_t, uint64_t>;

std::vector<uint32_t> mask_to_indices(const Mask& m) {
    std::vector<uint32_t> idx;
    for (uint32_t i = 0; i < 64; ++i)
        if (m.first >> i & 1) idx.push_back(i);
    for (uint32_t i = 0; i < 64; ++i)
        if (m.second >> i & 1) idx.push_back(64 + i);
    return idx;
}

Design finalize_supports(uint64_t n, uint64_t alphabet, unsigned w,
                         std::vector<std::vector<Mask>>& hits) {
    std::vector<Mask> all;
    size_t total = 0;
    for (const auto& h : hits) total += h.size();
    all.reserve(total);
    for (auto& h : hits) all.insert(all.end(), h.begin(), h.end());
    std::sort(all.begin(), all.end());

    Design d;
    d.v = n;
    d.kappa = w;
    d.scalar_class_size = alphabet - 1;
    d.raw_words = all.size();
    d.multiplicity_uniform = true;
    for (size_t i = 0; i < all.size();) {
        size_t j = i;
        while (j < all.size() && all[j] == all[i]) ++j;
        if (j - i != alphabet - 1) d.multiplicity_uniform = false;
        d.blocks.push_back(mask_to_indices(all[i]));
        i = j;
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

}  // namespace

Design supports_of_weight(const ConstacyclicCode& code, unsigned w, uint64_t budget,
                          unsigned workers) {
    const FieldTower& tw = *code.tower;
    require(code.n <= 128, Errc::cap_exceeded, "support masks require length <= 128");
    uint64_t Q = tw.q2();
    unsigned nw = resolve_workers(workers);
    BigInt messages = code.family == Family::custom ? big_pow(Q, code.k)
                                                    : big_pow(tw.order() + 1, 2);
    require(messages * code.n <= budget, Errc::budget_exceeded,
            "message space exceeds the evaluation budget");

    std::vector<std::vector<Mask>> hits(nw);
    auto sink = [&](unsigned worker, uint32_t wt, uint64_t mlo, uint64_t mhi) {
        if (wt == w) hits[worker].emplace_back(mlo, mhi);
    };
    if (code.family == Family::custom) {
        Matrix gen = generator_matrix(code);
        detail::scan_span<true>(tw, detail::rows_to_logs(gen),
                                detail::level_alphabet(tw, Level::fq2), nw, sink);
    } else {
        detail::scan_trace_messages<true>(code, nw, sink);
    }
    return finalize_supports(code.n, Q, w, hits);
}

Design supports_of_weight(const std::vector<DualWord>& words, unsigned w, uint64_t n,
                          uint64_t alphabet) {
    require(n <= 128, Errc::cap_exceeded, "support masks require length <= 128");
    std::vector<std::vector<Mask>> hits(1);
    for (const DualWord& dw : words) {
        if (dw.support.size() != w) continue;
        Mask m{0, 0};
        for (uint32_t i : dw.support) {
            if (i < 64)
                m.first |= uint64_t(1) << i;
            else
                m.second |= uint64_t(1) << (i - 64);
        }
        // one canonical word stands for its whole scalar class
        for (uint64_t t = 0; t + 1 < alphabet; ++t) hits[0].push_back(m);
    }
    return finalize_supports(n, alphabet, w, hits);
}

Design supports_of_weight_span(const FieldTower& tw, const Matrix& basis, Level coeff_level,
                               unsigned w, uint64_t budget, unsigned workers) {
    require(!basis.empty(), Errc::zero_code, "support scan needs a nonempty basis");
    uint64_t n = basis[0].size();
    require(n <= 128, Errc::cap_exceeded, "support masks require length <= 128");
    uint64_t Q = tw.level_size(coeff_level);
    unsigned nw = resolve_workers(workers);
    require(big_pow(Q, basis.size()) * n <= budget, Errc::budget_exceeded,
            "message space exceeds the evaluation budget");

    std::vector<std::vector<Mask>> hits(nw);
    auto sink = [&](unsigned worker, uint32_t wt, uint64_t mlo, uint64_t mhi) {
        if (wt == w) hits[worker].emplace_back(mlo, mhi);
    };
    detail::scan_span<true>(tw, detail::rows_to_logs(basis),
                            detail::level_alphabet(tw, coeff_level), nw, sink);
    return finalize_supports(n, Q, w, hits);
}

namespace {

// Advance a subset of [0, limit) one step in colex order.
bool next_colex_subset(std::vector<uint32_t>& s, uint32_t limit) {
    uint32_t w = static_cast<uint32_t>(s.size());
    for (uint32_t j = 0; j < w; ++j) {
        uint32_t cap = (j + 1 < w) ? s[j + 1] : limit;
        if (s[j] + 1 < cap) {
            ++s[j];
            for (uint32_t t = 0; t < j; ++t) s[t] = t;
            return true;
        }
    }
    return false;
}

struct LocalWitness {
    bool found = false;
    std::vector<uint32_t> subset;
    uint64_t count = 0;
};

// Scans every t-subset, partitioned over workers by the largest element so
// chunk order matches colex order; count_fn returns the number of blocks
// containing a subset.
template <class CountFn>
DesignCheck scan_subsets(uint64_t v, unsigned t, unsigned workers, CountFn&& count_fn) {
    std::vector<uint32_t> ref(t);
    for (unsigned j = 0; j < t; ++j) ref[j] = j;
    uint64_t ref_count = count_fn(ref);

    std::vector<LocalWitness> local(workers);
    parallel_chunks(v - (t - 1), workers, [&](unsigned w, uint64_t beg, uint64_t end) {
        std::vector<uint32_t> sub(t);
        for (uint64_t off = beg; off < end && !local[w].found; ++off) {
            uint32_t top = static_cast<uint32_t>(t - 1 + off);
            for (unsigned j = 0; j + 1 < t; ++j) sub[j] = j;
            sub[t - 1] = top;
            do {
                uint64_t c = count_fn(sub);
                if (c != ref_count) {
                    local[w].found = true;
                    local[w].subset = sub;
                    local[w].count = c;
                    break;
                }
            } while (next_colex_subset(sub, top) && sub[t - 1] == top);
        }
    });

    DesignCheck chk;
    for (const LocalWitness& lw : local) {
        if (lw.found) {
            chk.witness = lw.subset;
            chk.witness_count = lw.count;
            return chk;
        }
    }
    chk.is_design = true;
    chk.eta = ref_count;
    return chk;
}

}  // namespace

DesignCheck verify_t_design(Design& d, unsigned t, uint64_t budget, unsigned workers) {
    require(t >= 1, Errc::bad_argument, "design strength must be positive");
    require(d.v >= t && d.kappa >= t, Errc::bad_argument,
            "design is too small for the requested strength");
    require(binomial(d.v, t) <= budget, Errc::budget_exceeded,
            "t-subset space exceeds the budget");
    unsigned nw = resolve_workers(workers);

    DesignCheck chk;
    if (d.v <= 128) {
        std::vector<Mask> bm(d.blocks.size(), Mask{0, 0});
        for (size_t b = 0; b < d.blocks.size(); ++b)
            for (uint32_t i : d.blocks[b]) {
                if (i < 64)
                    bm[b].first |= uint64_t(1) << i;
                else
                    bm[b].second |= uint64_t(1) << (i - 64);
            }
        chk = scan_subsets(d.v, t, nw, [&](const std::vector<uint32_t>& sub) {
            Mask sm{0, 0};
            for (uint32_t i : sub) {
                if (i < 64)
                    sm.first |= uint64_t(1) << i;
                else
                    sm.second |= uint64_t(1) << (i - 64);
            }
            uint64_t c = 0;
            for (const Mask& b : bm)
                if ((b.first & sm.first) == sm.first && (b.second & sm.second) == sm.second) ++c;
            return c;
        });
    } else {
        chk = scan_subsets(d.v, t, nw, [&](const std::vector<uint32_t>& sub) {
            uint64_t c = 0;
            for (const auto& b : d.blocks)
                if (std::includes(b.begin(), b.end(), sub.begin(), sub.end())) ++c;
            return c;
        });
    }
    if (chk.is_design) {
        d.t = t;
        d.eta = chk.eta;
    }
    return chk;
}

bool design_identity_check(uint64_t v, unsigned t, uint64_t kappa, const BigInt& eta,
                           const BigInt& b) {
    return binomial(v, t) * eta == binomial(kappa, t) * b;
}

AssmusMattsonReport assmus_mattson_check(const WeightDistribution& primal,
                                         const WeightDistribution& dual, unsigned t) {
    require(primal.n == dual.n, Errc::length_mismatch, "primal and dual lengths differ");
    require(primal.alphabet == dual.alphabet, Errc::bad_argument, "alphabets differ");
    AssmusMattsonReport rep;
    rep.d = primal.min_distance();
    rep.d_dual = dual.min_distance();
    rep.weights_in_range = primal.nonzero_weights_up_to(primal.n - t);
    rep.allowed = rep.d_dual > t ? rep.d_dual - t : 0;
    rep.applies = t >= 1 && t < std::min(rep.d, rep.d_dual) &&
                  rep.weights_in_range <= rep.allowed;
    return rep;
}

Design complementary_design(const Design& d) {
    require(d.kappa <= d.v, Errc::bad_argument, "block size exceeds point count");
    Design c;
    c.v = d.v;
    c.kappa = d.v - d.kappa;
    c.blocks.reserve(d.blocks.size());
    for (const auto& b : d.blocks) {
        std::vector<uint32_t> comp;
        comp.reserve(c.kappa);
        size_t pos = 0;
        for (uint32_t i = 0; i < d.v; ++i) {
            if (pos < b.size() && b[pos] == i)
                ++pos;
            else
                comp.push_back(i);
        }
        c.blocks.push_back(std::move(comp));
    }
    std::sort(c.blocks.begin(), c.blocks.end());
    c.multiplicity_uniform = true;
    return c;
}

bool steiner_check(Design& d, uint64_t budget, unsigned workers) {
    if (d.blocks.empty()) return false;
    DesignCheck chk = verify_t_design(d, 3, budget, workers);
    return chk.is_design && chk.eta == 1;
}

}  // namespace ccd
