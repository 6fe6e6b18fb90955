#include "ccd/equations.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ccd/constacyclic.hpp"
#include "ccd/error.hpp"
#include "ccd/parallel.hpp"

namespace ccd {

namespace {

constexpr uint32_t kZ = FieldTower::kLogZero;

// log of x^e given log x, for x != 0.
inline uint32_t pow_log(uint32_t lx, uint64_t e, uint64_t order) {
    if (lx == kZ) return kZ;
    return static_cast<uint32_t>(lx * (e % order) % order);
}

uint64_t checked_prime_power(uint64_t p, uint64_t k) {
    uint64_t v = 1;
    for (uint64_t i = 0; i < k; ++i) {
        require(v <= (uint64_t(1) << 62) / p, Errc::bad_argument, "p^k overflows");
        v *= p;
    }
    return v;
}

std::vector<uint64_t> admissible_counts(uint64_t p, uint64_t k, uint64_t m) {
    uint64_t g = std::gcd(k, m);
    std::vector<uint64_t> adm = {0, 1, 2, checked_prime_power(p, g) + 1};
    std::sort(adm.begin(), adm.end());
    adm.erase(std::unique(adm.begin(), adm.end()), adm.end());
    return adm;
}

struct LocalScan {
    std::vector<uint64_t> hist;
    std::map<uint64_t, std::pair<int64_t, int64_t>> wit;

    void record(uint64_t count, int64_t la, int64_t lb) {
        ++hist[count];
        wit.emplace(count, std::make_pair(la, lb));  // keeps the first witness
    }
};

RootCountReport merge_scans(uint64_t q, uint64_t k, uint64_t pairs,
                            std::vector<LocalScan>& locals,
                            std::vector<uint64_t> admissible) {
    RootCountReport rep;
    rep.q = q;
    rep.k = k;
    rep.pairs = pairs;
    rep.admissible = std::move(admissible);
    for (const LocalScan& ls : locals) {
        for (uint64_t c = 0; c < ls.hist.size(); ++c)
            if (ls.hist[c]) rep.histogram[c] += ls.hist[c];
        for (const auto& [c, w] : ls.wit) rep.witnesses.emplace(c, w);
    }
    rep.all_admissible = true;
    for (const auto& [c, cnt] : rep.histogram) {
        (void)cnt;
        if (!std::binary_search(rep.admissible.begin(), rep.admissible.end(), c))
            rep.all_admissible = false;
    }
    uint64_t total = 0;
    for (const auto& [c, cnt] : rep.histogram) {
        (void)c;
        total += cnt;
    }
    internal_check(total == pairs, "root-count histogram must cover every pair");
    return rep;
}

}  // namespace

RootCountReport bluher_root_histogram(const FieldTower& tw, uint64_t k, uint64_t budget,
                                      unsigned workers) {
    require(k >= 1, Errc::bad_argument, "Frobenius exponent must be positive");
    uint64_t q = tw.q();
    uint64_t M = tw.order();
    uint64_t e = checked_prime_power(tw.p(), k) + 1;
    uint64_t pairs = (q - 1) * (q - 1);
    require(pairs * q <= budget, Errc::budget_exceeded, "coefficient scan exceeds the budget");

    uint64_t sq = tw.level_stride(Level::fq);
    unsigned nw = resolve_workers(workers);
    std::vector<LocalScan> locals(nw);
    for (LocalScan& ls : locals) ls.hist.assign(q + 1, 0);

    // b is the outer index so the first witness per count is the colex-least
    // (log a, log b) over the scan.
    parallel_chunks(q - 1, nw, [&](unsigned w, uint64_t beg, uint64_t end) {
        for (uint64_t ib = beg; ib < end; ++ib) {
            uint32_t lb = static_cast<uint32_t>(ib * sq);
            for (uint64_t ia = 0; ia + 1 < q; ++ia) {
                uint32_t la = static_cast<uint32_t>(ia * sq);
                uint64_t count = 0;
                // x = 0 gives f(0) = b != 0, so only x in F_q^* can vanish.
                for (uint64_t ix = 0; ix + 1 < q; ++ix) {
                    uint32_t lx = static_cast<uint32_t>(ix * sq);
                    uint32_t v = tw.add_log(pow_log(lx, e, M), tw.mul_log(la, lx));
                    if (tw.add_log(v, lb) == kZ) ++count;
                }
                locals[w].record(count, la, lb);
            }
        }
    });
    return merge_scans(q, k, pairs, locals, admissible_counts(tw.p(), k, tw.m()));
}

RootCountReport unit_circle_root_histogram(const FieldTower& tw, uint64_t k, uint64_t budget,
                                           unsigned workers) {
    require(k >= 1, Errc::bad_argument, "Frobenius exponent must be positive");
    uint64_t q = tw.q();
    uint64_t M = tw.order();
    uint64_t pk = checked_prime_power(tw.p(), k);
    uint64_t q2 = tw.q2();
    uint64_t pairs = q2 * q2 - 1;
    require(BigInt(pairs) * (q + 1) <= budget, Errc::budget_exceeded,
            "coefficient scan exceeds the budget");

    // The unit circle U_{q+1} inside F_{q^2}.
    uint64_t circle = q + 1;
    uint64_t su = M / circle;
    std::vector<uint32_t> lu(circle), lu_pk(circle), lu_e(circle);
    for (uint64_t j = 0; j < circle; ++j) {
        lu[j] = static_cast<uint32_t>(j * su);
        lu_pk[j] = pow_log(lu[j], pk, M);
        lu_e[j] = pow_log(lu[j], pk + 1, M);
    }

    uint64_t sq2 = tw.level_stride(Level::fq2);
    unsigned nw = resolve_workers(workers);
    std::vector<LocalScan> locals(nw);
    for (LocalScan& ls : locals) ls.hist.assign(circle + 1, 0);

    // Coefficient slots: 0 is the zero element, slot t > 0 is log (t-1)*sq2.
    auto slot_log = [&](uint64_t s) {
        return s == 0 ? kZ : static_cast<uint32_t>((s - 1) * sq2);
    };
    auto slot_repr = [&](uint64_t s) {
        return s == 0 ? int64_t(-1) : int64_t((s - 1) * sq2);
    };

    parallel_chunks(q2, nw, [&](unsigned w, uint64_t beg, uint64_t end) {
        for (uint64_t sb = beg; sb < end; ++sb) {
            uint32_t lb = slot_log(sb);
            uint32_t lbq = pow_log(lb, q, M);
            for (uint64_t sa = 0; sa < q2; ++sa) {
                if (sa == 0 && sb == 0) continue;
                uint32_t la = slot_log(sa);
                uint32_t laq = pow_log(la, q, M);
                uint64_t count = 0;
                for (uint64_t j = 0; j < circle; ++j) {
                    uint32_t v = tw.add_log(tw.mul_log(lb, lu_e[j]), tw.mul_log(la, lu_pk[j]));
                    uint32_t u = tw.add_log(tw.mul_log(laq, lu[j]), lbq);
                    if (tw.add_log(v, u) == kZ) ++count;
                }
                locals[w].record(count, slot_repr(sa), slot_repr(sb));
            }
        }
    });
    return merge_scans(q, k, pairs, locals, admissible_counts(tw.p(), k, tw.m()));
}

ConjectureReport conjecture_check(uint64_t m, uint64_t budget, unsigned workers) {
    require(m % 2 == 1, Errc::not_odd, "the conjecture concerns odd extension degrees");
    FieldTower tw(3, m);
    uint64_t q = tw.q();
    uint64_t M = tw.order();

    ConjectureReport rep;
    rep.q = q;
    rep.scan = unit_circle_root_histogram(tw, 2, budget, workers);
    for (const auto& [c, cnt] : rep.scan.histogram) {
        if (cnt > 0 && c >= rep.max_count) {
            rep.max_count = c;
            rep.pairs_at_max = cnt;
        }
    }

    // Predicted witness: a = w^((q+1)/2) for w generating F_{q^2}, b = 0.
    uint64_t sq2 = tw.level_stride(Level::fq2);
    uint32_t la = static_cast<uint32_t>(sq2 * ((q + 1) / 2) % M);
    uint32_t laq = static_cast<uint32_t>(uint64_t(la) * q % M);
    rep.predicted_a_log = la;
    rep.predicted_b_log = -1;
    uint64_t circle = q + 1;
    uint64_t su = M / circle;
    for (uint64_t j = 0; j < circle; ++j) {
        uint32_t ulog = static_cast<uint32_t>(j * su);
        uint32_t u9 = pow_log(ulog, 9, M);
        if (tw.add_log(tw.mul_log(la, u9), tw.mul_log(laq, ulog)) == kZ) ++rep.predicted_count;
    }
    rep.affirmed = rep.max_count == 4 && rep.predicted_count == 4;
    return rep;
}

bool preimage_structure_check(const FieldTower& tw, uint64_t r, uint64_t exponent) {
    uint64_t q = tw.q();
    require(exponent == q + 1 || exponent == q - 1, Errc::bad_argument,
            "exponent must be q+1 or q-1");
    if (exponent == q + 1)
        require(r >= 1 && (q + 1) % r == 0 && nu2(r) == nu2(q + 1), Errc::invalid_r,
                "r must divide q+1 with matching 2-adic valuation");
    else
        require(r >= 1 && (q - 1) % r == 0 && nu2(r) == nu2(q - 1), Errc::invalid_r,
                "r must divide q-1 with matching 2-adic valuation");

    uint64_t n = q * q + 1;
    uint64_t rn = r * n;
    uint64_t M = tw.order();
    require(M % rn == 0, Errc::not_a_divisor, "rn must divide the group order");
    uint64_t srn = M / rn;
    uint64_t sn = M / n;
    uint64_t dlog = srn;            // log of the shift root delta
    uint64_t llog = srn * n % M;    // log of lambda = delta^n

    // Fibers of x -> x^exponent restricted to U_{rn}.
    std::map<uint64_t, std::vector<uint64_t>> fibers;
    for (uint64_t j = 0; j < rn; ++j) {
        uint64_t lx = j * srn % M;
        fibers[lx * (exponent % M) % M].push_back(lx);
    }
    if (fibers.size() != n) return false;
    for (const auto& [img, fib] : fibers) {
        if (img % sn != 0) return false;  // image must land in U_n
        if (fib.size() != r) return false;
        // Fiber = { lambda^t * x0 }.
        std::vector<uint64_t> expect;
        for (uint64_t t = 0; t < r; ++t) expect.push_back((fib[0] + t * llog) % M);
        std::sort(expect.begin(), expect.end());
        std::vector<uint64_t> got = fib;
        std::sort(got.begin(), got.end());
        if (got != expect) return false;
    }

    // Cosets lambda^t * T for T = { delta^{-i} } partition U_{rn}.
    std::vector<std::set<uint64_t>> cosets(r);
    std::set<uint64_t> all;
    for (uint64_t t = 0; t < r; ++t) {
        for (uint64_t i = 0; i < n; ++i) {
            uint64_t tlog = (M - i * dlog % M) % M;
            uint64_t c = (t * llog + tlog) % M;
            if (c % srn != 0) return false;  // coset must stay inside U_{rn}
            cosets[t].insert(c);
            all.insert(c);
        }
        if (cosets[t].size() != n) return false;
    }
    if (all.size() != rn) return false;

    // Every fiber meets every coset exactly once.
    for (const auto& [img, fib] : fibers) {
        (void)img;
        for (uint64_t t = 0; t < r; ++t) {
            uint64_t hits = 0;
            for (uint64_t lx : fib) hits += cosets[t].count(lx);
            if (hits != 1) return false;
        }
    }
    return true;
}

}  // namespace ccd
