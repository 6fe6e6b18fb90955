#include "ccd/wdist.hpp"

#include <algorithm>

#include "ccd/error.hpp"
#include "ccd/linalg.hpp"
#include "ccd/span_scan.hpp"

namespace ccd {

void WeightDistribution::validate() const {
    require(counts.size() == n + 1, Errc::dimension_mismatch,
            "weight distribution must have n+1 entries");
    require(counts[0] == 1, Errc::bad_argument, "weight distribution must count the zero word once");
    for (const BigInt& c : counts)
        require(c >= 0, Errc::bad_argument, "weight distribution has a negative count");
    require(total() == big_pow(alphabet, k), Errc::bad_argument,
            "weight distribution total is not alphabet^k");
}

BigInt WeightDistribution::total() const {
    BigInt s = 0;
    for (const BigInt& c : counts) s += c;
    return s;
}

uint64_t WeightDistribution::min_distance() const {
    for (uint64_t w = 1; w < counts.size(); ++w)
        if (counts[w] != 0) return w;
    fail(Errc::zero_code, "zero code has no minimum distance");
}

uint64_t WeightDistribution::nonzero_weights_up_to(uint64_t hi) const {
    uint64_t cnt = 0;
    for (uint64_t w = 1; w <= hi && w < counts.size(); ++w)
        if (counts[w] != 0) ++cnt;
    return cnt;
}

WeightDistribution weight_distribution_exhaustive(const ConstacyclicCode& code, uint64_t budget,
                                                  unsigned workers) {
    const FieldTower& tw = *code.tower;
    uint64_t Q = tw.q2();
    unsigned nw = resolve_workers(workers);
    BigInt messages = code.family == Family::custom ? big_pow(Q, code.k)
                                                    : big_pow(tw.order() + 1, 2);
    require(messages * code.n <= budget, Errc::budget_exceeded,
            "message space exceeds the evaluation budget");

    std::vector<std::vector<uint64_t>> hists(nw, std::vector<uint64_t>(code.n + 1, 0));
    auto sink = [&](unsigned w, uint32_t wt, uint64_t, uint64_t) { ++hists[w][wt]; };
    if (code.family == Family::custom) {
        Matrix gen = generator_matrix(code);
        detail::scan_span<false>(tw, detail::rows_to_logs(gen),
                                 detail::level_alphabet(tw, Level::fq2), nw, sink);
    } else {
        detail::scan_trace_messages<false>(code, nw, sink);
    }

    WeightDistribution wd;
    wd.n = code.n;
    wd.k = code.k;
    wd.alphabet = Q;
    wd.counts.assign(code.n + 1, 0);
    for (unsigned w = 0; w < nw; ++w)
        for (uint64_t i = 0; i <= code.n; ++i) wd.counts[i] += hists[w][i];
    wd.validate();
    return wd;
}

WeightDistribution weight_distribution_analytic(uint64_t q) {
    require(q > 2, Errc::unsupported_q, "closed-form distribution requires q > 2");
    BigInt bq = q;
    WeightDistribution wd;
    wd.n = q * q + 1;
    wd.k = 4;
    wd.alphabet = q * q;
    wd.counts.assign(wd.n + 1, 0);
    wd.counts[0] = 1;
    wd.counts[q * q - q] = big_pow(q, 5) - bq;
    wd.counts[q * q - 1] = (big_pow(q, 4) - 1) * (bq - 1) * big_pow(q, 3) / 2;
    wd.counts[q * q] = big_pow(q, 7) - big_pow(q, 5) + big_pow(q, 4) - big_pow(q, 3) + bq - 1;
    wd.counts[q * q + 1] = wd.counts[q * q - 1];
    wd.validate();
    return wd;
}

namespace {

// C(r, c) for all 0 <= c <= r <= n.
std::vector<std::vector<BigInt>> binomial_table(uint64_t n) {
    std::vector<std::vector<BigInt>> tbl(n + 1);
    for (uint64_t r = 0; r <= n; ++r) {
        tbl[r].assign(r + 1, 1);
        for (uint64_t c = 1; c < r; ++c) tbl[r][c] = tbl[r - 1][c - 1] + tbl[r - 1][c];
    }
    return tbl;
}

}  // namespace

WeightDistribution macwilliams_dual(const WeightDistribution& wd) {
    require(wd.k <= wd.n, Errc::dimension_mismatch, "dimension exceeds length");
    uint64_t n = wd.n;
    BigInt Q = wd.alphabet;
    auto C = binomial_table(n);
    std::vector<BigInt> qm1pow(n + 1);
    qm1pow[0] = 1;
    for (uint64_t t = 1; t <= n; ++t) qm1pow[t] = qm1pow[t - 1] * (Q - 1);

    BigInt qk = big_pow(wd.alphabet, wd.k);
    WeightDistribution dual;
    dual.n = n;
    dual.k = n - wd.k;
    dual.alphabet = wd.alphabet;
    dual.counts.assign(n + 1, 0);
    for (uint64_t j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (uint64_t i = 0; i <= n; ++i) {
            if (wd.counts[i] == 0) continue;
            // Krawtchouk K_j(i) over C(i, h) C(n-i, j-h).
            BigInt kr = 0;
            for (uint64_t h = 0; h <= j && h <= i; ++h) {
                if (j - h > n - i) continue;
                BigInt term = C[i][h] * C[n - i][j - h] * qm1pow[j - h];
                kr += (h & 1) ? -term : term;
            }
            acc += wd.counts[i] * kr;
        }
        require(acc % qk == 0 && acc >= 0, Errc::bad_argument,
                "input is not the weight distribution of a linear code");
        dual.counts[j] = acc / qk;
    }
    dual.validate();
    return dual;
}

BigInt a4_dual_closed_form(uint64_t q) {
    require(q > 2, Errc::unsupported_q, "closed form requires q > 2");
    BigInt bq = q;
    BigInt e = bq * bq * (bq - 2) * (bq * bq + 1) * (bq * bq - 1) * (bq * bq - 1);
    internal_check(e % 24 == 0, "dual weight-4 closed form must be integral");
    return e / 24;
}

PlessMomentReport pless_moment_check(const WeightDistribution& wd, unsigned dual_zero_prefix) {
    require(dual_zero_prefix == 3, Errc::bad_argument,
            "only a dual zero prefix of 3 is supported");
    require(wd.k >= dual_zero_prefix, Errc::bad_argument,
            "dimension too small for the requested moments");
    auto C = binomial_table(wd.n);
    PlessMomentReport rep;
    rep.holds = true;
    // Binomial-moment form of the Pless identities: when the dual
    // distribution vanishes at weights 1..3, the first four binomial moments
    // agree with those of the full space.
    for (unsigned j = 0; j <= dual_zero_prefix; ++j) {
        BigInt m = 0;
        for (uint64_t w = 0; w <= wd.n; ++w)
            if (wd.n - w >= j) m += C[wd.n - w][j] * wd.counts[w];
        BigInt e = C[wd.n][j] * big_pow(wd.alphabet, wd.k - j);
        rep.moments.push_back(m);
        rep.expected.push_back(e);
        if (m != e) rep.holds = false;
    }
    return rep;
}

namespace {

// Advance a k-subset of [0, n) one step in colex order; false when exhausted.
bool next_colex(std::vector<uint32_t>& s, uint32_t n) {
    uint32_t w = static_cast<uint32_t>(s.size());
    for (uint32_t j = 0; j < w; ++j) {
        uint32_t cap = (j + 1 < w) ? s[j + 1] : n;
        if (s[j] + 1 < cap) {
            ++s[j];
            for (uint32_t t = 0; t < j; ++t) s[t] = t;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<DualWord> low_weight_dual_codewords(const ConstacyclicCode& code, unsigned wmax,
                                                uint64_t budget) {
    require(wmax >= 1 && wmax <= 5, Errc::bad_argument, "weight cap must be in [1, 5]");
    const FieldTower& tw = *code.tower;
    Matrix gen = generator_matrix(code);
    uint64_t Q = tw.q2();
    uint32_t n = static_cast<uint32_t>(code.n);
    uint64_t spent = 0;
    auto charge = [&](uint64_t units) {
        spent += units;
        require(spent <= budget, Errc::budget_exceeded, "low-weight search exceeds the budget");
    };

    // Elements of the code alphabet, zero first, for combination coefficients.
    std::vector<FieldElem> alpha;
    alpha.push_back(tw.zero());
    for (uint64_t t = 0; t + 1 < Q; ++t)
        alpha.push_back(tw.from_log(static_cast<uint32_t>(t * tw.level_stride(Level::fq2))));

    std::vector<DualWord> out;
    for (unsigned w = 1; w <= wmax; ++w) {
        if (w > n) break;
        std::vector<uint32_t> sub(w);
        for (unsigned j = 0; j < w; ++j) sub[j] = j;
        do {
            charge(code.k * w);
            Matrix cols(gen.size(), Row(w, tw.zero()));
            for (size_t r = 0; r < gen.size(); ++r)
                for (unsigned j = 0; j < w; ++j) cols[r][j] = gen[r][sub[j]];
            Matrix kern = kernel_basis(cols);
            if (kern.empty()) continue;
            size_t nu = kern.size();

            // One coefficient vector per projective class: leading coefficient 1.
            for (size_t lead = 0; lead < nu; ++lead) {
                size_t free_digits = nu - lead - 1;
                uint64_t combos = 1;
                for (size_t t = 0; t < free_digits; ++t) combos *= Q;
                charge(combos * w);
                for (uint64_t ci = 0; ci < combos; ++ci) {
                    Row v = kern[lead];
                    uint64_t t = ci;
                    for (size_t d = 0; d < free_digits; ++d) {
                        FieldElem c = alpha[t % Q];
                        t /= Q;
                        if (!c.is_zero())
                            for (unsigned j = 0; j < w; ++j)
                                v[j] = v[j] + c * kern[lead + 1 + d][j];
                    }
                    bool full = true;
                    for (unsigned j = 0; j < w && full; ++j) full = !v[j].is_zero();
                    if (!full) continue;
                    FieldElem scale = v[0].inv();
                    DualWord dw;
                    dw.support = sub;
                    dw.word.assign(n, tw.zero());
                    for (unsigned j = 0; j < w; ++j) dw.word[sub[j]] = v[j] * scale;
                    out.push_back(std::move(dw));
                }
            }
        } while (next_colex(sub, n));
    }
    return out;
}

BigInt dual_word_count(const std::vector<DualWord>& words, unsigned w, uint64_t alphabet) {
    BigInt cnt = 0;
    for (const DualWord& dw : words)
        if (dw.support.size() == w) ++cnt;
    return cnt * (BigInt(alphabet) - 1);
}

bool griesmer_check(uint64_t n, uint64_t k, uint64_t d, uint64_t alphabet) {
    require(k >= 1 && d >= 1, Errc::bad_argument, "Griesmer check needs k >= 1 and d >= 1");
    BigInt need = 0;
    BigInt qi = 1;
    for (uint64_t i = 0; i < k; ++i) {
        need += (BigInt(d) + qi - 1) / qi;
        qi *= alphabet;
    }
    return BigInt(n) >= need;
}

}  // namespace ccd
