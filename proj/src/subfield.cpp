#include "ccd/subfield.hpp"

#include <set>
#include <unordered_map>

#include "ccd/error.hpp"
#include "ccd/linalg.hpp"
#include "ccd/polyring.hpp"
#include "ccd/span_scan.hpp"

namespace ccd {

FieldElem canonical_theta(const FieldTower& tw) {
    FieldElem w = tw.from_log(static_cast<uint32_t>(tw.level_stride(Level::fq2)));
    FieldElem theta = tw.one();
    for (uint64_t s = 1; s < tw.q2(); ++s) {
        theta = theta * w;
        if (!tw.contains(theta, Level::fq)) return theta;
    }
    fail(Errc::bad_argument, "no generator of the quadratic extension found");
}

namespace {

// Component lookup x -> (x0, x1) with x = x0 + x1*theta, keyed by log.
struct ThetaSplit {
    const FieldTower* tw;
    FieldElem theta;
    std::unordered_map<uint32_t, std::pair<uint32_t, uint32_t>> by_log;

    explicit ThetaSplit(const FieldTower& t) : tw(&t), theta(canonical_theta(t)) {
        constexpr uint32_t kZ = FieldTower::kLogZero;
        uint64_t q = t.q();
        uint64_t sq = t.level_stride(Level::fq);
        auto slot = [&](uint64_t s) {
            return s == 0 ? t.zero() : t.from_log(static_cast<uint32_t>((s - 1) * sq));
        };
        for (uint64_t s0 = 0; s0 < q; ++s0) {
            FieldElem x0 = slot(s0);
            for (uint64_t s1 = 0; s1 < q; ++s1) {
                FieldElem x1 = slot(s1);
                FieldElem x = x0 + x1 * theta;
                uint32_t key = x.is_zero() ? kZ : x.log();
                bool fresh = by_log
                                 .emplace(key, std::make_pair(x0.is_zero() ? kZ : x0.log(),
                                                              x1.is_zero() ? kZ : x1.log()))
                                 .second;
                internal_check(fresh, "theta decomposition must be a bijection");
            }
        }
    }

    std::pair<FieldElem, FieldElem> split(const FieldElem& x) const {
        constexpr uint32_t kZ = FieldTower::kLogZero;
        auto it = by_log.find(x.is_zero() ? kZ : x.log());
        internal_check(it != by_log.end(), "element outside the quadratic subfield");
        auto lift = [&](uint32_t lg) { return lg == kZ ? tw->zero() : tw->from_log(lg); };
        return {lift(it->second.first), lift(it->second.second)};
    }
};

}  // namespace

std::pair<FieldElem, FieldElem> theta_components(const FieldTower& tw, const FieldElem& x) {
    require(tw.contains(x, Level::fq2), Errc::level_mismatch,
            "component split is defined on the quadratic subfield");
    ThetaSplit split(tw);
    return split.split(x);
}

SubfieldCode subfield_subcode_direct(const ConstacyclicCode& code) {
    const FieldTower& tw = *code.tower;
    ThetaSplit split(tw);

    // F_q-spanning set of the parent: rows and theta-multiples of rows.
    Matrix gen = generator_matrix(code);
    Matrix span;
    for (const Row& row : gen) {
        span.push_back(row);
        Row scaled;
        scaled.reserve(row.size());
        for (const FieldElem& e : row) scaled.push_back(e * split.theta);
        span.push_back(std::move(scaled));
    }

    // Condition matrix over F_q: theta-component of every coordinate of an
    // F_q-combination must vanish.
    Matrix cond(code.n, Row(span.size(), tw.zero()));
    for (size_t t = 0; t < span.size(); ++t)
        for (uint64_t c = 0; c < code.n; ++c) cond[c][t] = split.split(span[t][c]).second;
    Matrix kern = kernel_basis(cond);

    SubfieldCode sub;
    sub.tower = &tw;
    sub.n = code.n;
    sub.parent_family = code.family;
    sub.parent_r = code.r;
    for (const Row& u : kern) {
        Row word(code.n, tw.zero());
        for (size_t t = 0; t < span.size(); ++t)
            if (!u[t].is_zero())
                for (uint64_t c = 0; c < code.n; ++c) word[c] = word[c] + u[t] * span[t][c];
        for (uint64_t c = 0; c < code.n; ++c)
            internal_check(tw.contains(word[c], Level::fq),
                           "subfield word has a coordinate outside F_q");
        internal_check(is_codeword(code, word), "subfield word must lie in the parent");
        sub.basis.push_back(std::move(word));
    }
    row_reduce(sub.basis);
    sub.k = sub.basis.size();
    return sub;
}

bool delsarte_cross_check(const ConstacyclicCode& code) {
    require(code.n <= 128, Errc::budget_exceeded, "dense cross-check limited to length 128");
    const FieldTower& tw = *code.tower;
    SubfieldCode direct = subfield_subcode_direct(code);

    FieldElem theta = canonical_theta(tw);
    ConstacyclicCode dual = dual_code(code);
    Matrix dual_gen = generator_matrix(dual);

    // Componentwise trace of an F_q-generating set of the dual.
    Matrix traced;
    for (const Row& row : dual_gen) {
        for (int j = 0; j < 2; ++j) {
            Row tr;
            tr.reserve(row.size());
            for (const FieldElem& e : row) {
                FieldElem scaled = j == 0 ? e : e * theta;
                tr.push_back(tw.trace(scaled, Level::fq2, Level::fq));
            }
            traced.push_back(std::move(tr));
        }
    }
    Matrix delsarte = kernel_basis(traced);

    if (delsarte.size() != direct.k) return false;
    if (direct.k == 0) return true;
    return same_row_space(delsarte, direct.basis);
}

WeightDistribution ovoid_enumerator_analytic(uint64_t q) {
    require(q >= 2, Errc::unsupported_q, "ovoid enumerator requires a prime power q >= 2");
    WeightDistribution wd;
    wd.n = q * q + 1;
    wd.k = 4;
    wd.alphabet = q;
    wd.counts.assign(wd.n + 1, 0);
    wd.counts[0] = 1;
    wd.counts[q * q - q] = BigInt(q * q - q) * (q * q + 1);
    wd.counts[q * q] = BigInt(q - 1) * (q * q + 1);
    wd.validate();
    return wd;
}

OvoidReport ovoid_check(const SubfieldCode& sub, uint64_t budget, unsigned workers) {
    require(sub.k == 4, Errc::dimension_mismatch, "ovoid check needs a 4-dimensional subcode");
    const FieldTower& tw = *sub.tower;
    uint64_t q = tw.q();
    unsigned nw = resolve_workers(workers);
    require(big_pow(q, 4) * sub.n <= budget, Errc::budget_exceeded,
            "message space exceeds the evaluation budget");

    std::vector<std::vector<uint64_t>> hists(nw, std::vector<uint64_t>(sub.n + 1, 0));
    detail::scan_span<false>(tw, detail::rows_to_logs(sub.basis),
                             detail::level_alphabet(tw, Level::fq), nw,
                             [&](unsigned w, uint32_t wt, uint64_t, uint64_t) { ++hists[w][wt]; });

    OvoidReport rep;
    rep.wd.n = sub.n;
    rep.wd.k = 4;
    rep.wd.alphabet = q;
    rep.wd.counts.assign(sub.n + 1, 0);
    for (unsigned w = 0; w < nw; ++w)
        for (uint64_t i = 0; i <= sub.n; ++i) rep.wd.counts[i] += hists[w][i];
    rep.wd.validate();

    WeightDistribution expect = ovoid_enumerator_analytic(q);
    rep.matches_analytic = rep.wd.counts == expect.counts;
    WeightDistribution dual = macwilliams_dual(rep.wd);
    rep.dual_distance = dual.min_distance();
    rep.dual_distance_is_4 = rep.dual_distance == 4;
    return rep;
}

TrivialityReport t2_triviality_criterion(const ConstacyclicCode& code) {
    const FieldTower& tw = *code.tower;
    require(!tw.contains(code.lambda, Level::fq), Errc::invalid_regime,
            "size criterion needs a shift constant outside F_q");
    uint64_t q = tw.q();
    uint64_t rn = code.r * code.n;

    TrivialityReport rep;
    uint64_t qe = q % code.r;
    uint64_t acc = qe;
    rep.k_ord = 1;
    while (acc != 1 % code.r) {
        acc = acc * qe % code.r;
        ++rep.k_ord;
        internal_check(rep.k_ord <= code.r, "order of q modulo r must divide phi(r)");
    }

    // Zero-index set of g: the 1 (mod r) lattice minus the nonzero exponents.
    std::set<uint64_t> T;
    for (uint64_t j = 0; j < code.n; ++j) T.insert((1 + code.r * j) % rn);
    for (uint64_t e : code.nonzero_exponents) T.erase(e);
    internal_check(T.size() == code.n - code.k, "zero set size must be n - k");

    // T2 = union of q^{k.j} T over the two base-field embeddings.
    uint64_t qk = 1;
    for (uint64_t i = 0; i < rep.k_ord; ++i) qk = qk * q % rn;
    std::set<uint64_t> T2;
    uint64_t mult = 1;
    for (int j = 0; j < 2; ++j) {
        for (uint64_t e : T) T2.insert(e * mult % rn);
        mult = mult * qk % rn;
    }
    rep.t2_size = T2.size();
    rep.threshold = Rational{BigInt(code.n), BigInt(rep.k_ord)};
    rep.trivial_predicted = BigInt(rep.t2_size) * rep.k_ord >= code.n;

    rep.direct_dimension = subfield_subcode_direct(code).k;
    rep.consistent = rep.trivial_predicted == (rep.direct_dimension == 0);
    return rep;
}

bool triviality_coset_argument(const ConstacyclicCode& code) {
    const FieldTower& tw = *code.tower;
    require(code.family == Family::A && code.r == 2, Errc::invalid_regime,
            "coset argument covers the negacyclic family-A case");
    uint64_t rn = code.r * code.n;

    std::set<uint64_t> zeros;
    for (uint64_t j = 0; j < code.n; ++j) zeros.insert((1 + code.r * j) % rn);
    for (uint64_t e : code.nonzero_exponents) zeros.erase(e);

    // A subfield word vanishes on the q-closure of the zero set, so the
    // subcode is trivial once that closure reaches every nonzero exponent:
    // each nonzero exponent's q-coset must meet the zero set.
    for (uint64_t e : code.nonzero_exponents) {
        CyclotomicCoset cs = cyclotomic_coset(static_cast<int64_t>(e), tw.q(), rn);
        bool meets_zero = false;
        for (uint64_t mem : cs.members)
            if (zeros.count(mem)) {
                meets_zero = true;
                break;
            }
        if (!meets_zero) return false;
    }
    return true;
}

}  // namespace ccd
