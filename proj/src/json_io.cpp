#include "ccd/json_io.hpp"

#include <sstream>

namespace ccd {

std::string bigint_str(const BigInt& v) { return v.str(); }

ordered_json tower_json(const FieldTower& tw) {
    const TowerDescriptor& d = tw.descriptor();
    return ordered_json{{"p", d.p}, {"m", d.m}, {"q", tw.q()}, {"modulus", d.modulus}};
}

ordered_json poly_json(const Poly& f) {
    ordered_json coeffs = ordered_json::array();
    for (int i = 0; i <= f.deg(); ++i) coeffs.push_back(f.coeff(i).packed());
    return ordered_json{{"coeffs", coeffs}, {"level", level_name(f.level())}};
}

ordered_json code_json(const ConstacyclicCode& c) {
    const TowerDescriptor& d = c.tower->descriptor();
    ordered_json j;
    j["p"] = d.p;
    j["m"] = d.m;
    j["r"] = c.r;
    j["family"] = family_name(c.family);
    j["lambda_log"] = c.lambda.is_zero() ? ordered_json(nullptr) : ordered_json(c.lambda.log());
    j["modulus"] = d.modulus;
    j["n"] = c.n;
    j["k"] = c.k;
    j["nonzeros"] = c.nonzero_exponents;
    j["g"] = poly_json(c.g);
    j["h"] = poly_json(c.h);
    return j;
}

ordered_json wdist_json(const WeightDistribution& wd) {
    ordered_json nz = ordered_json::array();
    for (uint64_t w = 0; w < wd.counts.size(); ++w)
        if (wd.counts[w] != 0) nz.push_back({w, bigint_str(wd.counts[w])});
    return ordered_json{{"n", wd.n}, {"k", wd.k}, {"Q", wd.alphabet}, {"nonzero", nz}};
}

std::string wdist_csv(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "weight,count\n";
    for (uint64_t w = 0; w < wd.counts.size(); ++w)
        if (wd.counts[w] != 0) os << w << "," << bigint_str(wd.counts[w]) << "\n";
    return os.str();
}

ordered_json design_json(const Design& d, size_t block_limit) {
    ordered_json j;
    j["v"] = d.v;
    j["kappa"] = d.kappa;
    j["t"] = d.t;
    j["eta"] = bigint_str(d.eta);
    j["b"] = d.blocks.size();
    j["raw_words"] = d.raw_words;
    j["scalar_class_size"] = d.scalar_class_size;
    j["multiplicity_uniform"] = d.multiplicity_uniform;
    if (d.blocks.size() <= block_limit) {
        j["blocks"] = d.blocks;
    } else {
        j["blocks_omitted"] = true;
    }
    return j;
}

std::string design_csv(const Design& d) {
    std::ostringstream os;
    os << "block\n";
    for (const auto& b : d.blocks) {
        for (size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
        os << "\n";
    }
    return os.str();
}

ordered_json design_check_json(const DesignCheck& chk) {
    ordered_json j;
    j["is_design"] = chk.is_design;
    if (chk.is_design) {
        j["eta"] = bigint_str(chk.eta);
    } else {
        j["witness"] = chk.witness;
        j["witness_count"] = bigint_str(chk.witness_count);
    }
    return j;
}

ordered_json assmus_mattson_json(const AssmusMattsonReport& rep) {
    return ordered_json{{"applies", rep.applies},
                        {"d", rep.d},
                        {"d_dual", rep.d_dual},
                        {"weights_in_range", rep.weights_in_range},
                        {"allowed", rep.allowed}};
}

ordered_json rootcount_json(const RootCountReport& rep, uint64_t p, uint64_t m) {
    ordered_json hist = ordered_json::object();
    for (const auto& [c, cnt] : rep.histogram) hist[std::to_string(c)] = cnt;
    ordered_json wit = ordered_json::object();
    for (const auto& [c, w] : rep.witnesses)
        wit[std::to_string(c)] = ordered_json::array({w.first, w.second});
    return ordered_json{{"p", p},
                        {"m", m},
                        {"k", rep.k},
                        {"pairs", rep.pairs},
                        {"admissible", rep.admissible},
                        {"histogram", hist},
                        {"witnesses", wit},
                        {"all_admissible", rep.all_admissible}};
}

ordered_json conjecture_json(const ConjectureReport& rep) {
    ordered_json j;
    j["q"] = rep.q;
    j["max_count"] = rep.max_count;
    j["pairs_at_max"] = rep.pairs_at_max;
    j["predicted_witness"] = ordered_json::array({rep.predicted_a_log, rep.predicted_b_log});
    j["predicted_count"] = rep.predicted_count;
    j["affirmed"] = rep.affirmed;
    uint64_t m = 0;
    for (uint64_t t = rep.q; t > 1; t /= 3) ++m;
    j["scan"] = rootcount_json(rep.scan, 3, m);
    return j;
}

ordered_json subfield_json(const SubfieldCode& sub) {
    ordered_json rows = ordered_json::array();
    for (const Row& r : sub.basis) {
        ordered_json row = ordered_json::array();
        for (const FieldElem& e : r) row.push_back(e.packed());
        rows.push_back(row);
    }
    return ordered_json{{"q", sub.tower->q()}, {"n", sub.n}, {"k_sub", sub.k}, {"basis", rows}};
}

ordered_json ovoid_json(const OvoidReport& rep) {
    return ordered_json{{"wdist", wdist_json(rep.wd)},
                        {"matches_analytic", rep.matches_analytic},
                        {"dual_distance", rep.dual_distance},
                        {"dual_distance_is_4", rep.dual_distance_is_4}};
}

ordered_json triviality_json(const TrivialityReport& rep) {
    return ordered_json{{"k_ord", rep.k_ord},
                        {"t2_size", rep.t2_size},
                        {"threshold", rep.threshold.str()},
                        {"trivial_predicted", rep.trivial_predicted},
                        {"direct_dimension", rep.direct_dimension},
                        {"consistent", rep.consistent}};
}

ordered_json intersection_json(const IntersectionDim& id) {
    ordered_json j;
    j["explicit_dim"] = id.explicit_dim;
    j["formula_applicable"] = id.formula_applicable;
    if (id.formula_applicable) j["formula_dim"] = id.formula_dim;
    return j;
}

ordered_json eaqecc_json(const EaqeccParams& ea) {
    return ordered_json{{"n", ea.n},
                        {"k", ea.k_logical},
                        {"d", ea.d},
                        {"c", ea.c},
                        {"alphabet", ea.alphabet},
                        {"maximal_entanglement", ea.maximal_entanglement},
                        {"shift_product_hypothesis", ea.shift_product_hypothesis},
                        {"net_rate", ea.net_rate.str()}};
}

ordered_json lrc_json(const LrcReport& rep) {
    return ordered_json{{"n", rep.n},
                        {"k", rep.k},
                        {"d", rep.d},
                        {"locality", rep.locality},
                        {"singleton_like_bound", rep.singleton_like_bound},
                        {"distance_optimal", rep.distance_optimal},
                        {"cm_bound", bigint_str(rep.cm_bound)},
                        {"dimension_optimal", rep.dimension_optimal}};
}

ordered_json error_json(const Error& err) {
    return ordered_json{{"error", errc_name(err.kind())}, {"message", err.what()}};
}

ordered_json report_envelope(const FieldTower& tw) {
    ordered_json j;
    j["schema"] = 1;
    j["tower"] = tower_json(tw);
    return j;
}

}  // namespace ccd
