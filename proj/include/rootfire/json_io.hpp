#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rootfire/appendix.hpp"
#include "rootfire/ehrhart.hpp"
#include "rootfire/poly.hpp"
#include "rootfire/root_system.hpp"

namespace rootfire {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline ordered_json weight_to_json(const Weight& w) {
    ordered_json arr = ordered_json::array();
    for (std::int64_t c : w.fw) arr.push_back(c);
    return arr;
}

inline Weight weight_from_json(const json& j) {
    Weight w;
    for (const auto& v : j) w.fw.push_back(v.get<std::int64_t>());
    return w;
}

inline ordered_json root_to_json(const Root& r) {
    ordered_json arr = ordered_json::array();
    for (std::int64_t c : r.root_coords) arr.push_back(c);
    return arr;
}

inline ordered_json ratvec_to_json(const RatVec& v) {
    ordered_json arr = ordered_json::array();
    for (const Rat& x : v) arr.push_back(x.str());
    return arr;
}

// Polynomial schema: {"vars":["kl","ks"],"terms":[{"kl":a,"ks":b,"coeff":c},...]}
// sorted by exponents descending; univariate systems use the single var "k".
inline ordered_json poly_to_json(const EhrhartPoly& p) {
    ordered_json out;
    ordered_json terms = ordered_json::array();
    if (p.univariate()) {
        out["vars"] = {"k"};
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            ordered_json t;
            t["k"] = it->first.first;
            t["coeff"] = it->second;
            terms.push_back(std::move(t));
        }
    } else {
        out["vars"] = {"kl", "ks"};
        for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
            ordered_json t;
            t["kl"] = it->first.first;
            t["ks"] = it->first.second;
            t["coeff"] = it->second;
            terms.push_back(std::move(t));
        }
    }
    out["terms"] = std::move(terms);
    return out;
}

inline EhrhartPoly poly_from_json(const json& j) {
    bool univariate = j.at("vars").size() == 1;
    EhrhartPoly p(univariate);
    for (const auto& t : j.at("terms")) {
        int dl = univariate ? t.at("k").get<int>() : t.at("kl").get<int>();
        int ds = univariate ? 0 : t.at("ks").get<int>();
        p.add_term(dl, ds, t.at("coeff").get<std::int64_t>());
    }
    return p;
}

inline ordered_json multipoly_to_json(const MultiPoly& p) {
    ordered_json out;
    ordered_json vars = ordered_json::array();
    for (std::size_t i = 1; i <= p.nvars(); ++i) vars.push_back("k" + std::to_string(i));
    out["vars"] = std::move(vars);
    ordered_json terms = ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        ordered_json t;
        t["powers"] = it->first;
        t["coeff"] = it->second;
        terms.push_back(std::move(t));
    }
    out["terms"] = std::move(terms);
    return out;
}

inline ordered_json max_report_to_json(const MaxReport& r) {
    ordered_json out;
    out["system"] = r.label.str();
    out["removed_node"] = r.removed_node;
    out["max"] = r.max_value.str();
    out["argmax_vertex_rc"] = ratvec_to_json(r.argmax_vertex_rc);
    out["argmax_coroot_id"] = r.argmax_coroot_id;
    return out;
}

inline ordered_json scan_to_json(const ScanResult& s) {
    ordered_json out;
    out["domain_size"] = s.domain_size;
    out["k1_only"] = s.k1_only;
    if (s.k1_only) {
        ordered_json arr = ordered_json::array();
        for (const auto& d : s.k1_disagreements) {
            ordered_json e;
            e["lambda"] = weight_to_json(d.lam);
            e["lhs"] = d.lhs_value;
            e["rhs"] = d.rhs_value;
            arr.push_back(std::move(e));
        }
        out["disagreements"] = std::move(arr);
        out["disagreement_count"] = s.k1_disagreements.size();
    } else {
        ordered_json arr = ordered_json::array();
        for (const auto& c : s.counterexamples) {
            ordered_json e;
            e["lambda"] = weight_to_json(c.lam);
            e["lhs"] = poly_to_json(c.lhs);
            e["rhs"] = poly_to_json(c.rhs);
            arr.push_back(std::move(e));
        }
        out["counterexamples"] = std::move(arr);
        out["counterexample_count"] = s.counterexamples.size();
    }
    return out;
}

}  // namespace rootfire
