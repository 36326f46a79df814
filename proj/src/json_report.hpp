#pragma once

// JSON views of the library's result types. Exact scalars serialize as
// fraction strings ("17/36"), float scalars as numbers; indices are reported
// 1-based to match the usual matrix notation.

#include <json.hpp>

#include "certify.hpp"
#include "mp_check.hpp"
#include "search.hpp"

namespace ginv {

using nlohmann::json;

inline json scalar_json(const Rational& x) { return scalar_to_string(x); }
inline json scalar_json(double x) { return x; }

template <class T>
json matrix_json(const Matrix<T>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json indices_json(const std::vector<int>& idx) {
    json out = json::array();
    for (int i : idx) out.push_back(i + 1);
    return out;
}

template <class T>
json mp_report_json(const MPReport<T>& r) {
    json out;
    out["p1_residual"] = scalar_json(r.p1_residual);
    out["p2_residual"] = scalar_json(r.p2_residual);
    out["p3_residual"] = scalar_json(r.p3_residual);
    out["p4_residual"] = scalar_json(r.p4_residual);
    out["h_symmetric_residual"] =
        r.h_symmetric_residual ? scalar_json(*r.h_symmetric_residual) : json(nullptr);
    out["rank_A"] = r.rank_A;
    out["rank_H"] = r.rank_H;
    out["reflexive"] = r.reflexive;
    return out;
}

inline json provenance_json(const Provenance& p) {
    json out;
    if (const auto* s = std::get_if<SymmetricBlockTag>(&p)) {
        out["kind"] = "symmetric_block";
        out["indices"] = indices_json(s->indices);
    } else if (const auto* c = std::get_if<ColumnBlockTag>(&p)) {
        out["kind"] = "column_block";
        out["indices"] = indices_json(c->indices);
    } else {
        out["kind"] = "lp";
        out["formulation"] = std::get<LPTag>(p).formulation;
    }
    return out;
}

template <class T>
json solution_json(const GinvSolution<T>& s, bool include_matrix = true) {
    json out;
    out["provenance"] = provenance_json(s.provenance);
    out["one_norm"] = scalar_json(s.one_norm_value);
    if (include_matrix) out["H"] = matrix_json(s.H);
    return out;
}

template <class T>
json search_json(const SearchResult<T>& r, bool include_matrix = true) {
    json out;
    out["best"] = solution_json(r.best, include_matrix);
    out["best_index_set"] = indices_json(r.best_index_set);
    out["candidates_examined"] = r.candidates_examined;
    json per = json::array();
    for (const auto& [idx, norm] : r.per_candidate_norms) {
        json e;
        e["indices"] = indices_json(idx);
        e["one_norm"] = scalar_json(norm);
        per.push_back(std::move(e));
    }
    out["per_candidate_norms"] = std::move(per);
    return out;
}

template <class T>
json certificate_json(const DualCertificate<T>& c) {
    json out;
    out["W"] = matrix_json(c.W);
    out["U"] = c.U ? matrix_json(*c.U) : json(nullptr);
    out["objective"] = scalar_json(c.objective);
    out["max_violation"] = scalar_json(c.max_violation);
    return out;
}

template <class T>
json condition_report_json(const ConditionReport<T>& r) {
    json cols = json::array();
    for (const auto& c : r.columns) {
        json e;
        e["column"] = c.column + 1;
        e["alpha"] = scalar_json(c.alpha);
        e["beta"] = scalar_json(c.beta);
        e["case_i"] = c.case_i;
        e["case_ii"] = c.case_ii;
        e["case_iii"] = c.case_iii;
        cols.push_back(std::move(e));
    }
    json out;
    out["columns"] = std::move(cols);
    out["sign_pattern_opposite"] = r.sign_pattern_opposite;
    out["sign_pattern_aligned"] = r.sign_pattern_aligned;
    out["all_columns_pass"] = r.all_columns_pass;
    return out;
}

template <class T>
json min_norm_json(const MinNormResult<T>& r, bool include_matrix = true) {
    json out;
    out["formulation"] = formulation_name(r.formulation);
    out["one_norm"] = scalar_json(r.one_norm_value);
    if (include_matrix) out["H"] = matrix_json(r.H);
    out["dual_W"] = matrix_json(r.dual_W);
    out["dual_U"] = r.dual_U ? matrix_json(*r.dual_U) : json(nullptr);
    json lp;
    lp["feasibility_residual"] = scalar_json(r.lp.feasibility_residual);
    lp["duality_gap"] = scalar_json(r.lp.duality_gap);
    lp["complementary_slackness"] = scalar_json(r.lp.complementary_slackness);
    out["lp"] = std::move(lp);
    return out;
}

template <class T>
json certify_outcome_json(const CertifyOutcome<T>& o) {
    json out;
    out["outcome"] = certify_status_name(o.status);
    out["method"] = o.method;
    out["search"] = o.search ? search_json(*o.search, false) : json(nullptr);
    out["certificate"] = o.certificate ? certificate_json(*o.certificate) : json(nullptr);
    out["conditions"] = o.conditions ? condition_report_json(*o.conditions) : json(nullptr);
    out["lp_value"] = o.lp_value ? scalar_json(*o.lp_value) : json(nullptr);
    out["reason"] = o.reason.empty() ? json(nullptr) : json(o.reason);
    return out;
}

} // namespace ginv
