#include "service.hpp"

#include <chrono>

#include "json_report.hpp"

namespace ginv {

namespace {

using clock = std::chrono::steady_clock;

int certify_exit_code(CertifyStatus s) {
    switch (s) {
        case CertifyStatus::Optimal: return 0;
        case CertifyStatus::SuboptimalWitness: return 4;
        case CertifyStatus::NotCertified: return 5;
    }
    return 1;
}

template <class Body>
ServiceResult with_report(const std::string& digest, const std::string& command, Body body) {
    ServiceResult out;
    out.report["input_digest"] = digest;
    out.report["command"] = command;
    auto t0 = clock::now();
    try {
        body(out);
    } catch (const GinvError& e) {
        nlohmann::json err;
        err["code"] = errc_name(e.code());
        err["message"] = e.what();
        out.report["results"] = nullptr;
        out.report["error"] = std::move(err);
        out.exit_code = exit_code_for(e.code());
        out.artifacts.clear();
    }
    auto dt = std::chrono::duration<double, std::milli>(clock::now() - t0);
    out.report["timing_ms"] = dt.count();
    return out;
}

void require_goal(const std::string& goal) {
    if (goal != "sym" && goal != "ah")
        raise(errc::bad_argument, "goal must be 'sym' or 'ah'");
}

template <class T>
void construct_body(const Matrix<T>& a, const CommandOptions& opt, ServiceResult& out) {
    nlohmann::json results;
    GinvSolution<T> sol;
    if (opt.indices.empty()) {
        SearchResult<T> search = opt.goal == "sym" ? best_symmetric_block(a)
                                                   : best_column_block(a);
        results["search"] = search_json(search, false);
        sol = std::move(search.best);
    } else {
        std::span<const int> idx(opt.indices);
        sol = opt.goal == "sym" ? symmetric_block(a, idx) : column_block(a, idx);
    }
    results["solution"] = solution_json(sol);
    results["mp_report"] = mp_report_json(check_mp(a, sol.H));
    out.artifacts["H"] = format_matrix(sol.H);
    out.report["results"] = std::move(results);
}

template <class T>
void minimize_body(const Matrix<T>& a, const CommandOptions& opt, ServiceResult& out) {
    MinNormResult<T> r;
    if (opt.formulation == "p1")
        r = min_norm_p1(a);
    else if (opt.formulation == "p1sym")
        r = min_norm_p1_symmetric(a);
    else if (opt.formulation == "p1p3")
        r = min_norm_p1_p3(a);
    else
        raise(errc::bad_argument, "formulation must be 'p1', 'p1sym' or 'p1p3'");
    out.report["results"] = min_norm_json(r);
    out.artifacts["H"] = format_matrix(r.H);
}

template <class T>
void certify_body(const Matrix<T>& a, const CommandOptions& opt, ServiceResult& out) {
    CertifyOutcome<T> o = certify_block_optimality(
        a, opt.goal == "sym" ? Goal::Symmetric : Goal::AhSymmetric);
    out.report["results"] = certify_outcome_json(o);
    out.exit_code = certify_exit_code(o.status);
}

template <class T>
void compare_body(const Matrix<T>& a, ServiceResult& out) {
    if (a.is_zero()) raise(errc::degenerate_input, "zero matrix");
    nlohmann::json results;
    results["rank"] = rank_of(a);
    results["symmetric"] = a.is_symmetric();

    SearchResult<T> cols = best_column_block(a);
    MinNormResult<T> p1 = min_norm_p1(a);
    MinNormResult<T> p1p3 = min_norm_p1_p3(a);
    results["column_blocks"] = search_json(cols, false);
    results["lp_p1"] = scalar_json(p1.one_norm_value);
    results["lp_p1p3"] = scalar_json(p1p3.one_norm_value);
    results["gap_column_vs_p1p3"] =
        scalar_json(cols.best.one_norm_value - p1p3.one_norm_value);

    if (a.is_symmetric()) {
        SearchResult<T> sym = best_symmetric_block(a);
        MinNormResult<T> p1sym = min_norm_p1_symmetric(a);
        results["symmetric_blocks"] = search_json(sym, false);
        results["lp_p1sym"] = scalar_json(p1sym.one_norm_value);
        results["gap_symmetric_vs_p1sym"] =
            scalar_json(sym.best.one_norm_value - p1sym.one_norm_value);
    } else {
        results["symmetric_blocks"] = nullptr;
        results["lp_p1sym"] = nullptr;
        results["gap_symmetric_vs_p1sym"] = nullptr;
    }
    out.report["results"] = std::move(results);
}

template <class T>
void check_body(const Matrix<T>& a, const Matrix<T>& h, ServiceResult& out) {
    out.report["results"] = mp_report_json(check_mp(a, h));
}

} // namespace

int exit_code_for(errc code) {
    switch (code) {
        case errc::ok: return 0;
        case errc::bad_argument:
        case errc::parse_error:
        case errc::dimension_mismatch: return 2;
        case errc::internal_error: return 1;
        default: return 3;
    }
}

ServiceResult run_construct(const AnyMatrix& a, const std::string& digest,
                            const CommandOptions& opt) {
    return with_report(digest, "construct --goal " + opt.goal, [&](ServiceResult& out) {
        require_goal(opt.goal);
        std::visit([&](const auto& m) { construct_body(m, opt, out); }, a);
    });
}

ServiceResult run_minimize(const AnyMatrix& a, const std::string& digest,
                           const CommandOptions& opt) {
    return with_report(digest, "minimize --formulation " + opt.formulation,
                       [&](ServiceResult& out) {
                           std::visit([&](const auto& m) { minimize_body(m, opt, out); }, a);
                       });
}

ServiceResult run_certify(const AnyMatrix& a, const std::string& digest,
                          const CommandOptions& opt) {
    return with_report(digest, "certify --goal " + opt.goal, [&](ServiceResult& out) {
        require_goal(opt.goal);
        std::visit([&](const auto& m) { certify_body(m, opt, out); }, a);
    });
}

ServiceResult run_compare(const AnyMatrix& a, const std::string& digest) {
    return with_report(digest, "compare", [&](ServiceResult& out) {
        std::visit([&](const auto& m) { compare_body(m, out); }, a);
    });
}

ServiceResult run_check(const AnyMatrix& a, const AnyMatrix& h, const std::string& digest) {
    return with_report(digest, "check", [&](ServiceResult& out) {
        if (a.index() != h.index())
            raise(errc::bad_argument, "A and H must use the same numeric mode");
        std::visit(
            [&](const auto& m) {
                using M = std::decay_t<decltype(m)>;
                check_body(m, std::get<M>(h), out);
            },
            a);
    });
}

} // namespace ginv
