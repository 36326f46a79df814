#include "ginv/ginv.h"

#include <cstring>
#include <string>

#include "service.hpp"

using namespace ginv;

struct ginv_matrix {
    AnyMatrix value;
    std::string digest;
};

struct ginv_result {
    ServiceResult inner;
    std::string json_text;
};

namespace {

thread_local std::string g_last_error;

ginv_status status_for(errc code) {
    switch (code) {
        case errc::ok: return GINV_OK;
        case errc::bad_argument: return GINV_ERR_BAD_ARGUMENT;
        case errc::parse_error: return GINV_ERR_PARSE;
        case errc::dimension_mismatch: return GINV_ERR_DIMENSION;
        case errc::internal_error: return GINV_ERR_INTERNAL;
        default: return GINV_ERR_COMPUTE;
    }
}

ginv_status fail(ginv_status s, const std::string& message) {
    g_last_error = message;
    return s;
}

NumericMode mode_from(const char* mode) {
    if (mode == nullptr || std::strcmp(mode, "auto") == 0) return NumericMode::Auto;
    if (std::strcmp(mode, "exact") == 0) return NumericMode::Exact;
    if (std::strcmp(mode, "float") == 0) return NumericMode::Float;
    raise(errc::bad_argument, std::string("unknown numeric mode '") + mode + "'");
}

template <class F>
ginv_status guarded(F body) {
    try {
        body();
        return GINV_OK;
    } catch (const GinvError& e) {
        return fail(status_for(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(GINV_ERR_INTERNAL, e.what());
    }
}

void run_to_result(ServiceResult r, ginv_result** out) {
    auto* handle = new ginv_result{std::move(r), {}};
    handle->json_text = handle->inner.report.dump(2);
    *out = handle;
}

} // namespace

extern "C" {

ginv_status ginv_matrix_parse(const char* text, const char* mode, ginv_matrix** out) {
    if (!text || !out) return fail(GINV_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        AnyMatrix m = parse_matrix(text, mode_from(mode));
        *out = new ginv_matrix{std::move(m), content_digest(text)};
    });
}

ginv_status ginv_matrix_read_file(const char* path, const char* mode, ginv_matrix** out) {
    if (!path || !out) return fail(GINV_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        std::string bytes = read_file(path);
        AnyMatrix m = parse_matrix(bytes, mode_from(mode));
        *out = new ginv_matrix{std::move(m), content_digest(bytes)};
    });
}

ginv_status ginv_matrix_from_dense(int rows, int cols, const double* data,
                                   ginv_matrix** out) {
    if (!data || !out) return fail(GINV_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        if (rows <= 0 || cols <= 0) raise(errc::bad_argument, "dimensions must be positive");
        Matrix<double> m(rows, cols);
        std::string bytes(reinterpret_cast<const char*>(data),
                          sizeof(double) * static_cast<size_t>(rows) * cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                double v = data[static_cast<size_t>(i) * cols + j];
                if (!is_finite(v)) raise(errc::bad_argument, "entries must be finite");
                m(i, j) = v;
            }
        *out = new ginv_matrix{AnyMatrix(std::move(m)), content_digest(bytes)};
    });
}

void ginv_matrix_free(ginv_matrix* m) { delete m; }

int ginv_matrix_rows(const ginv_matrix* m) {
    return m ? std::visit([](const auto& v) { return v.rows(); }, m->value) : 0;
}

int ginv_matrix_cols(const ginv_matrix* m) {
    return m ? std::visit([](const auto& v) { return v.cols(); }, m->value) : 0;
}

int ginv_matrix_is_exact(const ginv_matrix* m) {
    return m && std::holds_alternative<Matrix<Rational>>(m->value) ? 1 : 0;
}

ginv_status ginv_matrix_entry_double(const ginv_matrix* m, int i, int j, double* out) {
    if (!m || !out) return fail(GINV_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        if (i < 0 || j < 0 || i >= ginv_matrix_rows(m) || j >= ginv_matrix_cols(m))
            raise(errc::bad_argument, "entry index out of range");
        *out = std::visit([&](const auto& v) { return to_double(v(i, j)); }, m->value);
    });
}

ginv_status ginv_matrix_format(const ginv_matrix* m, char** out) {
    if (!m || !out) return fail(GINV_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        std::string text = std::visit([](const auto& v) { return format_matrix(v); }, m->value);
        *out = new char[text.size() + 1];
        std::memcpy(*out, text.c_str(), text.size() + 1);
    });
}

ginv_status ginv_construct(const ginv_matrix* a, const char* goal, const int* indices,
                           int n_indices, ginv_result** out) {
    if (!a || !goal || !out) return fail(GINV_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        CommandOptions opt;
        opt.goal = goal;
        for (int k = 0; k < n_indices; ++k) {
            if (!indices) raise(errc::bad_argument, "null index array");
            opt.indices.push_back(indices[k] - 1); // 1-based at the boundary
        }
        run_to_result(run_construct(a->value, a->digest, opt), out);
    });
}

ginv_status ginv_minimize(const ginv_matrix* a, const char* formulation, ginv_result** out) {
    if (!a || !formulation || !out) return fail(GINV_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        CommandOptions opt;
        opt.formulation = formulation;
        run_to_result(run_minimize(a->value, a->digest, opt), out);
    });
}

ginv_status ginv_certify(const ginv_matrix* a, const char* goal, ginv_result** out) {
    if (!a || !goal || !out) return fail(GINV_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        CommandOptions opt;
        opt.goal = goal;
        run_to_result(run_certify(a->value, a->digest, opt), out);
    });
}

ginv_status ginv_compare(const ginv_matrix* a, ginv_result** out) {
    if (!a || !out) return fail(GINV_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] { run_to_result(run_compare(a->value, a->digest), out); });
}

ginv_status ginv_check_mp(const ginv_matrix* a, const ginv_matrix* h, ginv_result** out) {
    if (!a || !h || !out) return fail(GINV_ERR_BAD_ARGUMENT, "null argument");
    return guarded([&] {
        run_to_result(run_check(a->value, h->value, a->digest), out);
    });
}

const char* ginv_result_json(const ginv_result* r) {
    return r ? r->json_text.c_str() : nullptr;
}

int ginv_result_exit_code(const ginv_result* r) { return r ? r->inner.exit_code : 2; }

const char* ginv_result_artifact(const ginv_result* r, const char* name) {
    if (!r || !name) return nullptr;
    auto it = r->inner.artifacts.find(name);
    return it == r->inner.artifacts.end() ? nullptr : it->second.c_str();
}

void ginv_result_free(ginv_result* r) { delete r; }

const char* ginv_last_error(void) { return g_last_error.c_str(); }

const char* ginv_status_name(ginv_status s) {
    switch (s) {
        case GINV_OK: return "ok";
        case GINV_ERR_BAD_ARGUMENT: return "bad_argument";
        case GINV_ERR_PARSE: return "parse_error";
        case GINV_ERR_DIMENSION: return "dimension_mismatch";
        case GINV_ERR_COMPUTE: return "compute_error";
        case GINV_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

void ginv_string_free(char* s) { delete[] s; }

} // extern "C"
