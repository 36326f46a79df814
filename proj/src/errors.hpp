#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

// Error codes shared by the C++ core and the C API surface.
enum class errc {
    ok = 0,
    bad_argument,
    parse_error,
    dimension_mismatch,
    singular_matrix,
    rank_deficient,
    not_symmetric,
    wrong_block_size,
    singular_block,
    rank_deficient_block,
    not_rank_one,
    not_rank_two,
    not_nonnegative,
    not_psd,
    block_not_minimal,
    column_not_minimal,
    zero_pivot,
    degenerate_input,
    numerical_breakdown,
    internal_error,
};

const char* errc_name(errc c);

class GinvError : public std::runtime_error {
public:
    GinvError(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
    throw GinvError(code, what);
}

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::ok: return "ok";
        case errc::bad_argument: return "bad_argument";
        case errc::parse_error: return "parse_error";
        case errc::dimension_mismatch: return "dimension_mismatch";
        case errc::singular_matrix: return "singular_matrix";
        case errc::rank_deficient: return "rank_deficient";
        case errc::not_symmetric: return "not_symmetric";
        case errc::wrong_block_size: return "wrong_block_size";
        case errc::singular_block: return "singular_block";
        case errc::rank_deficient_block: return "rank_deficient_block";
        case errc::not_rank_one: return "not_rank_one";
        case errc::not_rank_two: return "not_rank_two";
        case errc::not_nonnegative: return "not_nonnegative";
        case errc::not_psd: return "not_psd";
        case errc::block_not_minimal: return "block_not_minimal";
        case errc::column_not_minimal: return "column_not_minimal";
        case errc::zero_pivot: return "zero_pivot";
        case errc::degenerate_input: return "degenerate_input";
        case errc::numerical_breakdown: return "numerical_breakdown";
        case errc::internal_error: return "internal_error";
    }
    return "unknown";
}

} // namespace ginv
