#include "matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ginv {

namespace {

// signed decimal integer, base 10 enforced (no octal auto-detection)
mpz_class integer_from(const std::string& text, const std::string& token) {
    std::string s = text;
    if (!s.empty() && s[0] == '+') s = s.substr(1);
    if (s.empty()) raise(errc::parse_error, "bad number '" + token + "'");
    for (size_t i = (s[0] == '-') ? 1 : 0; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            raise(errc::parse_error, "bad number '" + token + "'");
    if (s == "-") raise(errc::parse_error, "bad number '" + token + "'");
    return mpz_class(s, 10);
}

} // namespace

Rational rational_from_token(const std::string& token) {
    if (token.empty()) raise(errc::parse_error, "empty numeric token");
    // fraction p/q
    if (auto slash = token.find('/'); slash != std::string::npos) {
        mpz_class num = integer_from(token.substr(0, slash), token);
        mpz_class den = integer_from(token.substr(slash + 1), token);
        if (den == 0) raise(errc::parse_error, "zero denominator in '" + token + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    // decimal / scientific: mantissa [.frac] [e exp]
    std::string body = token;
    long exp10 = 0;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
        try {
            exp10 = std::stol(body.substr(e + 1));
        } catch (...) {
            raise(errc::parse_error, "bad exponent in '" + token + "'");
        }
        body = body.substr(0, e);
    }
    std::string digits = body;
    long frac_digits = 0;
    if (auto dot = body.find('.'); dot != std::string::npos) {
        frac_digits = static_cast<long>(body.size() - dot - 1);
        digits = body.substr(0, dot) + body.substr(dot + 1);
    }
    Rational r(integer_from(digits, token), 1);
    long net = exp10 - frac_digits;
    if (net > 0) {
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(net));
        r *= Rational(p10, 1);
    } else if (net < 0) {
        mpz_class p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-net));
        r /= Rational(p10, 1);
    }
    r.canonicalize();
    return r;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

bool is_comment_or_blank(const std::string& line, bool allow_percent) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#' || (allow_percent && c == '%');
    }
    return true;
}

Matrix<Rational> parse_dense(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<Rational>> rows;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line, false)) continue;
        std::vector<std::string> toks = tokenize(line);
        std::vector<Rational> row;
        row.reserve(toks.size());
        for (const auto& t : toks) row.push_back(rational_from_token(t));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) raise(errc::parse_error, "no matrix rows found");
    const size_t cols = rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) raise(errc::parse_error, "rows have differing lengths");
    Matrix<Rational> m(static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols; ++j) m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

Matrix<Rational> parse_matrix_market(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    std::vector<std::string> h = tokenize(header);
    std::transform(h.begin(), h.end(), h.begin(), [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return s;
    });
    if (h.size() < 5 || h[0] != "%%matrixmarket" || h[1] != "matrix")
        raise(errc::parse_error, "malformed MatrixMarket header");
    const std::string& format = h[2];
    const std::string& field = h[3];
    const std::string& symmetry = h[4];
    if (format != "array" && format != "coordinate")
        raise(errc::parse_error, "unsupported MatrixMarket format '" + format + "'");
    if (field != "real" && field != "integer")
        raise(errc::parse_error, "unsupported MatrixMarket field '" + field + "'");
    if (symmetry != "general" && symmetry != "symmetric")
        raise(errc::parse_error, "unsupported MatrixMarket symmetry '" + symmetry + "'");

    std::string line;
    std::vector<std::string> sizes;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line, true)) continue;
        sizes = tokenize(line);
        break;
    }
    auto to_int = [](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (...) {
            raise(errc::parse_error, "bad size entry '" + s + "'");
        }
    };
    if (format == "array") {
        if (sizes.size() != 2) raise(errc::parse_error, "array size line needs 2 entries");
        int m = to_int(sizes[0]), n = to_int(sizes[1]);
        if (m <= 0 || n <= 0) raise(errc::parse_error, "non-positive dimensions");
        Matrix<Rational> out(m, n);
        // column-major; symmetric files store the lower triangle of each column
        std::vector<std::pair<int, int>> slots;
        if (symmetry == "general") {
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < m; ++i) slots.emplace_back(i, j);
        } else {
            if (m != n) raise(errc::parse_error, "symmetric matrix must be square");
            for (int j = 0; j < n; ++j)
                for (int i = j; i < m; ++i) slots.emplace_back(i, j);
        }
        size_t at = 0;
        while (std::getline(in, line)) {
            if (is_comment_or_blank(line, true)) continue;
            for (const auto& t : tokenize(line)) {
                if (at >= slots.size()) raise(errc::parse_error, "too many entries");
                auto [i, j] = slots[at++];
                Rational v = rational_from_token(t);
                out(i, j) = v;
                if (symmetry == "symmetric") out(j, i) = v;
            }
        }
        if (at != slots.size()) raise(errc::parse_error, "too few entries");
        return out;
    }
    // coordinate
    if (sizes.size() != 3) raise(errc::parse_error, "coordinate size line needs 3 entries");
    int m = to_int(sizes[0]), n = to_int(sizes[1]), nnz = to_int(sizes[2]);
    if (m <= 0 || n <= 0 || nnz < 0) raise(errc::parse_error, "bad coordinate sizes");
    if (symmetry == "symmetric" && m != n)
        raise(errc::parse_error, "symmetric matrix must be square");
    Matrix<Rational> out(m, n);
    int seen = 0;
    while (std::getline(in, line)) {
        if (is_comment_or_blank(line, true)) continue;
        std::vector<std::string> toks = tokenize(line);
        if (toks.size() != 3) raise(errc::parse_error, "coordinate entry needs 'i j value'");
        int i = to_int(toks[0]), j = to_int(toks[1]);
        if (i < 1 || i > m || j < 1 || j > n) raise(errc::parse_error, "coordinate out of range");
        Rational v = rational_from_token(toks[2]);
        out(i - 1, j - 1) = v;
        if (symmetry == "symmetric") out(j - 1, i - 1) = v;
        ++seen;
    }
    if (seen != nnz) raise(errc::parse_error, "nonzero count does not match header");
    return out;
}

} // namespace

Matrix<Rational> parse_matrix_exact(const std::string& text) {
    size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) raise(errc::parse_error, "empty input");
    if (text.compare(start, 2, "%%") == 0) return parse_matrix_market(text);
    return parse_dense(text);
}

AnyMatrix parse_matrix(const std::string& text, NumericMode mode) {
    Matrix<Rational> exact = parse_matrix_exact(text);
    bool use_exact = false;
    switch (mode) {
        case NumericMode::Exact: use_exact = true; break;
        case NumericMode::Float: use_exact = false; break;
        case NumericMode::Auto:
            use_exact = std::min(exact.rows(), exact.cols()) <= kExactAutoLimit;
            break;
    }
    if (use_exact) return exact;
    return matrix_cast<double>(exact);
}

std::string format_matrix(const Matrix<Rational>& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << scalar_to_string(m(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string format_matrix(const Matrix<double>& m) {
    std::ostringstream out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << scalar_to_string(m(i, j));
        }
        out << '\n';
    }
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string content_digest(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
    return out;
}

} // namespace ginv
