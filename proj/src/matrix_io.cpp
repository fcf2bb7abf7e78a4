#include "lnqec/matrix_io.hpp"

#include <fstream>
#include <sstream>

namespace lnqec {

namespace {

// Reads the next content line, skipping blanks and '#' comments.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> toks;
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

std::size_t parse_count(const std::string& tok, std::size_t line_no, const char* what) {
    try {
        const long long v = std::stoll(tok);
        if (v < 0) throw std::invalid_argument("negative");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected nonnegative integer for ") + what + ", got '" + tok + "'",
                         line_no);
    }
}

GF4 parse_gf4(const std::string& tok, std::size_t line_no) {
    if (tok == "0") return gf4_zero;
    if (tok == "1") return gf4_one;
    if (tok == "w" || tok == "W") return gf4_omega;
    if (tok == "w2" || tok == "W2") return gf4_omega2;
    throw ParseError("invalid GF(4) entry '" + tok + "' (expected 0, 1, w, w2)", line_no);
}

bool parse_bit(const std::string& tok, std::size_t line_no) {
    if (tok == "0") return false;
    if (tok == "1") return true;
    throw ParseError("invalid GF(2) entry '" + tok + "' (expected 0 or 1)", line_no);
}

}  // namespace

ParsedMatrix read_plain_text(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line, line_no)) throw ParseError("empty input", 1);

    auto header = tokens_of(line);
    if (header.size() != 3) throw ParseError("header must be 'rows cols field'", line_no);
    const std::size_t rows = parse_count(header[0], line_no, "rows");
    const std::size_t cols = parse_count(header[1], line_no, "cols");
    const std::size_t field = parse_count(header[2], line_no, "field");
    if (field != 2 && field != 4) throw ParseError("field must be 2 or 4", line_no);
    if (rows == 0 || cols == 0) throw ParseError("matrix dimensions must be positive", line_no);

    ParsedMatrix out;
    out.field = static_cast<int>(field);
    if (field == 2) {
        out.bin = BinMatrix(rows, cols);
    } else {
        out.quat = GF4Matrix(rows, cols);
    }

    for (std::size_t r = 0; r < rows; ++r) {
        if (!next_line(in, line, line_no)) throw ParseError("unexpected end of input", line_no + 1);
        auto toks = tokens_of(line);
        if (toks.size() != cols) {
            throw ParseError("expected " + std::to_string(cols) + " entries, got " +
                                 std::to_string(toks.size()),
                             line_no);
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (field == 2) {
                out.bin.set(r, c, parse_bit(toks[c], line_no));
            } else {
                out.quat.set(r, c, parse_gf4(toks[c], line_no));
            }
        }
    }
    return out;
}

ParsedMatrix read_plain_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return read_plain_text(in);
}

BinMatrix read_alist(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line, line_no)) throw ParseError("empty alist input", 1);

    auto header = tokens_of(line);
    if (header.size() != 2) throw ParseError("alist header must be 'n m'", line_no);
    const std::size_t n = parse_count(header[0], line_no, "n");
    const std::size_t m = parse_count(header[1], line_no, "m");
    if (n == 0 || m == 0) throw ParseError("alist dimensions must be positive", line_no);

    if (!next_line(in, line, line_no)) throw ParseError("missing max-degree line", line_no + 1);
    auto degs = tokens_of(line);
    if (degs.size() != 2) throw ParseError("expected 'max_col_degree max_row_degree'", line_no);

    if (!next_line(in, line, line_no)) throw ParseError("missing column-degree line", line_no + 1);
    auto col_deg_toks = tokens_of(line);
    if (col_deg_toks.size() != n) throw ParseError("expected " + std::to_string(n) + " column degrees", line_no);
    std::vector<std::size_t> col_deg(n);
    for (std::size_t j = 0; j < n; ++j) col_deg[j] = parse_count(col_deg_toks[j], line_no, "column degree");

    if (!next_line(in, line, line_no)) throw ParseError("missing row-degree line", line_no + 1);
    auto row_deg_toks = tokens_of(line);
    if (row_deg_toks.size() != m) throw ParseError("expected " + std::to_string(m) + " row degrees", line_no);
    std::vector<std::size_t> row_deg(m);
    for (std::size_t i = 0; i < m; ++i) row_deg[i] = parse_count(row_deg_toks[i], line_no, "row degree");

    BinMatrix H(m, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!next_line(in, line, line_no)) throw ParseError("missing column index list", line_no + 1);
        auto toks = tokens_of(line);
        std::size_t seen = 0;
        for (const auto& t : toks) {
            const std::size_t idx = parse_count(t, line_no, "row index");
            if (idx == 0) continue;  // padding
            if (idx > m) throw ParseError("row index " + std::to_string(idx) + " out of range", line_no);
            H.set(idx - 1, j, true);
            ++seen;
        }
        if (seen != col_deg[j]) {
            throw ParseError("column " + std::to_string(j + 1) + " lists " + std::to_string(seen) +
                                 " entries, degree says " + std::to_string(col_deg[j]),
                             line_no);
        }
    }

    // Row lists are redundant with the column lists; verify consistency.
    for (std::size_t i = 0; i < m; ++i) {
        if (!next_line(in, line, line_no)) throw ParseError("missing row index list", line_no + 1);
        auto toks = tokens_of(line);
        std::size_t seen = 0;
        for (const auto& t : toks) {
            const std::size_t idx = parse_count(t, line_no, "column index");
            if (idx == 0) continue;
            if (idx > n) throw ParseError("column index " + std::to_string(idx) + " out of range", line_no);
            if (!H.get(i, idx - 1)) {
                throw ParseError("row list disagrees with column list at (" + std::to_string(i + 1) +
                                     "," + std::to_string(idx) + ")",
                                 line_no);
            }
            ++seen;
        }
        if (seen != row_deg[i]) {
            throw ParseError("row " + std::to_string(i + 1) + " lists " + std::to_string(seen) +
                                 " entries, degree says " + std::to_string(row_deg[i]),
                             line_no);
        }
    }
    return H;
}

BinMatrix read_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return read_alist(in);
}

ParsedMatrix read_matrix_file(const std::string& path, int expect_field) {
    const bool is_alist = path.size() >= 6 && path.substr(path.size() - 6) == ".alist";
    if (is_alist) {
        if (expect_field == 4) throw ParseError("alist files are binary; --field 4 not applicable", 0);
        ParsedMatrix out;
        out.field = 2;
        out.bin = read_alist_file(path);
        return out;
    }
    ParsedMatrix out = read_plain_text_file(path);
    if (expect_field != 0 && expect_field != out.field) {
        throw ParseError("file '" + path + "' declares field " + std::to_string(out.field) +
                             ", expected " + std::to_string(expect_field),
                         0);
    }
    return out;
}

std::string write_plain_text(const BinMatrix& m) {
    std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " 2\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ' ';
            s += m.get(r, c) ? '1' : '0';
        }
        s += '\n';
    }
    return s;
}

std::string write_plain_text(const GF4Matrix& m) {
    std::string s = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + " 4\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ' ';
            s += m.get(r, c).to_string();
        }
        s += '\n';
    }
    return s;
}

}  // namespace lnqec
