#pragma once

#include <iosfwd>
#include <string>

#include "lnqec/bin_matrix.hpp"
#include "lnqec/gf4.hpp"

namespace lnqec {

/// Matrix read from disk: binary, quaternary, or binary-from-alist.
struct ParsedMatrix {
    int field = 2;  // 2 or 4
    BinMatrix bin;
    GF4Matrix quat;
};

/// Plain-text format: header line "rows cols field" with field in {2, 4},
/// then one line per row of space-separated entries. GF(4) entries are
/// written 0, 1, w, w2. Blank lines and lines starting with '#' are skipped.
ParsedMatrix read_plain_text(std::istream& in);
ParsedMatrix read_plain_text_file(const std::string& path);

/// alist sparse interchange format (binary only): "n m" header, max column
/// and row degrees, per-column degrees, per-row degrees, then 1-based index
/// lists per column and per row. Zero entries used as padding are ignored.
BinMatrix read_alist(std::istream& in);
BinMatrix read_alist_file(const std::string& path);

/// Reads either format, deciding by file extension (".alist" vs anything
/// else). An explicit field of 2 or 4 overrides the plain-text header check.
ParsedMatrix read_matrix_file(const std::string& path, int expect_field = 0);

std::string write_plain_text(const BinMatrix& m);
std::string write_plain_text(const GF4Matrix& m);

}  // namespace lnqec
