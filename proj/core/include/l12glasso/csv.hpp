#pragma once

#include <string>

#include "l12glasso/matrix.hpp"

namespace l12 {

// Comma-separated numeric grid, LF newlines, no quoting. has_header skips
// the first row. Throws ParseError (with row/column position) on malformed
// fields and RaggedRows when a row's width differs from the first row.
DenseMatrix load_matrix_csv(const std::string& path, bool has_header = false);

// Full round-trip precision (17 significant digits), no header.
void save_matrix_csv(const std::string& path, const DenseMatrix& m);

}  // namespace l12
