#pragma once

#include <iosfwd>
#include <string>

#include "dodgson/matrix.hpp"

namespace dodgson {

/// Text format: optional "@domain integers|rationals|fp <p>" directive, a size
/// line "n" (square) or "n m", then n*m whitespace-separated entries in the
/// scalar grammar. Lines whose first non-blank character is '#' are comments.
/// Without a directive the domain is inferred from the entries ("mod" means a
/// prime field, '/' means rationals, otherwise integers).
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);

/// Writes the directive, the size line and one row per line. Prime-field
/// entries are written as bare residues; the directive carries the modulus.
/// with_domain = false drops the directive (trace blocks, where the domain
/// is fixed by context).
void write_matrix(std::ostream& out, const Matrix& m, bool with_domain = true);
std::string matrix_to_string(const Matrix& m);

}  // namespace dodgson
