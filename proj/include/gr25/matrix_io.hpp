#pragma once

// JSON matrix documents:
//   {"field": "rational" | "fp:<p>", "rows": r, "cols": c,
//    "entries": [["1", "-2/3", ...], ...]}
// Entries are strings "n" or "n/d", given as r rows of c strings.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gr25/linalg.hpp"

namespace gr25 {

/// Malformed document. row/col are 0-based, or -1 when not tied to an entry.
class MatrixFormatError : public std::runtime_error {
 public:
  MatrixFormatError(const std::string& what, long row = -1, long col = -1);
  long row() const { return row_; }
  long col() const { return col_; }

 private:
  long row_;
  long col_;
};

struct MatrixDocument {
  std::string field;       // as written in the document
  std::uint32_t prime = 0; // 0 for rational
  Matrix<Rational> rational;
  Matrix<Fp> modular;

  bool is_rational() const { return prime == 0; }
};

/// Parses "rational" or "fp:<p>"; returns 0 for rational. Throws
/// std::invalid_argument for anything else or a modulus that is not a prime >= 5.
std::uint32_t parse_field_spec(std::string_view spec);

MatrixDocument parse_matrix_document(std::string_view text);
MatrixDocument read_matrix_file(const std::filesystem::path& path);

std::string write_matrix_document(const Matrix<Rational>& m);
std::string write_matrix_document(const Matrix<Fp>& m);

/// Entrywise reduction; throws std::domain_error if p divides a denominator.
Matrix<Fp> reduce_mod(const Matrix<Rational>& m, std::uint32_t p);

}  // namespace gr25
