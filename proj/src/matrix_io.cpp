#include "gr25/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gr25 {

using nlohmann::json;

namespace {

std::string locate(long row, long col) {
  if (row < 0) return "";
  std::string s = " at row " + std::to_string(row);
  if (col >= 0) s += ", column " + std::to_string(col);
  return s;
}

long read_size(const json& doc, const char* key) {
  if (!doc.contains(key)) throw MatrixFormatError(std::string("missing field '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long>() < 0) {
    throw MatrixFormatError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<long>();
}

template <class S>
json entries_of(const Matrix<S>& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

MatrixFormatError::MatrixFormatError(const std::string& what, long row, long col)
    : std::runtime_error("matrix document: " + what + locate(row, col)), row_(row), col_(col) {}

std::uint32_t parse_field_spec(std::string_view spec) {
  if (spec == "rational") return 0;
  if (spec.substr(0, 3) != "fp:") throw std::invalid_argument("unknown field '" + std::string(spec) + "'");
  const std::string digits(spec.substr(3));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 9) {
    throw std::invalid_argument("bad modulus in '" + std::string(spec) + "'");
  }
  const auto p = static_cast<std::uint32_t>(std::stoul(digits));
  PrimeField{p};  // validates
  return p;
}

MatrixDocument parse_matrix_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw MatrixFormatError(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!doc.is_object()) throw MatrixFormatError("top level must be an object");
  if (!doc.contains("field") || !doc.at("field").is_string()) throw MatrixFormatError("missing string field 'field'");
  MatrixDocument out;
  out.field = doc.at("field").get<std::string>();
  try {
    out.prime = parse_field_spec(out.field);
  } catch (const std::invalid_argument& e) {
    throw MatrixFormatError(e.what());
  }
  const long rows = read_size(doc, "rows");
  const long cols = read_size(doc, "cols");
  if (!doc.contains("entries") || !doc.at("entries").is_array()) throw MatrixFormatError("missing array 'entries'");
  const json& entries = doc.at("entries");
  if (static_cast<long>(entries.size()) != rows) {
    throw MatrixFormatError("expected " + std::to_string(rows) + " rows, found " + std::to_string(entries.size()));
  }
  out.rational = Matrix<Rational>(rows, cols);
  if (!out.is_rational()) out.modular = Matrix<Fp>(rows, cols);
  for (long i = 0; i < rows; ++i) {
    const json& row = entries[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long>(row.size()) != cols) {
      throw MatrixFormatError("expected an array of " + std::to_string(cols) + " entries", i);
    }
    for (long j = 0; j < cols; ++j) {
      const json& cell = row[static_cast<std::size_t>(j)];
      if (!cell.is_string()) throw MatrixFormatError("entry must be a string", i, j);
      const std::string s = cell.get<std::string>();
      try {
        out.rational(i, j) = Rational::parse(s);
        if (!out.is_rational()) out.modular(i, j) = parse_fp(s, out.prime);
      } catch (const std::exception& e) {
        throw MatrixFormatError("bad entry '" + s + "' (" + e.what() + ")", i, j);
      }
    }
  }
  if (!out.is_rational()) out.rational = Matrix<Rational>();
  return out;
}

MatrixDocument read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_document(buf.str());
}

std::string write_matrix_document(const Matrix<Rational>& m) {
  json doc{{"field", "rational"}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries_of(m)}};
  return doc.dump(2) + "\n";
}

std::string write_matrix_document(const Matrix<Fp>& m) {
  if (m.size() == 0) throw std::invalid_argument("write_matrix_document: empty F_p matrix has no modulus");
  json doc{{"field", "fp:" + std::to_string(m(0, 0).modulus())}, {"rows", m.rows()}, {"cols", m.cols()},
           {"entries", entries_of(m)}};
  return doc.dump(2) + "\n";
}

Matrix<Fp> reduce_mod(const Matrix<Rational>& m, std::uint32_t p) {
  Matrix<Fp> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      try {
        out(i, j) = parse_fp(m(i, j).to_string(), p);
      } catch (const std::invalid_argument&) {
        throw std::domain_error("reduce_mod: p divides a denominator at row " + std::to_string(i) + ", column " +
                                std::to_string(j));
      }
    }
  return out;
}

}  // namespace gr25
