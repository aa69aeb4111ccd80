#include "gr25/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gr25 {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string item(text.substr(start, comma - start));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("Partition: bad part '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("Partition: bad part '" + item + "'");
    parts.push_back(value);
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

std::vector<Partition> Partition::all(int n, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(rec, n, n);
  return out;
}

std::uint64_t SymPoly::pack(const Exponent& e) {
  std::uint64_t key = 0;
  for (int i = 0; i < kVars; ++i) {
    if (e[i] < 0 || e[i] > 63) throw std::invalid_argument("SymPoly: exponent out of range");
    key |= static_cast<std::uint64_t>(e[i]) << (6 * i);
  }
  return key;
}

Exponent SymPoly::unpack(std::uint64_t key) {
  Exponent e{};
  for (int i = 0; i < kVars; ++i) e[i] = static_cast<int>((key >> (6 * i)) & 63U);
  return e;
}

SymPoly SymPoly::constant(long c) { return monomial(Exponent{}, c); }

SymPoly SymPoly::monomial(const Exponent& e, const BigInt& c) {
  SymPoly p;
  p.add(e, c);
  return p;
}

void SymPoly::add(const Exponent& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(pack(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SymPoly::coefficient(const Exponent& e) const {
  for (int x : e) {
    if (x < 0 || x > 63) return 0;
  }
  auto it = terms_.find(pack(e));
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<Exponent, BigInt>> SymPoly::sorted_terms() const {
  std::vector<std::pair<Exponent, BigInt>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(unpack(k), c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

int SymPoly::homogeneous_degree() const {
  int degree = -2;
  for (const auto& [k, c] : terms_) {
    const Exponent e = unpack(k);
    const int d = std::accumulate(e.begin(), e.end(), 0);
    if (degree == -2) {
      degree = d;
    } else if (degree != d) {
      return -1;
    }
  }
  return degree == -2 ? 0 : degree;
}

bool SymPoly::is_symmetric() const {
  // Adjacent transpositions generate S5.
  for (const auto& [k, c] : terms_) {
    const Exponent e = unpack(k);
    for (int i = 0; i + 1 < kVars; ++i) {
      Exponent s = e;
      std::swap(s[i], s[i + 1]);
      if (coefficient(s) != c) return false;
    }
  }
  return true;
}

BigInt SymPoly::value_at_ones() const {
  BigInt total = 0;
  for (const auto& [k, c] : terms_) total += c;
  return total;
}

BigInt SymPoly::evaluate(const std::array<BigInt, kVars>& x) const {
  BigInt total = 0;
  for (const auto& [k, c] : terms_) {
    const Exponent e = unpack(k);
    BigInt term = c;
    for (int i = 0; i < kVars; ++i) {
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), x[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= power;
    }
    total += term;
  }
  return total;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [k, c] : o.terms_) add(unpack(k), c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [k, c] : o.terms_) add(unpack(k), -c);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  // Packed keys add without carries as long as no exponent exceeds 63.
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      auto& slot = out.terms_[ka + kb];
      mpz_addmul(slot.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    it = it->second == 0 ? out.terms_.erase(it) : std::next(it);
  }
  return out;
}

bool operator==(const SymPoly& a, const SymPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& [k, c] : a.terms_) {
    auto it = b.terms_.find(k);
    if (it == b.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::vector<Exponent> base_variables() {
  std::vector<Exponent> out;
  for (int i = 0; i < kVars; ++i) {
    Exponent e{};
    e[i] = 1;
    out.push_back(e);
  }
  return out;
}

std::vector<Exponent> e2_monomials() {
  std::vector<Exponent> out;
  for (int i = 0; i < kVars; ++i)
    for (int j = i + 1; j < kVars; ++j) {
      Exponent e{};
      e[i] = 1;
      e[j] = 1;
      out.push_back(e);
    }
  return out;
}

std::vector<SymPoly> complete_homogeneous(const std::vector<Exponent>& vars, int kmax) {
  // H_k^{(m)} = H_k^{(m-1)} + y_m H_{k-1}^{(m)}.
  std::vector<SymPoly> h(static_cast<std::size_t>(std::max(kmax, 0) + 1));
  h[0] = SymPoly::constant(1);
  for (const auto& y : vars) {
    const SymPoly ym = SymPoly::monomial(y);
    for (int k = 1; k <= kmax; ++k) h[static_cast<std::size_t>(k)] += ym * h[static_cast<std::size_t>(k - 1)];
  }
  return h;
}

SymPoly schur_poly(const Partition& lambda, const std::vector<Exponent>& vars) {
  const int n = lambda.length();
  if (n > static_cast<int>(vars.size())) {
    throw std::invalid_argument("schur_poly: partition has more parts than variables");
  }
  if (n == 0) return SymPoly::constant(1);
  const int kmax = lambda[0] + n - 1;
  const std::vector<SymPoly> h = complete_homogeneous(vars, kmax);
  auto entry = [&](int i, int j) -> const SymPoly* {
    const int k = lambda[i] - i + j;
    if (k < 0 || k > kmax) return nullptr;
    return &h[static_cast<std::size_t>(k)];
  };
  // Laplace expansion from the last row upward; memo[mask] is the minor on
  // the bottom popcount(mask) rows and the columns in mask.
  std::vector<SymPoly> memo(1U << n);
  memo[0] = SymPoly::constant(1);
  for (unsigned mask = 1; mask < (1U << n); ++mask) {
    const int rows = __builtin_popcount(mask);
    const int row = n - rows;
    SymPoly acc;
    int position = 0;  // column rank within mask, for the cofactor sign
    for (int c = 0; c < n; ++c) {
      if (!(mask & (1U << c))) continue;
      const SymPoly* e = entry(row, c);
      const unsigned rest = mask & ~(1U << c);
      if (e != nullptr && !memo[rest].is_zero()) {
        SymPoly term = *e * memo[rest];
        if (position % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++position;
    }
    memo[mask] = std::move(acc);
  }
  return memo[(1U << n) - 1];
}

SymPoly plethysm_with_e2(const Partition& lambda) {
  if (lambda.weight() > 15) throw std::invalid_argument("plethysm_with_e2: |lambda| exceeds 15");
  return schur_poly(lambda, e2_monomials());
}

namespace {

constexpr Exponent kRho{4, 3, 2, 1, 0};

}  // namespace

BigInt schur_multiplicity(const SymPoly& f, const Partition& mu) {
  if (mu.length() > kVars) throw std::invalid_argument("schur_multiplicity: mu has more than 5 parts");
  const int degree = f.homogeneous_degree();
  if (f.is_zero()) return 0;
  if (degree != mu.weight()) throw std::invalid_argument("schur_multiplicity: weight mismatch");
  Exponent shifted{};
  for (int i = 0; i < kVars; ++i) shifted[i] = mu[i] + kRho[i];
  std::array<int, kVars> w{0, 1, 2, 3, 4};
  BigInt total = 0;
  do {
    Exponent e{};
    bool valid = true;
    int inversions = 0;
    for (int i = 0; i < kVars; ++i) {
      e[i] = shifted[w[i]] - kRho[i];
      if (e[i] < 0) valid = false;
      for (int j = i + 1; j < kVars; ++j)
        if (w[i] > w[j]) ++inversions;
    }
    if (!valid) continue;
    const BigInt c = f.coefficient(e);
    if (inversions % 2 == 0) {
      total += c;
    } else {
      total -= c;
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

std::map<Partition, BigInt> schur_decomposition(const SymPoly& f) {
  std::map<Partition, BigInt> out;
  if (f.is_zero()) return out;
  const int degree = f.homogeneous_degree();
  if (degree < 0) throw std::invalid_argument("schur_decomposition: polynomial is not homogeneous");
  for (const auto& mu : Partition::all(degree, kVars)) {
    BigInt m = schur_multiplicity(f, mu);
    if (m != 0) out.emplace(mu, std::move(m));
  }
  return out;
}

BigInt weyl_dim(const std::vector<int>& lambda) {
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    if (lambda[i] > lambda[i - 1]) throw std::invalid_argument("weyl_dim: weight is not weakly decreasing");
  }
  mpq_class q = 1;
  const long n = static_cast<long>(lambda.size());
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j) q *= mpq_class(lambda[i] - lambda[j] + j - i, j - i);
  q.canonicalize();
  if (q.get_den() != 1) throw std::logic_error("weyl_dim: non-integral dimension");
  return q.get_num();
}

}  // namespace gr25
