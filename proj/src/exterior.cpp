#include "gr25/exterior.hpp"

#include <algorithm>
#include <bit>

namespace gr25 {

namespace {

struct Tables {
  std::array<std::vector<std::uint8_t>, kRank + 1> by_degree;  // lex order
  std::array<int, 32> position{};

  Tables() {
    for (int d = 0; d <= kRank; ++d) {
      std::vector<std::uint8_t>& list = by_degree[static_cast<std::size_t>(d)];
      for (unsigned m = 0; m < 32; ++m) {
        if (std::popcount(m) == d) list.push_back(static_cast<std::uint8_t>(m));
      }
      std::sort(list.begin(), list.end(), [](std::uint8_t a, std::uint8_t b) {
        // Lex order on the increasing index lists.
        for (int i = 0; i < kRank; ++i) {
          const bool ia = (a >> i) & 1U;
          const bool ib = (b >> i) & 1U;
          if (ia != ib) return ia;
        }
        return false;
      });
      for (std::size_t k = 0; k < list.size(); ++k) position[list[k]] = static_cast<int>(k);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

IndexTuple IndexTuple::of(std::initializer_list<int> indices) {
  std::uint8_t mask = 0;
  int last = 0;
  for (int i : indices) {
    if (i < 1 || i > kRank || i <= last) {
      throw std::invalid_argument("IndexTuple: indices must be strictly increasing in 1..5");
    }
    mask = static_cast<std::uint8_t>(mask | (1U << (i - 1)));
    last = i;
  }
  return IndexTuple(mask);
}

IndexTuple IndexTuple::from_mask(std::uint8_t mask) {
  if (mask >= 32) throw std::invalid_argument("IndexTuple: mask out of range");
  return IndexTuple(mask);
}

IndexTuple IndexTuple::at(int degree, int position) {
  if (degree < 0 || degree > kRank) throw std::invalid_argument("IndexTuple: degree out of range");
  const auto& list = tables().by_degree[static_cast<std::size_t>(degree)];
  if (position < 0 || position >= static_cast<int>(list.size())) {
    throw std::invalid_argument("IndexTuple: position out of range");
  }
  return IndexTuple(list[static_cast<std::size_t>(position)]);
}

int IndexTuple::degree() const { return std::popcount(static_cast<unsigned>(mask_)); }

std::vector<int> IndexTuple::indices() const {
  std::vector<int> out;
  for (int i = 0; i < kRank; ++i) {
    if ((mask_ >> i) & 1U) out.push_back(i + 1);
  }
  return out;
}

int IndexTuple::position() const { return tables().position[mask_]; }

std::string IndexTuple::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::strong_ordering operator<=>(IndexTuple a, IndexTuple b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.position() <=> b.position();
}

int tuple_count(int degree) {
  if (degree < 0 || degree > kRank) return 0;
  return static_cast<int>(tables().by_degree[static_cast<std::size_t>(degree)].size());
}

int shuffle_sign(IndexTuple a, IndexTuple b) {
  if ((a.mask() & b.mask()) != 0) return 0;
  int inversions = 0;
  for (int x = 0; x < kRank; ++x) {
    if (!((a.mask() >> x) & 1U)) continue;
    // Elements of b smaller than x must move in front of x.
    inversions += std::popcount(static_cast<unsigned>(b.mask() & ((1U << x) - 1U)));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

int pair_position(int i, int j) {
  if (i < 1 || j > kRank || i >= j) throw std::invalid_argument("pair_position: need 1 <= i < j <= 5");
  return IndexTuple::of({i, j}).position();
}

std::pair<int, int> pair_at(int position) {
  const auto idx = IndexTuple::at(2, position).indices();
  return {idx[0], idx[1]};
}

}  // namespace gr25
