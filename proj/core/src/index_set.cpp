#include "copfaces/index_set.hpp"

#include <algorithm>
#include <bit>

#include "copfaces/config.hpp"
#include "copfaces/errors.hpp"

namespace copfaces {

IndexSet::IndexSet(std::initializer_list<int> zero_based) {
  for (int k : zero_based) insert(k);
}

IndexSet IndexSet::from_indices(const std::vector<int>& zero_based) {
  IndexSet s;
  for (int k : zero_based) {
    if (k < 0 || k >= kMaxOrder) throw InvariantError("index out of range: " + std::to_string(k));
    s.insert(k);
  }
  return s;
}

IndexSet IndexSet::from_one_based(const std::vector<int>& one_based, int p) {
  IndexSet s;
  for (int k : one_based) {
    if (k < 1 || k > p) {
      throw InvariantError("index " + std::to_string(k) + " outside 1.." + std::to_string(p));
    }
    if (s.contains(k - 1)) throw InvariantError("duplicate index " + std::to_string(k));
    s.insert(k - 1);
  }
  return s;
}

IndexSet IndexSet::full(int p) {
  if (p < 0 || p > kMaxOrder) throw LimitError("order " + std::to_string(p) + " exceeds index capacity");
  return IndexSet(p == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << p) - 1));
}

int IndexSet::size() const { return std::popcount(bits_); }

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::vector<int> IndexSet::one_based() const {
  auto out = indices();
  for (int& k : out) ++k;
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int k : one_based()) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

bool support_order_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

std::vector<IndexSet> supports_by_cardinality(int p) {
  if (p < 1 || p > 30) throw LimitError("support enumeration needs 1 <= p <= 30");
  std::vector<IndexSet> out;
  out.reserve((std::size_t{1} << p) - 1);
  for (std::uint64_t b = 1; b < (std::uint64_t{1} << p); ++b) out.emplace_back(b);
  std::sort(out.begin(), out.end(), support_order_less);
  return out;
}

}  // namespace copfaces
