#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace copfaces {

/// Subset of P = {0, ..., p-1}, stored as a bitmask. The C++ API is 0-based;
/// external formats (JSON, reports) print and parse 1-based indices.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  explicit constexpr IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> zero_based);

  static IndexSet from_indices(const std::vector<int>& zero_based);
  /// Validates 1 <= k <= p for every element.
  static IndexSet from_one_based(const std::vector<int>& one_based, int p);
  static IndexSet full(int p);

  [[nodiscard]] bool contains(int k) const { return (bits_ >> k) & 1U; }
  [[nodiscard]] bool empty() const { return bits_ == 0; }
  [[nodiscard]] int size() const;
  [[nodiscard]] std::uint64_t bits() const { return bits_; }

  void insert(int k) { bits_ |= std::uint64_t{1} << k; }
  void erase(int k) { bits_ &= ~(std::uint64_t{1} << k); }

  [[nodiscard]] bool is_subset_of(const IndexSet& other) const { return (bits_ & ~other.bits_) == 0; }
  [[nodiscard]] bool is_proper_subset_of(const IndexSet& other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }

  [[nodiscard]] IndexSet complement(int p) const { return IndexSet(full(p).bits_ & ~bits_); }
  friend IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend bool operator==(IndexSet a, IndexSet b) = default;

  /// Sorted 0-based members.
  [[nodiscard]] std::vector<int> indices() const;
  [[nodiscard]] std::vector<int> one_based() const;

  /// "{1,2,5}" (1-based).
  [[nodiscard]] std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Cardinality first, then lexicographic on the sorted member lists.
bool support_order_less(const IndexSet& a, const IndexSet& b);

/// All 2^p - 1 nonempty subsets of {0..p-1} in support order.
std::vector<IndexSet> supports_by_cardinality(int p);

}  // namespace copfaces
