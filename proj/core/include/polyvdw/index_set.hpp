#pragma once

#include <vector>

namespace polyvdw {

// Nonempty finite set of positive integers, stored ascending.
class IndexSet {
 public:
  // Sorts and deduplicates. Throws ConfigError when empty or nonpositive.
  explicit IndexSet(std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  int max() const { return indices_.back(); }
  int size() const { return static_cast<int>(indices_.size()); }

  bool disjoint_with(const IndexSet& other) const;
  static IndexSet union_of(const IndexSet& a, const IndexSet& b);

  friend bool operator==(const IndexSet& a, const IndexSet& b) = default;

 private:
  std::vector<int> indices_;
};

}  // namespace polyvdw
