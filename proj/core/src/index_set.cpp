#include "polyvdw/index_set.hpp"

#include <algorithm>

#include "polyvdw/errors.hpp"

namespace polyvdw {

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw ConfigError("index set must be nonempty");
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.front() < 1) throw ConfigError("index set entries must be positive");
}

bool IndexSet::disjoint_with(const IndexSet& other) const {
  auto it = indices_.begin();
  auto jt = other.indices_.begin();
  while (it != indices_.end() && jt != other.indices_.end()) {
    if (*it == *jt) return false;
    if (*it < *jt)
      ++it;
    else
      ++jt;
  }
  return true;
}

IndexSet IndexSet::union_of(const IndexSet& a, const IndexSet& b) {
  std::vector<int> merged;
  merged.reserve(a.indices_.size() + b.indices_.size());
  std::merge(a.indices_.begin(), a.indices_.end(), b.indices_.begin(), b.indices_.end(),
             std::back_inserter(merged));
  return IndexSet(std::move(merged));
}

}  // namespace polyvdw
