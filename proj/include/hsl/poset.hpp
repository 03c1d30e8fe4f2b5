// Finite posets over opaque labels, stored as the full order relation, with a
// desk-scale isomorphism test (signature refinement plus backtracking).
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hsl {

struct DeskScaleExceededError : std::runtime_error {
  explicit DeskScaleExceededError(const std::string& what)
      : std::runtime_error("desk-scale exceeded: " + what) {}
};

class Poset {
 public:
  Poset() = default;
  /// le(i,j) must already be reflexive, antisymmetric and transitive;
  /// validated on construction.
  Poset(std::vector<std::string> labels, std::vector<std::vector<bool>> le);

  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool le(size_t i, size_t j) const { return le_[i][j]; }

  friend bool operator==(const Poset& p, const Poset& q) {
    return p.labels_ == q.labels_ && p.le_ == q.le_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> le_;
};

struct IsoOptions {
  size_t max_elements = 512;
  size_t node_budget = 5'000'000;
};

/// Abstract order isomorphism (labels ignored, except that identically
/// labeled identical posets short-circuit to true). Throws
/// DeskScaleExceededError beyond the element or node limits.
bool poset_isomorphic(const Poset& p, const Poset& q, IsoOptions opts = {});

}  // namespace hsl
