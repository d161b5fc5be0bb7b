#pragma once

#include <map>
#include <string>
#include <vector>

#include "qmat/combinat.hpp"
#include "qmat/error.hpp"

namespace qmat {

// An ordered finite set of distinct labels. The declaration order fixes the
// total order used by every sign convention, so order is part of identity.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> labels);

  static GroundSet numbered(int n, int first = 1);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool has(const std::string& label) const { return index_.count(label) > 0; }
  int index(const std::string& label) const;

  // Sub-ground-set on the given index subset, preserving order.
  GroundSet restricted(const Subset& keep) const;
  GroundSet with_extra_label(const std::string& label) const;

  std::vector<std::string> labels_of(const Subset& s) const;
  Subset indices_of(const std::vector<std::string>& labels) const;

  bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }
  bool operator!=(const GroundSet& o) const { return !(*this == o); }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

}  // namespace qmat
