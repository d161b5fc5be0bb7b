#include "qmat/ground_set.hpp"

namespace qmat {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      fail(ErrorKind::InvalidValue, "duplicate ground set label '" + labels_[i] + "'");
  }
}

GroundSet GroundSet::numbered(int n, int first) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
  return GroundSet(std::move(labels));
}

int GroundSet::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end())
    fail(ErrorKind::InvalidValue, "label '" + label + "' not in ground set");
  return it->second;
}

GroundSet GroundSet::restricted(const Subset& keep) const {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int i : keep) labels.push_back(label(i));
  return GroundSet(std::move(labels));
}

GroundSet GroundSet::with_extra_label(const std::string& label) const {
  if (has(label))
    fail(ErrorKind::InvalidValue, "label '" + label + "' already in ground set");
  std::vector<std::string> labels = labels_;
  labels.push_back(label);
  return GroundSet(std::move(labels));
}

std::vector<std::string> GroundSet::labels_of(const Subset& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (int i : s) out.push_back(label(i));
  return out;
}

Subset GroundSet::indices_of(const std::vector<std::string>& labels) const {
  Subset out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace qmat
