#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace qmat {

using Subset = std::vector<int>;  // strictly increasing indices

// All k-subsets of {0,...,n-1} in lexicographic order.
inline std::vector<Subset> subsets_of_size(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::vector<Subset> all_subsets(int n) {
  std::vector<Subset> out;
  out.reserve(std::size_t(1) << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
    Subset s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t num = 1;
  for (int i = 0; i < k; ++i) {
    num = num * std::uint64_t(n - i) / std::uint64_t(i + 1);
  }
  return num;
}

inline std::uint32_t subset_to_mask(const Subset& s) {
  std::uint32_t m = 0;
  for (int i : s) m |= (1u << i);
  return m;
}

inline Subset mask_to_subset(std::uint32_t mask) {
  Subset s;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) s.push_back(i);
  return s;
}

// Sign of the permutation sorting `tuple` ascending (in place); 0 on repeats.
inline int sort_sign(std::vector<int>& tuple) {
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    int v = tuple[i];
    std::size_t j = i;
    while (j > 0 && tuple[j - 1] > v) {
      tuple[j] = tuple[j - 1];
      --j;
      sign = -sign;
    }
    tuple[j] = v;
  }
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i] == tuple[i - 1]) return 0;
  return sign;
}

// Sign of the concatenation (a, b) relative to sorted order; 0 on repeats.
inline int concat_sign(const Subset& a, const Subset& b) {
  std::vector<int> t;
  t.reserve(a.size() + b.size());
  t.insert(t.end(), a.begin(), a.end());
  t.insert(t.end(), b.begin(), b.end());
  return sort_sign(t);
}

inline Subset complement_subset(const Subset& s, int n) {
  Subset out;
  out.reserve(n - s.size());
  std::size_t j = 0;
  for (int i = 0; i < n; ++i) {
    if (j < s.size() && s[j] == i) {
      ++j;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

inline bool subset_contains(const Subset& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline Subset subset_insert(const Subset& s, int x) {
  Subset out = s;
  out.insert(std::lower_bound(out.begin(), out.end(), x), x);
  return out;
}

inline Subset subset_erase_at(const Subset& s, std::size_t pos) {
  Subset out = s;
  out.erase(out.begin() + pos);
  return out;
}

inline bool subset_includes(const Subset& big, const Subset& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace qmat
