#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qas {

/// Subsets w of {1..n} are kept as sorted 1-based index vectors.
using IndexSet = std::vector<int>;

inline IndexSet normalize_index_set(IndexSet w, std::size_t n) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (int i : w)
    if (i < 1 || static_cast<std::size_t>(i) > n)
      throw std::invalid_argument("index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(n));
  return w;
}

inline IndexSet complement(const IndexSet& w, std::size_t n) {
  IndexSet out;
  std::size_t k = 0;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    if (k < w.size() && w[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

inline bool set_contains(const IndexSet& w, int i) {
  return std::binary_search(w.begin(), w.end(), i);
}

inline bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::uint64_t to_bitmask(const IndexSet& w) {
  std::uint64_t m = 0;
  for (int i : w) m |= (1ULL << (i - 1));
  return m;
}

inline IndexSet from_bitmask(std::uint64_t mask, std::size_t n) {
  IndexSet w;
  for (std::size_t i = 0; i < n; ++i)
    if (mask & (1ULL << i)) w.push_back(static_cast<int>(i + 1));
  return w;
}

/// "101" for w = {1,3}, n = 3.
inline std::string bitstring(const IndexSet& w, std::size_t n) {
  std::string s(n, '0');
  for (int i : w) s[static_cast<std::size_t>(i - 1)] = '1';
  return s;
}

inline std::string index_set_str(const IndexSet& w) {
  std::string s = "{";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + "}";
}

}  // namespace qas
