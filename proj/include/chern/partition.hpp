#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chern/errors.hpp"

namespace chern {

/// Integer partition with parts stored weakly decreasing.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (std::any_of(parts_.begin(), parts_.end(), [](unsigned p) { return p == 0; }))
      throw domain_error("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  /// Parses "j1,j2,..." in any order.
  static Partition parse(std::string_view text) {
    std::vector<unsigned> parts;
    std::string item;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
          item.size() > 6)
        throw domain_error("malformed partition '" + std::string(text) + "'");
      parts.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (parts.empty())
      throw domain_error("malformed partition '" + std::string(text) + "'");
    return Partition(std::move(parts));
  }

  const std::vector<unsigned> &parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  unsigned sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

  /// "[1,2]": parts listed in ascending order, the record key format.
  std::string key() const {
    std::string s = "[";
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
      s += (it == parts_.rbegin() ? "" : ",") + std::to_string(*it);
    return s + "]";
  }

  friend bool operator==(const Partition &, const Partition &) = default;

private:
  std::vector<unsigned> parts_;
};

/// All partitions of m in descending lexicographic order: [m], [m-1,1], ...
inline std::vector<Partition> partitions_of(unsigned m) {
  std::vector<Partition> out;
  if (m == 0)
    return out;
  std::vector<unsigned> a{m};
  while (true) {
    out.emplace_back(a);
    // Find the rightmost part greater than 1.
    auto k = a.size();
    unsigned rem = 0;
    while (k > 0 && a[k - 1] == 1) {
      ++rem;
      --k;
    }
    if (k == 0)
      break;
    unsigned v = --a[k - 1];
    ++rem;
    a.resize(k);
    while (rem > v) {
      a.push_back(v);
      rem -= v;
    }
    a.push_back(rem);
  }
  return out;
}

} // namespace chern
