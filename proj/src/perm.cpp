#include "wrvar/perm.hpp"

#include <algorithm>

namespace wrvar {

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree)
    throw PointLimitExceeded("permutation degree exceeds 65535");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw BadParameter("image table is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::power(std::int64_t e) const {
  Perm base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Perm acc = identity(degree());
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

std::uint64_t Perm::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    do {
      seen[j] = true;
      j = images_[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Perm::cycle_string() const {
  std::vector<bool> seen(images_.size(), false);
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    out += '(';
    std::size_t j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j + 1);  // cycles are printed 1-based
      seen[j] = true;
      first = false;
      j = images_[j];
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace wrvar
