#ifndef WRVAR_PERM_HPP
#define WRVAR_PERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wrvar/errors.hpp"

namespace wrvar {

using Point = std::uint16_t;

inline constexpr std::uint32_t kMaxDegree = 65535;

// A permutation of {0, ..., degree-1} stored as its image table.
// Products compose left to right: (a * b) means "apply a, then b".
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(Point degree);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point apply(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm operator*(const Perm& rhs) const;
  Perm power(std::int64_t e) const;
  std::uint64_t order() const;  // lcm of cycle lengths

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

  std::string cycle_string() const;  // 1-based disjoint cycles, "()" for identity

 private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    // FNV-1a over the image bytes; stable across runs.
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h = (h ^ (x & 0xff)) * 1099511628211ull;
      h = (h ^ (x >> 8)) * 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

inline Perm Perm::identity(Point degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  Perm p;
  p.images_ = std::move(img);
  return p;
}

inline bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

inline Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw DegreeMismatch("product of permutations of different degree");
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

inline Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

}  // namespace wrvar

#endif
