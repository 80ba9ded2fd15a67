#ifndef WRVAR_GROUP_HPP
#define WRVAR_GROUP_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wrvar/errors.hpp"
#include "wrvar/perm.hpp"

namespace wrvar {

// Default caps.  Every cap is an explicit parameter of the operations that
// honor it; these are the values used when callers do not override.
inline constexpr std::uint64_t kEnumerationCap = 1ull << 20;  // elements per group
inline constexpr std::uint64_t kIsoCap = 2048;                // order for isomorphism tests
inline constexpr std::uint64_t kSubgroupCap = 512;            // order for subgroup enumeration
inline constexpr std::uint64_t kScanCap = 100'000'000;        // tuples per exhaustive law scan

// A finite permutation group with every element enumerated.  Elements are
// kept sorted lexicographically by image table, so element indices form a
// canonical order that is stable across runs.  Index 0 is the identity.
class FiniteGroup {
 public:
  // Breadth-first closure of the generators.  Throws ClosureExceedsCap once
  // more than `cap` elements are seen.
  static FiniteGroup generated(std::vector<Perm> generators, std::uint64_t cap = kEnumerationCap);
  static FiniteGroup trivial(Point degree);

  Point degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const Perm& element(std::uint32_t i) const { return elements_[i]; }
  const Perm& identity() const { return elements_[0]; }

  bool contains(const Perm& p) const { return index_.find(p) != index_.end(); }
  std::optional<std::uint32_t> index_of(const Perm& p) const;

  // Index-space product and inverse (composition is left to right).
  std::uint32_t product(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse(std::uint32_t a) const;
  std::uint64_t element_order(std::uint32_t a) const { return elements_[a].order(); }

 private:
  FiniteGroup() = default;
  void index_elements();

  Point degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
};

// A subgroup is a sorted list of element indices into a parent group, plus a
// generating subset.  The parent must outlive the subgroup.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<std::uint32_t> members;  // sorted ascending
  std::vector<std::uint32_t> gens;     // generating subset (may be empty for the trivial subgroup)

  std::uint64_t size() const { return members.size(); }
  bool contains(std::uint32_t idx) const;
  bool contains_all(const Subgroup& other) const;
  bool operator==(const Subgroup& other) const { return members == other.members; }
};

// Closure of the given element indices inside G.
Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<std::uint32_t>& gens);
Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);

// Smallest normal subgroup of G containing the given elements.
Subgroup normal_closure(const FiniteGroup& G, const std::vector<std::uint32_t>& seed);

// [H, K]: the subgroup generated by all commutators [h, k], closed under
// conjugation inside <H, K>.  H and K must live in G.
Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& H, const Subgroup& K);

bool is_normal(const FiniteGroup& G, const Subgroup& N);

// G/N realized as a permutation group acting on the left cosets of N, with
// coset representatives chosen lexicographically least.  Throws NotNormal.
FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& N);

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H,
                           std::uint64_t cap = kEnumerationCap);

// Materialize a subgroup as a standalone group on the same points.
FiniteGroup as_group(const Subgroup& S);

// Backtracking isomorphism test over generator images, after invariant
// screening.  Throws OrderCapExceeded above `cap`.
bool are_isomorphic(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t cap = kIsoCap);

// Every subgroup of G, found by closing each extension of an already-found
// subgroup by one new element.  Sorted by (size, members).  Throws
// OrderCapExceeded when |G| > cap.
std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& G, std::uint64_t cap = kSubgroupCap);

}  // namespace wrvar

#endif
