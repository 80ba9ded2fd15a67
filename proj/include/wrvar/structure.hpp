#ifndef WRVAR_STRUCTURE_HPP
#define WRVAR_STRUCTURE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wrvar/group.hpp"

namespace wrvar {

// Primary decomposition of a finite abelian group: for each prime p the
// descending exponents a1 >= a2 >= ... of its cyclic summands C_{p^ai}.
struct AbelianInvariants {
  std::map<std::uint64_t, std::vector<std::uint32_t>> primary;

  std::uint64_t group_order() const;
  std::uint64_t exponent() const;
};

std::uint64_t exponent(const FiniteGroup& G);

bool is_abelian(const FiniteGroup& G);

// gamma_1 = G, gamma_{k+1} = [gamma_k, G], iterated until the series repeats.
// A series that stabilizes at a nontrivial term keeps that term once more as
// evidence of stabilization; a series reaching the trivial subgroup ends there.
std::vector<Subgroup> lower_central_series(const FiniteGroup& G);

// nullopt means "not nilpotent" (a marker, not an error).  The trivial group
// has class 0.
std::optional<std::uint32_t> nilpotency_class(const FiniteGroup& G);

// Greedy primary decomposition: per prime, split off a maximal-order cyclic
// summand and recurse in the quotient.  Throws NotAbelian.
AbelianInvariants abelian_invariants(const FiniteGroup& G);

// A Sylow p-subgroup.  For nilpotent groups this is the set of p-elements;
// otherwise a p-subgroup is grown greedily by adjoining normalizing
// p-elements.  Returns the trivial subgroup when p does not divide |G|.
Subgroup sylow_subgroup(const FiniteGroup& G, std::uint64_t p);

// Largest normal nilpotent subgroup, as the join of the p-cores O_p(G).
// Requires |G| <= cap (OrderCapExceeded).
Subgroup fitting_subgroup(const FiniteGroup& G, std::uint64_t cap = kSubgroupCap);

// Intersection of all maximal proper subgroups.  Requires |G| <= cap and
// |G| > 1 (TrivialGroup).
Subgroup frattini_subgroup(const FiniteGroup& G, std::uint64_t cap = kSubgroupCap);

// Does the abelian group B contain a subgroup isomorphic to C_n^c, where n
// must be the exponent of B?  Decided from the abelian invariants: for every
// prime p | n the multiplicity of the top exponent must be at least c.
// Throws NotAbelian / ExponentMismatch.
bool contains_direct_power(const FiniteGroup& B, std::uint64_t n, std::uint32_t c);

struct StructureReport {
  std::uint64_t order = 0;
  std::uint32_t degree = 0;
  std::uint64_t exponent = 0;
  bool abelian = false;
  std::optional<std::uint32_t> nilpotency_class;  // nullopt: not nilpotent
  std::vector<std::uint64_t> lcs_sizes;
  std::optional<AbelianInvariants> invariants;  // present when abelian
};

StructureReport structure_report(const FiniteGroup& G);

}  // namespace wrvar

#endif
