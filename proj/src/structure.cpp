#include "wrvar/structure.hpp"

#include <algorithm>
#include <numeric>

namespace wrvar {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::uint64_t AbelianInvariants::group_order() const {
  std::uint64_t o = 1;
  for (const auto& [p, exps] : primary) {
    for (std::uint32_t e : exps) {
      for (std::uint32_t i = 0; i < e; ++i) o *= p;
    }
  }
  return o;
}

std::uint64_t AbelianInvariants::exponent() const {
  std::uint64_t e = 1;
  for (const auto& [p, exps] : primary) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < exps.front(); ++i) q *= p;
    e *= q;
  }
  return e;
}

std::uint64_t exponent(const FiniteGroup& G) {
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < G.order(); ++i) e = std::lcm(e, G.element_order(i));
  return e;
}

bool is_abelian(const FiniteGroup& G) {
  // Generators commute iff the group is abelian.
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

std::vector<Subgroup> lower_central_series(const FiniteGroup& G) {
  std::vector<Subgroup> chain;
  chain.push_back(full_subgroup(G));
  Subgroup whole = full_subgroup(G);
  while (chain.back().size() > 1) {
    Subgroup next = commutator_subgroup(G, chain.back(), whole);
    if (next.members == chain.back().members) {
      chain.push_back(std::move(next));  // stabilized nontrivially; keep one witness term
      break;
    }
    chain.push_back(std::move(next));
  }
  return chain;
}

std::optional<std::uint32_t> nilpotency_class(const FiniteGroup& G) {
  std::vector<Subgroup> chain = lower_central_series(G);
  if (chain.back().size() != 1) return std::nullopt;
  return static_cast<std::uint32_t>(chain.size() - 1);
}

namespace {

// Descending exponent list of an abelian p-group, by splitting off a cyclic
// subgroup of maximal order and recursing in the quotient.
void p_group_exponents(const FiniteGroup& P, std::uint64_t p, std::vector<std::uint32_t>& out) {
  if (P.order() == 1) return;
  std::uint32_t best = 0;
  std::uint64_t best_order = 1;
  for (std::uint32_t i = 0; i < P.order(); ++i) {
    std::uint64_t o = P.element_order(i);
    if (o > best_order) {
      best_order = o;
      best = i;
    }
  }
  std::uint32_t e = 0;
  for (std::uint64_t q = best_order; q > 1; q /= p) ++e;
  out.push_back(e);
  FiniteGroup Q = quotient_group(P, subgroup_generated(P, {best}));
  p_group_exponents(Q, p, out);
}

}  // namespace

AbelianInvariants abelian_invariants(const FiniteGroup& G) {
  if (!is_abelian(G)) throw NotAbelian("abelian invariants of a nonabelian group");
  AbelianInvariants inv;
  for (std::uint64_t p : prime_factors(G.order())) {
    FiniteGroup P = as_group(sylow_subgroup(G, p));
    std::vector<std::uint32_t> exps;
    p_group_exponents(P, p, exps);
    inv.primary[p] = std::move(exps);
  }
  return inv;
}

Subgroup sylow_subgroup(const FiniteGroup& G, std::uint64_t p) {
  if (p < 2) throw BadParameter("p must be a prime");
  std::uint64_t ppart = 1;
  {
    std::uint64_t n = G.order();
    while (n % p == 0) {
      n /= p;
      ppart *= p;
    }
  }
  if (ppart == 1) return trivial_subgroup(G);

  // In a group whose p-elements already form a subgroup (e.g. any nilpotent
  // group), that set is the Sylow p-subgroup.
  std::vector<std::uint32_t> pelts;
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    if (is_power_of(G.element_order(i), p)) pelts.push_back(i);
  }
  if (pelts.size() == ppart) {
    Subgroup S = subgroup_generated(G, pelts);
    if (S.size() == ppart) {
      S.gens = pelts;  // keep a deterministic generating set
      return S;
    }
  }

  // Otherwise grow greedily: a proper p-subgroup always has a normalizing
  // p-element outside itself.
  Subgroup P = trivial_subgroup(G);
  while (P.size() < ppart) {
    bool extended = false;
    for (std::uint32_t g : pelts) {
      if (P.contains(g)) continue;
      std::uint32_t gi = G.inverse(g);
      bool normalizes = true;
      for (std::uint32_t x : P.members) {
        if (!P.contains(G.product(G.product(gi, x), g))) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      std::vector<std::uint32_t> gens = P.gens;
      gens.push_back(g);
      Subgroup T = subgroup_generated(G, gens);
      if (is_power_of(T.size(), p)) {
        P = std::move(T);
        extended = true;
        break;
      }
    }
    if (!extended) throw Error("internal: Sylow growth stalled");
  }
  return P;
}

namespace {

// O_p(G): intersection of the conjugates of one Sylow p-subgroup.
std::vector<std::uint32_t> p_core(const FiniteGroup& G, std::uint64_t p) {
  Subgroup P = sylow_subgroup(G, p);
  std::vector<bool> keep(G.order(), false);
  for (std::uint32_t x : P.members) keep[x] = true;
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    std::uint32_t gi = G.inverse(g);
    std::vector<bool> conj(G.order(), false);
    for (std::uint32_t x : P.members) conj[G.product(G.product(gi, x), g)] = true;
    for (std::uint32_t i = 0; i < G.order(); ++i) keep[i] = keep[i] && conj[i];
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    if (keep[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

Subgroup fitting_subgroup(const FiniteGroup& G, std::uint64_t cap) {
  if (G.order() > cap) throw OrderCapExceeded("Fitting subgroup above order cap");
  std::vector<std::uint32_t> gens;
  for (std::uint64_t p : prime_factors(G.order())) {
    for (std::uint32_t x : p_core(G, p)) {
      if (x != 0) gens.push_back(x);
    }
  }
  return subgroup_generated(G, gens);
}

Subgroup frattini_subgroup(const FiniteGroup& G, std::uint64_t cap) {
  if (G.order() == 1) throw TrivialGroup("Frattini subgroup of the trivial group");
  std::vector<Subgroup> subs = enumerate_subgroups(G, cap);
  // Maximal proper subgroups: proper, and not contained in a larger proper one.
  std::vector<const Subgroup*> maximal;
  for (const Subgroup& S : subs) {
    if (S.size() == G.order()) continue;
    bool contained = false;
    for (const Subgroup& T : subs) {
      if (T.size() == G.order() || T.size() <= S.size()) continue;
      if (T.contains_all(S)) {
        contained = true;
        break;
      }
    }
    if (!contained) maximal.push_back(&S);
  }
  std::vector<std::uint32_t> inter = maximal.front()->members;
  for (const Subgroup* M : maximal) {
    std::vector<std::uint32_t> next;
    std::set_intersection(inter.begin(), inter.end(), M->members.begin(), M->members.end(),
                          std::back_inserter(next));
    inter = std::move(next);
  }
  Subgroup F;
  F.parent = &G;
  F.members = std::move(inter);
  for (std::uint32_t x : F.members) {
    if (x != 0) F.gens.push_back(x);
  }
  return F;
}

bool contains_direct_power(const FiniteGroup& B, std::uint64_t n, std::uint32_t c) {
  AbelianInvariants inv = abelian_invariants(B);  // throws NotAbelian
  std::uint64_t exp = B.order() == 1 ? 1 : inv.exponent();
  if (n != exp) throw ExponentMismatch("n must be the exponent of B");
  if (n == 1) return true;
  for (std::uint64_t p : prime_factors(n)) {
    const auto& exps = inv.primary.at(p);
    std::uint32_t top = exps.front();
    std::uint32_t multiplicity =
        static_cast<std::uint32_t>(std::count(exps.begin(), exps.end(), top));
    if (multiplicity < c) return false;
  }
  return true;
}

StructureReport structure_report(const FiniteGroup& G) {
  StructureReport r;
  r.order = G.order();
  r.degree = G.degree();
  r.exponent = exponent(G);
  r.abelian = is_abelian(G);
  for (const Subgroup& s : lower_central_series(G)) r.lcs_sizes.push_back(s.size());
  if (r.lcs_sizes.back() == 1)
    r.nilpotency_class = static_cast<std::uint32_t>(r.lcs_sizes.size() - 1);
  if (r.abelian && G.order() > 1) r.invariants = abelian_invariants(G);
  return r;
}

}  // namespace wrvar
