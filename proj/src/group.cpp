#include "wrvar/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace wrvar {

namespace {

struct IndexVecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

FiniteGroup FiniteGroup::generated(std::vector<Perm> generators, std::uint64_t cap) {
  if (generators.empty()) throw BadParameter("at least one generator required");
  Point deg = generators[0].degree();
  for (const Perm& g : generators) {
    if (g.degree() != deg) throw DegreeMismatch("generators of different degree");
  }

  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> todo;
  Perm id = Perm::identity(deg);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : generators) {
      Perm next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw ClosureExceedsCap("closure exceeds cap of " + std::to_string(cap));
        todo.push_back(std::move(next));
      }
    }
  }

  FiniteGroup G;
  G.degree_ = deg;
  G.elements_.assign(seen.begin(), seen.end());
  std::sort(G.elements_.begin(), G.elements_.end());
  G.generators_ = std::move(generators);
  G.index_elements();
  return G;
}

FiniteGroup FiniteGroup::trivial(Point degree) {
  FiniteGroup G;
  G.degree_ = degree;
  G.elements_ = {Perm::identity(degree)};
  G.generators_ = {Perm::identity(degree)};
  G.index_elements();
  return G;
}

void FiniteGroup::index_elements() {
  index_.clear();
  index_.reserve(elements_.size() * 2);
  for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  // The identity is the lexicographically least bijection, so it sorts first.
}

std::optional<std::uint32_t> FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t FiniteGroup::product(std::uint32_t a, std::uint32_t b) const {
  auto it = index_.find(elements_[a] * elements_[b]);
  return it->second;
}

std::uint32_t FiniteGroup::inverse(std::uint32_t a) const {
  auto it = index_.find(elements_[a].inverse());
  return it->second;
}

bool Subgroup::contains(std::uint32_t idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

bool Subgroup::contains_all(const Subgroup& other) const {
  return std::includes(members.begin(), members.end(), other.members.begin(), other.members.end());
}

namespace {

// Closure of `seed` under products, and optionally under conjugation by the
// elements listed in `conjugators`.  Everything is in parent index space.
std::vector<std::uint32_t> close_indices(const FiniteGroup& G, std::vector<std::uint32_t> seed,
                                         const std::vector<std::uint32_t>& conjugators) {
  std::unordered_set<std::uint32_t> in;
  std::deque<std::uint32_t> todo;
  std::uint32_t id = 0;  // identity has index 0
  in.insert(id);
  std::vector<std::uint32_t> gens;
  for (std::uint32_t s : seed) {
    if (in.insert(s).second) {
      todo.push_back(s);
      gens.push_back(s);
    }
  }
  while (!todo.empty()) {
    std::uint32_t x = todo.front();
    todo.pop_front();
    for (std::uint32_t g : gens) {
      std::uint32_t y = G.product(x, g);
      if (in.insert(y).second) todo.push_back(y);
    }
    for (std::uint32_t c : conjugators) {
      std::uint32_t y = G.product(G.product(G.inverse(c), x), c);
      if (in.insert(y).second) {
        todo.push_back(y);
        gens.push_back(y);  // conjugates enlarge the generating set
      }
    }
  }
  std::vector<std::uint32_t> out(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<std::uint32_t>& gens) {
  Subgroup S;
  S.parent = &G;
  S.gens = gens;
  S.members = close_indices(G, gens, {});
  return S;
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  Subgroup S;
  S.parent = &G;
  S.members = {0};
  return S;
}

Subgroup full_subgroup(const FiniteGroup& G) {
  Subgroup S;
  S.parent = &G;
  S.members.resize(G.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) S.members[i] = i;
  for (const Perm& g : G.generators()) S.gens.push_back(*G.index_of(g));
  return S;
}

Subgroup normal_closure(const FiniteGroup& G, const std::vector<std::uint32_t>& seed) {
  std::vector<std::uint32_t> conj;
  for (const Perm& g : G.generators()) conj.push_back(*G.index_of(g));
  Subgroup S;
  S.parent = &G;
  S.gens = seed;
  S.members = close_indices(G, seed, conj);
  return S;
}

Subgroup commutator_subgroup(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
  if (H.parent != &G || K.parent != &G) throw ForeignElement("subgroup belongs to a different group");
  // [H,K] is the closure, inside J = <H,K>, of the commutators of generators.
  std::vector<std::uint32_t> jgens;
  jgens.insert(jgens.end(), H.gens.begin(), H.gens.end());
  jgens.insert(jgens.end(), K.gens.begin(), K.gens.end());

  std::vector<std::uint32_t> seed;
  std::unordered_set<std::uint32_t> seen;
  for (std::uint32_t h : H.gens) {
    for (std::uint32_t k : K.gens) {
      std::uint32_t c = G.product(G.product(G.product(G.inverse(h), G.inverse(k)), h), k);
      if (seen.insert(c).second) seed.push_back(c);
    }
  }
  Subgroup S;
  S.parent = &G;
  S.gens = seed;
  S.members = close_indices(G, seed, jgens);
  return S;
}

bool is_normal(const FiniteGroup& G, const Subgroup& N) {
  if (N.parent != &G) throw ForeignElement("subgroup belongs to a different group");
  for (const Perm& g : G.generators()) {
    std::uint32_t gi = *G.index_of(g);
    std::uint32_t ginv = G.inverse(gi);
    for (std::uint32_t n : N.members) {
      if (!N.contains(G.product(G.product(ginv, n), gi))) return false;
    }
  }
  return true;
}

FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw NotNormal("quotient by a non-normal subgroup");
  std::uint64_t ncosets = G.order() / N.size();
  if (ncosets > kMaxDegree)
    throw PointLimitExceeded("quotient degree exceeds 65535 points");

  // Walk elements in canonical order; the first element of each left coset gN
  // is its lexicographically least member and becomes the coset representative.
  std::vector<std::uint32_t> coset_of(G.order(), UINT32_MAX);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < G.order(); ++i) {
    if (coset_of[i] != UINT32_MAX) continue;
    std::uint32_t c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(i);
    for (std::uint32_t n : N.members) coset_of[G.product(i, n)] = c;
  }

  // Left multiplication by g sends the coset with representative r to g*r*N.
  auto induced = [&](std::uint32_t g) {
    std::vector<Point> img(reps.size());
    for (std::uint32_t c = 0; c < reps.size(); ++c)
      img[c] = static_cast<Point>(coset_of[G.product(g, reps[c])]);
    return Perm(std::move(img));
  };

  std::vector<Perm> qgens;
  for (const Perm& g : G.generators()) qgens.push_back(induced(*G.index_of(g)));
  FiniteGroup Q = FiniteGroup::generated(qgens, ncosets);
  if (Q.order() != ncosets) throw Error("internal: quotient order mismatch");
  return Q;
}

FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t cap) {
  if (G.order() > cap / H.order())
    throw ClosureExceedsCap("direct product order exceeds cap");
  std::uint32_t deg = static_cast<std::uint32_t>(G.degree()) + H.degree();
  if (deg > kMaxDegree) throw PointLimitExceeded("direct product degree exceeds 65535");

  auto embed = [&](const Perm& a, const Perm& b) {
    std::vector<Point> img(deg);
    for (Point i = 0; i < G.degree(); ++i) img[i] = a.apply(i);
    for (Point i = 0; i < H.degree(); ++i) img[G.degree() + i] = static_cast<Point>(G.degree() + b.apply(i));
    return Perm(std::move(img));
  };

  std::vector<Perm> gens;
  for (const Perm& a : G.generators()) gens.push_back(embed(a, Perm::identity(H.degree())));
  for (const Perm& b : H.generators()) gens.push_back(embed(Perm::identity(G.degree()), b));
  FiniteGroup P = FiniteGroup::generated(gens, cap);
  if (P.order() != G.order() * H.order()) throw Error("internal: direct product order mismatch");
  return P;
}

FiniteGroup as_group(const Subgroup& S) {
  std::vector<Perm> gens;
  for (std::uint32_t g : S.gens) gens.push_back(S.parent->element(g));
  if (gens.empty()) return FiniteGroup::trivial(S.parent->degree());
  return FiniteGroup::generated(gens, S.size());
}

namespace {

// Greedy canonical generating sequence: scan elements in canonical order and
// keep those that enlarge the generated subgroup.
std::vector<std::uint32_t> generating_sequence(const FiniteGroup& G) {
  std::vector<std::uint32_t> gens;
  Subgroup S = trivial_subgroup(G);
  for (std::uint32_t i = 1; i < G.order() && S.size() < G.order(); ++i) {
    if (!S.contains(i)) {
      gens.push_back(i);
      S = subgroup_generated(G, gens);
    }
  }
  return gens;
}

// Try to extend the partial map G->H by the image choice gen -> img, closing
// under left multiplication by already-mapped elements.  Returns false on any
// conflict.  `gmap` / `hused` are rolled back by the caller.
bool extend_map(const FiniteGroup& G, const FiniteGroup& H, std::vector<std::uint32_t>& gmap,
                std::vector<std::uint32_t>& hmapped, std::vector<std::uint32_t>& trail,
                std::uint32_t gen, std::uint32_t img) {
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::deque<std::uint32_t> todo;
  auto assign = [&](std::uint32_t a, std::uint32_t b) {
    if (gmap[a] != kUnset) return gmap[a] == b;
    if (hmapped[b] != kUnset) return false;  // injectivity
    gmap[a] = b;
    hmapped[b] = a;
    trail.push_back(a);
    todo.push_back(a);
    return true;
  };
  if (!assign(gen, img)) return false;
  // Mapped elements so far: everything with gmap set.  Close under products
  // x*y for mapped x, y reachable from the new assignment.
  while (!todo.empty()) {
    std::uint32_t x = todo.front();
    todo.pop_front();
    for (std::uint32_t a = 0; a < G.order(); ++a) {
      if (gmap[a] == kUnset) continue;
      if (!assign(G.product(a, x), H.product(gmap[a], gmap[x]))) return false;
      if (!assign(G.product(x, a), H.product(gmap[x], gmap[a]))) return false;
    }
  }
  return true;
}

bool iso_backtrack(const FiniteGroup& G, const FiniteGroup& H,
                   const std::vector<std::uint32_t>& gens, std::size_t level,
                   std::vector<std::uint32_t>& gmap, std::vector<std::uint32_t>& hmapped) {
  if (level == gens.size()) return true;
  std::uint32_t gen = gens[level];
  if (gmap[gen] != UINT32_MAX)  // already forced by earlier closures
    return iso_backtrack(G, H, gens, level + 1, gmap, hmapped);
  std::uint64_t want = G.element_order(gen);
  for (std::uint32_t h = 0; h < H.order(); ++h) {
    if (hmapped[h] != UINT32_MAX || H.element_order(h) != want) continue;
    std::vector<std::uint32_t> trail;
    if (extend_map(G, H, gmap, hmapped, trail, gen, h) &&
        iso_backtrack(G, H, gens, level + 1, gmap, hmapped))
      return true;
    for (std::uint32_t a : trail) {
      hmapped[gmap[a]] = UINT32_MAX;
      gmap[a] = UINT32_MAX;
    }
  }
  return false;
}

}  // namespace

bool are_isomorphic(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t cap) {
  if (G.order() > cap || H.order() > cap)
    throw OrderCapExceeded("isomorphism test above order cap " + std::to_string(cap));
  if (G.order() != H.order()) return false;

  // Cheap invariant screen before backtracking.
  std::vector<std::uint64_t> og(G.order()), oh(H.order());
  for (std::uint32_t i = 0; i < G.order(); ++i) og[i] = G.element_order(i);
  for (std::uint32_t i = 0; i < H.order(); ++i) oh[i] = H.element_order(i);
  {
    auto sg = og, sh = oh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }

  std::vector<std::uint32_t> gens = generating_sequence(G);
  std::vector<std::uint32_t> gmap(G.order(), UINT32_MAX), hmapped(H.order(), UINT32_MAX);
  gmap[0] = 0;
  hmapped[0] = 0;
  return iso_backtrack(G, H, gens, 0, gmap, hmapped);
}

std::vector<Subgroup> enumerate_subgroups(const FiniteGroup& G, std::uint64_t cap) {
  if (G.order() > cap)
    throw OrderCapExceeded("subgroup enumeration above order cap " + std::to_string(cap));

  std::unordered_set<std::vector<std::uint32_t>, IndexVecHash> seen;
  std::vector<Subgroup> found;
  std::deque<std::size_t> todo;

  Subgroup triv = trivial_subgroup(G);
  seen.insert(triv.members);
  found.push_back(triv);
  todo.push_back(0);

  while (!todo.empty()) {
    std::size_t si = todo.front();
    todo.pop_front();
    for (std::uint32_t g = 1; g < G.order(); ++g) {
      if (found[si].contains(g)) continue;
      std::vector<std::uint32_t> gens = found[si].gens;
      gens.push_back(g);
      Subgroup T = subgroup_generated(G, gens);
      if (seen.insert(T.members).second) {
        found.push_back(std::move(T));
        todo.push_back(found.size() - 1);
      }
    }
  }

  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return found;
}

}  // namespace wrvar
