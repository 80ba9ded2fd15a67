#include "wrvar/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "wrvar/errors.hpp"

namespace wrvar {

namespace {

Perm cycle_perm(Point degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Point from = cyc[i];
      Point to = cyc[(i + 1) % cyc.size()];
      if (from >= degree || to >= degree) throw BadParameter("cycle point out of range");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

Perm full_cycle(Point degree) {
  std::vector<Point> c(degree);
  std::iota(c.begin(), c.end(), Point{0});
  return cycle_perm(degree, {c});
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

FiniteGroup cyclic_group(std::uint32_t n) {
  if (n < 1) throw BadParameter("cyclic group order must be positive");
  if (n > kMaxDegree) throw PointLimitExceeded("cyclic group degree above the point limit");
  if (n == 1) return FiniteGroup::trivial(1);
  return FiniteGroup::generated({full_cycle(static_cast<Point>(n))});
}

FiniteGroup dihedral_group(std::uint32_t n) {
  if (n < 1) throw BadParameter("dihedral parameter must be positive");
  if (n == 1) return FiniteGroup::generated({cycle_perm(2, {{0, 1}})});
  if (n == 2) return FiniteGroup::generated({cycle_perm(4, {{0, 1}}), cycle_perm(4, {{2, 3}})});
  if (n > kMaxDegree) throw PointLimitExceeded("dihedral group degree above the point limit");
  Point deg = static_cast<Point>(n);
  std::vector<Point> flip(deg);
  for (std::uint32_t i = 0; i < n; ++i) flip[i] = static_cast<Point>((n - i) % n);
  return FiniteGroup::generated({full_cycle(deg), Perm(std::move(flip))});
}

FiniteGroup quaternion_group() {
  // Right regular action on 1, -1, i, -i, j, -j, k, -k (in that order).
  Perm gi({2, 3, 1, 0, 7, 6, 4, 5});
  Perm gj({4, 5, 6, 7, 1, 0, 3, 2});
  return FiniteGroup::generated({gi, gj});
}

FiniteGroup symmetric_group(std::uint32_t k) {
  if (k < 1) throw BadParameter("symmetric group needs at least one point");
  if (k > kMaxDegree) throw PointLimitExceeded("symmetric group degree above the point limit");
  if (k == 1) return FiniteGroup::trivial(1);
  Point deg = static_cast<Point>(k);
  if (k == 2) return FiniteGroup::generated({cycle_perm(deg, {{0, 1}})});
  return FiniteGroup::generated({cycle_perm(deg, {{0, 1}}), full_cycle(deg)});
}

FiniteGroup alternating_group(std::uint32_t k) {
  if (k < 1) throw BadParameter("alternating group needs at least one point");
  if (k > kMaxDegree) throw PointLimitExceeded("alternating group degree above the point limit");
  if (k <= 2) return FiniteGroup::trivial(static_cast<Point>(k));
  Point deg = static_cast<Point>(k);
  Perm three = cycle_perm(deg, {{0, 1, 2}});
  if (k == 3) return FiniteGroup::generated({three});
  if (k % 2 == 1) return FiniteGroup::generated({three, full_cycle(deg)});
  std::vector<Point> tail(k - 1);
  std::iota(tail.begin(), tail.end(), Point{1});  // (2 3 ... k), even
  return FiniteGroup::generated({three, cycle_perm(deg, {tail})});
}

FiniteGroup elementary_abelian_group(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw BadParameter("elementary abelian base must be prime");
  if (k < 1) throw BadParameter("elementary abelian rank must be positive");
  std::uint64_t deg = static_cast<std::uint64_t>(p) * k;
  if (deg > kMaxDegree) throw PointLimitExceeded("elementary abelian degree above the point limit");
  std::vector<Perm> gens;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<Point> cyc(p);
    std::iota(cyc.begin(), cyc.end(), static_cast<Point>(i * p));
    gens.push_back(cycle_perm(static_cast<Point>(deg), {cyc}));
  }
  return FiniteGroup::generated(std::move(gens));
}

FiniteGroup free_nilpotent_class2(std::uint32_t r, std::uint32_t m, std::uint64_t cap) {
  if (r < 1) throw BadParameter("rank must be positive");
  if (m < 1 || m % 2 == 0) throw BadParameter("exponent must be odd");
  std::uint32_t npairs = r * (r - 1) / 2;
  std::uint32_t dims = r + npairs;

  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < dims; ++i) {
    if (order > cap / m) throw ClosureExceedsCap("group order exceeds the enumeration cap");
    order *= m;
  }
  if (order > kMaxDegree) throw PointLimitExceeded("regular degree above the point limit");

  // Element index <-> coordinate vector (a_0..a_{r-1}, t_0..t_{npairs-1}),
  // mixed radix base m, first coordinate most significant.
  auto decode = [&](std::uint64_t x) {
    std::vector<std::uint32_t> v(dims);
    for (std::uint32_t i = dims; i > 0; --i) {
      v[i - 1] = static_cast<std::uint32_t>(x % m);
      x /= m;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::uint32_t>& v) {
    std::uint64_t x = 0;
    for (std::uint32_t c : v) x = x * m + c;
    return x;
  };
  auto pair_index = [&](std::uint32_t i, std::uint32_t j) {  // i < j
    // Pairs ordered (0,1), (0,2), ..., (0,r-1), (1,2), ...
    return r + (i * (2 * r - i - 1)) / 2 + (j - i - 1);
  };
  // (a, t) * (a', t'): a'' = a + a', t''_{ij} = t_{ij} + t'_{ij} + a'_i a_j.
  auto multiply = [&](const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
    std::vector<std::uint32_t> z(dims);
    for (std::uint32_t i = 0; i < dims; ++i) z[i] = (x[i] + y[i]) % m;
    for (std::uint32_t i = 0; i < r; ++i)
      for (std::uint32_t j = i + 1; j < r; ++j) {
        std::uint32_t p = pair_index(i, j);
        z[p] = (z[p] + y[i] * x[j]) % m;
      }
    return z;
  };

  // Right regular action of each generator x_g = (e_g, 0).
  std::vector<Perm> gens;
  for (std::uint32_t g = 0; g < r; ++g) {
    std::vector<std::uint32_t> xg(dims, 0);
    xg[g] = 1 % m;
    std::vector<Point> img(order);
    for (std::uint64_t x = 0; x < order; ++x)
      img[x] = static_cast<Point>(encode(multiply(decode(x), xg)));
    gens.push_back(Perm(std::move(img)));
  }
  FiniteGroup G = FiniteGroup::generated(std::move(gens), cap);
  if (G.order() != order) throw Error("regular realization has unexpected order");
  return G;
}

FiniteGroup wreath_product(const FiniteGroup& A, const FiniteGroup& B, std::uint64_t cap) {
  std::uint64_t order = B.order();
  for (std::uint64_t i = 0; i < B.order(); ++i) {
    if (order > cap / A.order()) throw ClosureExceedsCap("wreath product order exceeds the cap");
    order *= A.order();
  }
  std::uint64_t deg = static_cast<std::uint64_t>(B.order()) * A.degree();
  if (deg > kMaxDegree) throw PointLimitExceeded("wreath product degree above the point limit");
  Point degree = static_cast<Point>(deg);
  Point dA = A.degree();

  std::vector<Perm> gens;
  // A's generators on the block of the identity of B (block 0: the identity
  // is always first in canonical element order).
  for (const Perm& g : A.generators()) {
    std::vector<Point> img(degree);
    std::iota(img.begin(), img.end(), Point{0});
    for (Point p = 0; p < dA; ++p) img[p] = g.apply(p);
    gens.push_back(Perm(std::move(img)));
  }
  // B's generators permute blocks: (x, p) -> (x b, p) by right translation.
  for (const Perm& b : B.generators()) {
    std::vector<Point> img(degree);
    for (std::uint32_t x = 0; x < B.order(); ++x) {
      std::uint32_t xb = B.product(x, *B.index_of(b));
      for (Point p = 0; p < dA; ++p)
        img[x * dA + p] = static_cast<Point>(xb * dA + p);
    }
    gens.push_back(Perm(std::move(img)));
  }
  FiniteGroup W = FiniteGroup::generated(std::move(gens), cap);
  if (W.order() != order) throw Error("wreath product has unexpected order");
  return W;
}

GroupExpr GroupExpr::cyclic(std::uint32_t n) { return {Kind::Cyclic, n, 0, nullptr, nullptr, 0, {}}; }
GroupExpr GroupExpr::dihedral(std::uint32_t n) { return {Kind::Dihedral, n, 0, nullptr, nullptr, 0, {}}; }
GroupExpr GroupExpr::quaternion8() { return {Kind::Quaternion8, 0, 0, nullptr, nullptr, 0, {}}; }
GroupExpr GroupExpr::symmetric(std::uint32_t k) { return {Kind::Symmetric, k, 0, nullptr, nullptr, 0, {}}; }
GroupExpr GroupExpr::alternating(std::uint32_t k) { return {Kind::Alternating, k, 0, nullptr, nullptr, 0, {}}; }
GroupExpr GroupExpr::elem_abelian(std::uint32_t p, std::uint32_t k) {
  return {Kind::ElemAbelian, p, k, nullptr, nullptr, 0, {}};
}
GroupExpr GroupExpr::heis(std::uint32_t r, std::uint32_t m) {
  return {Kind::Heis, r, m, nullptr, nullptr, 0, {}};
}
GroupExpr GroupExpr::direct(GroupExpr lhs, GroupExpr rhs) {
  return {Kind::DirectProduct, 0, 0, std::make_shared<GroupExpr>(std::move(lhs)),
          std::make_shared<GroupExpr>(std::move(rhs)), 0, {}};
}
GroupExpr GroupExpr::wreath(GroupExpr lhs, GroupExpr rhs) {
  return {Kind::Wreath, 0, 0, std::make_shared<GroupExpr>(std::move(lhs)),
          std::make_shared<GroupExpr>(std::move(rhs)), 0, {}};
}
GroupExpr GroupExpr::perms(std::uint32_t degree,
                           std::vector<std::vector<std::vector<Point>>> cycles) {
  GroupExpr e{Kind::Perms, 0, 0, nullptr, nullptr, degree, std::move(cycles)};
  return e;
}

std::string expr_text(const GroupExpr& e) {
  switch (e.kind) {
    case GroupExpr::Kind::Cyclic: return "C(" + std::to_string(e.a) + ")";
    case GroupExpr::Kind::Dihedral: return "D(" + std::to_string(e.a) + ")";
    case GroupExpr::Kind::Quaternion8: return "Q8";
    case GroupExpr::Kind::Symmetric: return "S(" + std::to_string(e.a) + ")";
    case GroupExpr::Kind::Alternating: return "A(" + std::to_string(e.a) + ")";
    case GroupExpr::Kind::ElemAbelian:
      return "E(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case GroupExpr::Kind::Heis:
      return "Heis(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
    case GroupExpr::Kind::DirectProduct: {
      std::string l = expr_text(*e.lhs);
      std::string r = expr_text(*e.rhs);
      if (e.rhs->kind == GroupExpr::Kind::DirectProduct) r = "(" + r + ")";
      return l + " X " + r;
    }
    case GroupExpr::Kind::Wreath:
      return "Wr(" + expr_text(*e.lhs) + "," + expr_text(*e.rhs) + ")";
    case GroupExpr::Kind::Perms: {
      std::string out = "Perm(" + std::to_string(e.degree) + ";";
      bool first_gen = true;
      for (const auto& gen : e.cycles) {
        if (!first_gen) out += ",";
        first_gen = false;
        if (gen.empty()) out += "()";
        for (const auto& cyc : gen) {
          out += "(";
          for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(cyc[i] + 1);  // 1-based in text
          }
          out += ")";
        }
      }
      return out + ")";
    }
  }
  throw Error("unhandled expression kind");
}

FiniteGroup build(const GroupExpr& e, std::uint64_t cap) {
  switch (e.kind) {
    case GroupExpr::Kind::Cyclic: return cyclic_group(e.a);
    case GroupExpr::Kind::Dihedral: return dihedral_group(e.a);
    case GroupExpr::Kind::Quaternion8: return quaternion_group();
    case GroupExpr::Kind::Symmetric: {
      FiniteGroup G = symmetric_group(e.a);
      if (G.order() > cap) throw ClosureExceedsCap("group order exceeds the cap");
      return G;
    }
    case GroupExpr::Kind::Alternating: {
      FiniteGroup G = alternating_group(e.a);
      if (G.order() > cap) throw ClosureExceedsCap("group order exceeds the cap");
      return G;
    }
    case GroupExpr::Kind::ElemAbelian: {
      FiniteGroup G = elementary_abelian_group(e.a, e.b);
      if (G.order() > cap) throw ClosureExceedsCap("group order exceeds the cap");
      return G;
    }
    case GroupExpr::Kind::Heis: return free_nilpotent_class2(e.a, e.b, cap);
    case GroupExpr::Kind::DirectProduct:
      return direct_product(build(*e.lhs, cap), build(*e.rhs, cap), cap);
    case GroupExpr::Kind::Wreath:
      return wreath_product(build(*e.lhs, cap), build(*e.rhs, cap), cap);
    case GroupExpr::Kind::Perms: {
      if (e.degree > kMaxDegree) throw PointLimitExceeded("degree above the point limit");
      std::vector<Perm> gens;
      for (const auto& gen : e.cycles) gens.push_back(cycle_perm(static_cast<Point>(e.degree), gen));
      if (gens.empty()) return FiniteGroup::trivial(static_cast<Point>(std::max(1u, e.degree)));
      return FiniteGroup::generated(std::move(gens), cap);
    }
  }
  throw Error("unhandled expression kind");
}

GroupExpr perm_expr_for(const FiniteGroup& G) {
  std::vector<std::vector<std::vector<Point>>> gens;
  for (const Perm& g : G.generators()) {
    std::vector<std::vector<Point>> cycles;
    std::vector<bool> seen(g.degree(), false);
    for (Point s = 0; s < g.degree(); ++s) {
      if (seen[s] || g.apply(s) == s) continue;
      std::vector<Point> cyc;
      Point p = s;
      do {
        seen[p] = true;
        cyc.push_back(p);
        p = g.apply(p);
      } while (p != s);
      cycles.push_back(std::move(cyc));
    }
    gens.push_back(std::move(cycles));
  }
  if (gens.empty()) gens.push_back({});  // a trivial group still needs one generator entry
  return GroupExpr::perms(G.degree(), std::move(gens));
}

}  // namespace wrvar
