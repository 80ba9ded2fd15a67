#ifndef WRVAR_CONSTRUCTIONS_HPP
#define WRVAR_CONSTRUCTIONS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wrvar/group.hpp"

namespace wrvar {

// Named permutation realizations.  Generators and element order are pinned so
// results (element indices, witness tuples) are reproducible across runs.
FiniteGroup cyclic_group(std::uint32_t n);
FiniteGroup dihedral_group(std::uint32_t n);  // order 2n, n >= 1
FiniteGroup quaternion_group();               // Q8 on 8 points (right regular)
FiniteGroup symmetric_group(std::uint32_t k);
FiniteGroup alternating_group(std::uint32_t k);
FiniteGroup elementary_abelian_group(std::uint32_t p, std::uint32_t k);  // C_p^k, p prime

// Free nilpotent group of class 2, exponent m, on r generators, for odd m.
// Elements are (a, t) with a in (Z_m)^r and t indexed by pairs i < j; the
// product twists t by t''_{ij} += a'_i a_j.  Realized by the right regular
// action, so degree = order = m^(r + r(r-1)/2).
FiniteGroup free_nilpotent_class2(std::uint32_t r, std::uint32_t m,
                                  std::uint64_t cap = kEnumerationCap);

// Permutational wreath product A Wr B with B acting on itself by right
// translation.  Degree |B| * deg(A); point (x, p) for x in B, p a point of A.
// Generators: A's generators acting on the x = identity block, then B's
// generators permuting blocks.  Order |A|^|B| * |B| (checked against cap
// before any closure is attempted).
FiniteGroup wreath_product(const FiniteGroup& A, const FiniteGroup& B,
                           std::uint64_t cap = kEnumerationCap);

// Expression AST for the group DSL, e.g. "Wr(C(2), C(2) X C(2))".
struct GroupExpr {
  enum class Kind {
    Cyclic,         // C(n)
    Dihedral,       // D(n)
    Quaternion8,    // Q8
    Symmetric,      // S(k)
    Alternating,    // A(k)
    ElemAbelian,    // E(p, k)
    Heis,           // Heis(r, m)
    DirectProduct,  // lhs X rhs
    Wreath,         // Wr(lhs, rhs)
    Perms,          // Perm(deg; cycles, ...)
  };

  Kind kind;
  std::uint32_t a = 0, b = 0;            // numeric parameters
  std::shared_ptr<GroupExpr> lhs, rhs;   // for products
  std::uint32_t degree = 0;              // for Perms
  std::vector<std::vector<std::vector<Point>>> cycles;  // per generator, 0-based

  static GroupExpr cyclic(std::uint32_t n);
  static GroupExpr dihedral(std::uint32_t n);
  static GroupExpr quaternion8();
  static GroupExpr symmetric(std::uint32_t k);
  static GroupExpr alternating(std::uint32_t k);
  static GroupExpr elem_abelian(std::uint32_t p, std::uint32_t k);
  static GroupExpr heis(std::uint32_t r, std::uint32_t m);
  static GroupExpr direct(GroupExpr lhs, GroupExpr rhs);
  static GroupExpr wreath(GroupExpr lhs, GroupExpr rhs);
  static GroupExpr perms(std::uint32_t degree,
                         std::vector<std::vector<std::vector<Point>>> cycles);
};

// Canonical text form: round-trips through parse_group_expr.  Direct products
// print left associated; a right-nested product gets parentheses.
std::string expr_text(const GroupExpr& e);

FiniteGroup build(const GroupExpr& e, std::uint64_t cap = kEnumerationCap);

// Expression describing any concrete group: its generators as cycle lists.
// Used as the replay form in certificates for groups built indirectly.
GroupExpr perm_expr_for(const FiniteGroup& G);

}  // namespace wrvar

#endif
