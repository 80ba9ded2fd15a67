#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <string>

#include "catalog.hpp"
#include "wrvar/variety.hpp"

using namespace wrvar;

namespace {

FiniteGroup heis23() { return free_nilpotent_class2(2, 3); }

}  // namespace

TEST_CASE("wreath criterion regression table") {
  CHECK(decide_criterion(heis23(), cyclic_group(2)).verdict == Verdict::NotEqual);
  CHECK(decide_criterion(heis23(), elementary_abelian_group(2, 2)).verdict == Verdict::Equal);
  CHECK(decide_criterion(dihedral_group(4), cyclic_group(3)).verdict == Verdict::NotEqual);
  CHECK(decide_criterion(dihedral_group(4), elementary_abelian_group(3, 2)).verdict ==
        Verdict::Equal);
  CHECK(decide_criterion(quaternion_group(), cyclic_group(3)).verdict == Verdict::NotEqual);
  CHECK(decide_criterion(quaternion_group(), elementary_abelian_group(3, 2)).verdict ==
        Verdict::Equal);
  CHECK(decide_criterion(cyclic_group(2), cyclic_group(3)).verdict == Verdict::Equal);
  CHECK(decide_criterion(cyclic_group(2), cyclic_group(2)).verdict == Verdict::NotEqual);
}

TEST_CASE("criterion traces record the numbers each condition was decided on") {
  CriterionVerdict v = decide_criterion(heis23(), cyclic_group(2));
  CHECK(v.verdict == Verdict::NotEqual);
  REQUIRE(v.cond_a.has_value());
  CHECK(v.cond_a->exp_a == 3);
  CHECK(v.cond_a->exp_b == 2);
  CHECK(v.cond_a->gcd == 1);
  CHECK(v.cond_a->pass);
  REQUIRE(v.cond_b.has_value());
  CHECK(v.cond_b->class_a == 2);
  CHECK(v.cond_b->abelian_b);
  CHECK(v.cond_b->pass);
  REQUIRE(v.cond_c.has_value());
  CHECK(v.cond_c->required_n == 2);
  CHECK(v.cond_c->required_c == 2);
  CHECK_FALSE(v.cond_c->pass);
  CHECK_FALSE(v.circ_reading);

  // The direct-power condition flips once B holds C_2^2.
  CriterionVerdict w = decide_criterion(heis23(), elementary_abelian_group(2, 2));
  REQUIRE(w.cond_c.has_value());
  CHECK(w.cond_c->pass);

  // A failed condition stops the evaluation; later ones stay unset.
  CriterionVerdict gcd_fail = decide_criterion(cyclic_group(2), cyclic_group(2));
  REQUIRE(gcd_fail.cond_a.has_value());
  CHECK(gcd_fail.cond_a->gcd == 2);
  CHECK_FALSE(gcd_fail.cond_a->pass);
  CHECK_FALSE(gcd_fail.cond_b.has_value());
  CHECK_FALSE(gcd_fail.cond_c.has_value());

  CriterionVerdict b_fail = decide_criterion(cyclic_group(3), dihedral_group(4));
  REQUIRE(b_fail.cond_a.has_value());
  CHECK(b_fail.cond_a->pass);
  REQUIRE(b_fail.cond_b.has_value());
  CHECK(b_fail.cond_b->class_a == 1);
  CHECK_FALSE(b_fail.cond_b->abelian_b);
  CHECK_FALSE(b_fail.cond_b->pass);
  CHECK_FALSE(b_fail.cond_c.has_value());
  CHECK(b_fail.verdict == Verdict::NotEqual);

  CriterionVerdict not_nilp = decide_criterion(symmetric_group(3), cyclic_group(5));
  REQUIRE(not_nilp.cond_b.has_value());
  CHECK_FALSE(not_nilp.cond_b->class_a.has_value());
  CHECK(not_nilp.verdict == Verdict::NotEqual);

  CriterionVerdict triv = decide_criterion(FiniteGroup::trivial(1), cyclic_group(5));
  CHECK(triv.verdict == Verdict::TrivialFactor);
  CHECK_FALSE(triv.cond_a.has_value());
  CHECK_FALSE(triv.cond_b.has_value());
  CHECK_FALSE(triv.cond_c.has_value());
  CHECK(decide_criterion(cyclic_group(5), FiniteGroup::trivial(3)).verdict ==
        Verdict::TrivialFactor);
}

TEST_CASE("cyclic and abelian grids reduce to coprimality") {
  for (std::uint32_t m = 2; m <= 12; ++m)
    for (std::uint32_t n = 2; n <= 12; ++n) {
      Verdict v = decide_criterion(cyclic_group(m), cyclic_group(n)).verdict;
      CHECK(v == (std::gcd(m, n) == 1 ? Verdict::Equal : Verdict::NotEqual));
    }
  auto abelians = wrvar_tests::abelian_catalog_upto(16);
  for (const auto& a : abelians)
    for (const auto& b : abelians) {
      CAPTURE(a.name);
      CAPTURE(b.name);
      bool coprime = std::gcd(exponent(a.group), exponent(b.group)) == 1;
      Verdict v = decide_criterion(a.group, b.group).verdict;
      CHECK(v == (coprime ? Verdict::Equal : Verdict::NotEqual));
    }
}

TEST_CASE("finite generation of the product variety") {
  FinGenResult fg = decide_finite_generation(dihedral_group(4), cyclic_group(3));
  CHECK(fg.holds);  // generated by some finite group even though D4 Wr C3 is not it
  CHECK(decide_criterion(dihedral_group(4), cyclic_group(3)).verdict == Verdict::NotEqual);

  CHECK_FALSE(decide_finite_generation(symmetric_group(3), cyclic_group(5)).holds);
  CHECK_FALSE(decide_finite_generation(cyclic_group(3), symmetric_group(3)).holds);

  // Both conditions are reported even when the first already fails.
  FinGenResult r = decide_finite_generation(cyclic_group(2), cyclic_group(2));
  CHECK_FALSE(r.holds);
  CHECK(r.cond_a.gcd == 2);
  CHECK_FALSE(r.cond_a.pass);
  CHECK(r.cond_b.class_a == 1);
  CHECK(r.cond_b.abelian_b);
  CHECK(r.cond_b.pass);

  CHECK_THROWS_AS(decide_finite_generation(FiniteGroup::trivial(1), cyclic_group(2)),
                  TrivialGroup);
  CHECK_THROWS_AS(decide_finite_generation(cyclic_group(2), FiniteGroup::trivial(1)),
                  TrivialGroup);

  // Equality of the varieties forces finite generation.
  auto cat = wrvar_tests::catalog_upto(12);
  for (const auto& a : cat)
    for (const auto& b : cat) {
      CriterionVerdict v = decide_criterion(a.group, b.group);
      if (v.verdict == Verdict::Equal) CHECK(decide_finite_generation(a.group, b.group).holds);
    }
}

TEST_CASE("product against a single group reads the same criterion") {
  CriterionVerdict v = decide_circ_product(cyclic_group(2), cyclic_group(3));
  CHECK(v.verdict == Verdict::Equal);
  CHECK(v.circ_reading);
  CHECK(decide_circ_product(heis23(), cyclic_group(2)).verdict == Verdict::NotEqual);
  CHECK_THROWS_AS(decide_circ_product(FiniteGroup::trivial(1), cyclic_group(2)), TrivialGroup);
  CHECK_THROWS_AS(decide_circ_product(cyclic_group(2), FiniteGroup::trivial(1)), TrivialGroup);

  auto cat = wrvar_tests::catalog_upto(10);
  for (const auto& a : cat)
    for (const auto& b : cat) {
      CriterionVerdict c = decide_circ_product(a.group, b.group);
      CHECK(c.verdict == decide_criterion(a.group, b.group).verdict);
      CHECK(c.circ_reading);
    }
}

TEST_CASE("comparison group preconditions") {
  CHECK_THROWS_WITH_AS(canonical_witness(cyclic_group(2), cyclic_group(2)),
                       "exponents are not coprime; use an exponent witness instead",
                       PreconditionFailed);
  CHECK_THROWS_WITH_AS(canonical_witness(symmetric_group(3), cyclic_group(5)),
                       "first factor not nilpotent or second not abelian", PreconditionFailed);
  CHECK_THROWS_WITH_AS(canonical_witness(cyclic_group(2), cyclic_group(3)),
                       "the direct-power condition already holds; varieties are equal",
                       PreconditionFailed);
  CHECK_THROWS_WITH_AS(canonical_witness(FiniteGroup::trivial(1), cyclic_group(3)),
                       "both factors must be nontrivial", PreconditionFailed);
  // |D4|^(3^2) * 3^2 and 27^(2^2) * 2^2 both blow the default cap.
  CHECK_THROWS_AS(canonical_witness(dihedral_group(4), cyclic_group(3)), ClosureExceedsCap);
  CHECK_THROWS_AS(canonical_witness(heis23(), cyclic_group(2)), ClosureExceedsCap);
}

TEST_CASE("comparison group builds at a raised cap") {
  GroupExpr ha = GroupExpr::heis(2, 3);
  CanonicalWitness w = canonical_witness(heis23(), cyclic_group(2), 3000000, &ha);
  CHECK(w.n == 2);
  CHECK(w.c == 2);
  CHECK(w.group.order() == 2125764);  // 27^4 * 4
  CHECK(w.group.degree() == 108);
  CHECK(expr_text(w.expr) == "Wr(Heis(2,3),C(2) X C(2))");
  CHECK(w.justification.find("C_2^2") != std::string::npos);
}

TEST_CASE("separation witness pool") {
  FiniteGroup c2 = cyclic_group(2);
  GroupExpr c2e = GroupExpr::cyclic(2);
  CriterionVerdict v = decide_criterion(c2, c2);
  auto pool = separation_witness_pool(c2, c2, v, &c2e);
  REQUIRE(pool.size() == 5);
  CHECK(expr_text(pool[0].expr) == "Wr(C(2),C(2))");
  CHECK(pool[0].order == 8);
  CHECK(expr_text(pool[1].expr) == "Wr(C(2),C(2) X C(2))");
  CHECK(pool[1].order == 64);
  CHECK(expr_text(pool[2].expr) == "Wr(C(2),C(2) X C(2) X C(2))");
  CHECK(pool[2].order == 2048);
  CHECK(expr_text(pool[3].expr) == "Wr(C(2),C(2) X C(2) X C(2) X C(2))");
  CHECK(pool[3].order == 1048576);  // exactly the default cap
  CHECK(expr_text(pool[4].expr) == "C(4)");
  CHECK(pool[4].order == 4);
  CHECK(pool[4].kind.substr(0, 6) == "cyclic");

  // With coprime exponents and a failed direct-power condition the designated
  // comparison group leads the pool.
  FiniteGroup d4 = dihedral_group(4);
  GroupExpr d4e = GroupExpr::dihedral(4);
  CriterionVerdict vd = decide_criterion(d4, cyclic_group(3));
  auto dpool = separation_witness_pool(d4, cyclic_group(3), vd, &d4e, 1ull << 40);
  REQUIRE(!dpool.empty());
  CHECK(expr_text(dpool[0].expr) == "Wr(D(4),C(3) X C(3))");
  CHECK(dpool[0].order == 9ull * 8 * 8 * 8 * 8 * 8 * 8 * 8 * 8 * 8);
  CHECK(dpool[0].kind.find("C_3^2") != std::string::npos);
}

TEST_CASE("separating law for the square of C2") {
  FiniteGroup c2 = cyclic_group(2);
  GroupExpr c2e = GroupExpr::cyclic(2);
  SeparationOutcome out = find_separating_law(c2, c2, {}, &c2e, &c2e);
  CHECK(out.frontier.words_tried == 2);
  CHECK(out.frontier.laws_found == 1);
  CHECK(out.frontier.witness_scans == 2);
  CHECK(out.frontier.words_skipped_over_cap == 0);
  REQUIRE(out.certificate.has_value());
  const SeparationCertificate& cert = *out.certificate;
  CHECK(cert.word_display == "[[x1,x2],x3]");
  CHECK(expr_text(cert.law_expr) == "Wr(C(2),C(2))");
  CHECK(cert.law_check.exhaustive);
  CHECK(cert.law_check.status == LawStatus::Law);
  CHECK(cert.law_check.tuples_checked == 512);
  CHECK(expr_text(cert.violation.witness_expr) == "Wr(C(2),C(2) X C(2))");
  CHECK(cert.violation.check.status == LawStatus::Violated);
  CHECK(cert.violation.check.exhaustive);
  REQUIRE(cert.violation.check.violating_tuple.has_value());
  CHECK(cert.violation.check.violating_tuple->size() == 3);

  // The recorded tuple really violates the word in the witness group.
  FiniteGroup X = build(cert.violation.witness_expr);
  CHECK(X.order() == 64);
  CHECK_FALSE(evaluate(X, cert.word, *cert.violation.check.violating_tuple).is_identity());
}

TEST_CASE("separation requires a NotEqual verdict") {
  CHECK_THROWS_AS(find_separating_law(cyclic_group(2), cyclic_group(3)), PreconditionFailed);
  CHECK_THROWS_AS(find_separating_law(FiniteGroup::trivial(1), cyclic_group(2)),
                  PreconditionFailed);
}

TEST_CASE("bounded separation search reports an honest miss") {
  // exp(C4 Wr C6) = 24, so the exponent word holds everywhere in the pool; the
  // commutator leads do not fit under the scan cap.
  SearchBudget b;
  b.max_words = 200;
  SeparationOutcome out = find_separating_law(cyclic_group(4), cyclic_group(6), b);
  CHECK_FALSE(out.certificate.has_value());
  CHECK(out.frontier.words_tried == 3 + b.max_words);
  CHECK(out.frontier.words_skipped_over_cap >= 2);
  CHECK(out.frontier.laws_found >= 1);

  SearchBudget hb;
  hb.max_words = 100;
  SeparationOutcome hout = find_separating_law(heis23(), cyclic_group(2), hb);
  CHECK_FALSE(hout.certificate.has_value());
  CHECK(hout.frontier.words_tried == 3 + hb.max_words);
  CHECK(hout.frontier.words_skipped_over_cap >= 1);
  CHECK(hout.frontier.laws_found >= 1);  // x1^6 holds but every pool member satisfies it
}

TEST_CASE("variety membership") {
  SearchBudget small;
  small.max_words = 300;

  MembershipResult m = is_in_variety(cyclic_group(4), dihedral_group(4), small);
  CHECK(m.status == Membership::Member);
  CHECK(m.witness == "isomorphic to a subgroup");
  CHECK(m.power_used == 1);

  MembershipResult q = is_in_variety(elementary_abelian_group(2, 2), quaternion_group(), small);
  CHECK(q.status == Membership::Member);
  CHECK(q.witness == "isomorphic to a quotient of a subgroup");
  CHECK(q.power_used == 1);

  MembershipResult self = is_in_variety(dihedral_group(4), dihedral_group(4), small);
  CHECK(self.status == Membership::Member);
  CHECK(self.power_used == 1);

  MembershipResult n = is_in_variety(cyclic_group(3), dihedral_group(4), small);
  CHECK(n.status == Membership::NotMember);
  REQUIRE(n.law.has_value());
  CHECK(word_text(*n.law) == "x1^4");
  CHECK(n.power_used == 0);

  MembershipResult n2 = is_in_variety(cyclic_group(5), cyclic_group(4), small);
  CHECK(n2.status == Membership::NotMember);
  REQUIRE(n2.law.has_value());
  CHECK(word_text(*n2.law) == "x1^4");

  // The trivial group lies in every variety; only x1 itself separates from a
  // trivial generator.
  CHECK(is_in_variety(FiniteGroup::trivial(1), cyclic_group(2), small).status ==
        Membership::Member);
  MembershipResult t = is_in_variety(cyclic_group(2), FiniteGroup::trivial(1), small);
  CHECK(t.status == Membership::NotMember);
  REQUIRE(t.law.has_value());
  CHECK(word_text(*t.law) == "x1");
}

TEST_CASE("membership via direct powers") {
  SearchBudget small;
  small.max_words = 300;
  MembershipResult m =
      is_in_variety(elementary_abelian_group(2, 4), elementary_abelian_group(2, 2), small);
  CHECK(m.status == Membership::Member);
  CHECK(m.witness == "isomorphic to a subgroup");
  CHECK(m.power_used == 2);

  SearchBudget flat = small;
  flat.max_power = 1;
  MembershipResult stuck =
      is_in_variety(elementary_abelian_group(2, 4), elementary_abelian_group(2, 2), flat);
  CHECK(stuck.status == Membership::Inconclusive);
}
