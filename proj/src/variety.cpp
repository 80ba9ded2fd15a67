#include "wrvar/variety.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "wrvar/errors.hpp"

namespace wrvar {

namespace {

CondA make_cond_a(const FiniteGroup& A, const FiniteGroup& B) {
  CondA a;
  a.exp_a = exponent(A);
  a.exp_b = exponent(B);
  a.gcd = std::gcd(a.exp_a, a.exp_b);
  a.pass = a.gcd == 1;
  return a;
}

CondB make_cond_b(const FiniteGroup& A, const FiniteGroup& B) {
  CondB b;
  b.class_a = nilpotency_class(A);
  b.abelian_b = is_abelian(B);
  b.pass = b.class_a.has_value() && b.abelian_b;
  return b;
}

}  // namespace

CriterionVerdict decide_criterion(const FiniteGroup& A, const FiniteGroup& B) {
  CriterionVerdict v;
  if (A.order() == 1 || B.order() == 1) {
    v.verdict = Verdict::TrivialFactor;
    return v;
  }
  v.cond_a = make_cond_a(A, B);
  if (!v.cond_a->pass) {
    v.verdict = Verdict::NotEqual;
    return v;
  }
  v.cond_b = make_cond_b(A, B);
  if (!v.cond_b->pass) {
    v.verdict = Verdict::NotEqual;
    return v;
  }
  CondC c;
  c.required_n = v.cond_a->exp_b;
  c.required_c = *v.cond_b->class_a;
  c.pass = contains_direct_power(B, c.required_n, c.required_c);
  v.cond_c = c;
  v.verdict = c.pass ? Verdict::Equal : Verdict::NotEqual;
  return v;
}

FinGenResult decide_finite_generation(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.order() == 1 || B.order() == 1) throw TrivialGroup("both factors must be nontrivial");
  FinGenResult r;
  r.cond_a = make_cond_a(A, B);
  r.cond_b = make_cond_b(A, B);
  r.holds = r.cond_a.pass && r.cond_b.pass;
  return r;
}

CriterionVerdict decide_circ_product(const FiniteGroup& A, const FiniteGroup& G) {
  if (A.order() == 1 || G.order() == 1) throw TrivialGroup("both factors must be nontrivial");
  CriterionVerdict v = decide_criterion(A, G);
  v.circ_reading = true;
  return v;
}

namespace {

GroupExpr expr_or_perms(const GroupExpr* given, const FiniteGroup& G) {
  return given ? *given : perm_expr_for(G);
}

// C(n) X C(n) X ... (c factors), left associated.
GroupExpr direct_power_expr(std::uint64_t n, std::uint32_t c) {
  GroupExpr e = GroupExpr::cyclic(static_cast<std::uint32_t>(n));
  for (std::uint32_t i = 1; i < c; ++i)
    e = GroupExpr::direct(std::move(e), GroupExpr::cyclic(static_cast<std::uint32_t>(n)));
  return e;
}

// |A|^t * t, or nullopt on overflow of the cap.
std::optional<std::uint64_t> wreath_order(std::uint64_t base, std::uint64_t t,
                                          std::uint64_t cap) {
  std::uint64_t order = t;
  for (std::uint64_t i = 0; i < t; ++i) {
    if (order > cap / base) return std::nullopt;
    order *= base;
  }
  return order;
}

}  // namespace

CanonicalWitness canonical_witness(const FiniteGroup& A, const FiniteGroup& B,
                                   std::uint64_t cap, const GroupExpr* expr_a) {
  CriterionVerdict v = decide_criterion(A, B);
  if (v.verdict == Verdict::TrivialFactor)
    throw PreconditionFailed("both factors must be nontrivial");
  if (!v.cond_a || !v.cond_a->pass)
    throw PreconditionFailed("exponents are not coprime; use an exponent witness instead");
  if (!v.cond_b || !v.cond_b->pass)
    throw PreconditionFailed("first factor not nilpotent or second not abelian");
  if (v.cond_c->pass)
    throw PreconditionFailed("the direct-power condition already holds; varieties are equal");

  std::uint64_t n = v.cond_c->required_n;
  std::uint32_t c = v.cond_c->required_c;
  if (n > UINT32_MAX) throw ClosureExceedsCap("witness top order exceeds the cap");

  std::uint64_t t = 1;
  for (std::uint32_t i = 0; i < c; ++i) {
    if (t > cap / n) throw ClosureExceedsCap("witness top order exceeds the cap");
    t *= n;
  }
  std::optional<std::uint64_t> order = wreath_order(A.order(), t, cap);
  if (!order) throw ClosureExceedsCap("witness order exceeds the enumeration cap");
  if (t > kMaxDegree / std::max<std::uint32_t>(A.degree(), 1))
    throw PointLimitExceeded("witness degree above the point limit");

  GroupExpr top = direct_power_expr(n, c);
  std::string why =
      "wreath product of the first factor by C_" + std::to_string(n) + "^" + std::to_string(c) +
      "; the top group has exponent " + std::to_string(n) +
      " and is abelian, so it generates the same variety as the second factor, and the "
      "wreath product both lies in and generates the product variety";
  return CanonicalWitness{wreath_product(A, build(top, cap), cap),
                          GroupExpr::wreath(expr_or_perms(expr_a, A), top), std::move(why), n, c};
}

std::vector<WitnessSpec> separation_witness_pool(const FiniteGroup& A, const FiniteGroup& B,
                                                 const CriterionVerdict& verdict,
                                                 const GroupExpr* expr_a, std::uint64_t cap) {
  std::vector<WitnessSpec> pool;
  GroupExpr base_expr = expr_or_perms(expr_a, A);
  std::set<std::string> seen;
  auto push = [&](GroupExpr expr, std::string kind, std::uint64_t order) {
    std::string key = expr_text(expr);
    if (seen.insert(key).second) pool.push_back({std::move(expr), std::move(kind), order});
  };

  // The designated comparison group, when conditions single out one.
  bool canonical_case = verdict.cond_a && verdict.cond_a->pass && verdict.cond_b &&
                        verdict.cond_b->pass && verdict.cond_c && !verdict.cond_c->pass;
  if (canonical_case) {
    std::uint64_t n = verdict.cond_c->required_n;
    std::uint32_t c = verdict.cond_c->required_c;
    std::uint64_t t = 1;
    bool fits = n <= UINT32_MAX;
    for (std::uint32_t i = 0; fits && i < c; ++i) {
      if (t > cap / n) fits = false;
      else t *= n;
    }
    std::optional<std::uint64_t> order =
        fits ? wreath_order(A.order(), t, cap) : std::nullopt;
    if (order && t <= kMaxDegree / std::max<std::uint32_t>(A.degree(), 1)) {
      push(GroupExpr::wreath(base_expr, direct_power_expr(n, c)),
           "wreath product by C_" + std::to_string(n) + "^" + std::to_string(c) +
               ": abelian top of exponent " + std::to_string(n) +
               " lies in the variety of the second factor",
           *order);
    }
  }

  // Wreath products A Wr C_e^k where e is the exponent of B's abelianization:
  // C_e^k lies in var(B) (power of an abelian quotient), so the wreath product
  // lies in var(A)var(B).
  std::uint64_t e;
  if (is_abelian(B)) {
    e = exponent(B);
  } else {
    Subgroup derived = commutator_subgroup(B, full_subgroup(B), full_subgroup(B));
    e = exponent(quotient_group(B, derived));
  }
  if (e > 1) {
    std::uint64_t t = 1;
    for (std::uint32_t k = 1; k <= 8; ++k) {
      if (t > cap / e) break;
      t *= e;
      std::optional<std::uint64_t> order = wreath_order(A.order(), t, cap);
      if (!order) break;
      if (t > kMaxDegree / std::max<std::uint32_t>(A.degree(), 1)) break;
      push(GroupExpr::wreath(base_expr, direct_power_expr(e, k)),
           "wreath product by C_" + std::to_string(e) + "^" + std::to_string(k) +
               ": an abelian quotient of the second factor has exponent " + std::to_string(e),
           *order);
    }
  }

  // Cyclic extensions C_{uv}: C_u embeds in A and C_v in B (powers of an
  // element), and C_{uv} is an extension of C_u by C_v.
  auto order_divisors = [](const FiniteGroup& G) {
    std::set<std::uint64_t> divs;
    for (std::uint32_t i = 0; i < G.order(); ++i) {
      std::uint64_t o = G.element_order(i);
      for (std::uint64_t d = 2; d <= o; ++d)
        if (o % d == 0) divs.insert(d);
    }
    return divs;
  };
  std::set<std::uint64_t> du = order_divisors(A), dv = order_divisors(B);
  std::vector<std::pair<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>>> cyclics;
  for (std::uint64_t u : du)
    for (std::uint64_t v : dv) {
      std::uint64_t uv = u * v;
      if (uv <= cap && uv <= kMaxDegree) cyclics.push_back({uv, {u, v}});
    }
  std::sort(cyclics.begin(), cyclics.end());
  for (auto& [uv, parts] : cyclics) {
    push(GroupExpr::cyclic(static_cast<std::uint32_t>(uv)),
         "cyclic extension of C_" + std::to_string(parts.first) + " (a subgroup of the first "
         "factor) by C_" + std::to_string(parts.second) + " (a subgroup of the second)",
         uv);
  }
  return pool;
}

namespace {

struct Candidate {
  Word word;
  std::string display;
};

// Lead candidates in canonical search order: left-normed commutators of
// increasing weight, then the exponent word of the wreath product.
std::vector<Candidate> lead_candidates(const SearchBudget& budget, std::uint64_t exp_w) {
  std::vector<Candidate> lead;
  if (budget.use_hall_basis) {
    std::string text = "x1";
    for (std::uint32_t w = 2; w <= budget.max_arity; ++w) {
      text = "[" + text + ",x" + std::to_string(w) + "]";
      lead.push_back({left_normed_commutator(w), text});
    }
  }
  if (exp_w >= 2 && exp_w <= INT32_MAX) {
    Word w(1, {{0, static_cast<std::int32_t>(exp_w)}});
    lead.push_back({w, word_text(w)});
  }
  return lead;
}

bool scan_fits(std::uint64_t order, std::uint32_t vars, std::uint64_t scan_cap) {
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < vars; ++i) {
    if (total > scan_cap / order) return false;
    total *= order;
  }
  return true;
}

}  // namespace

SeparationOutcome find_separating_law(const FiniteGroup& A, const FiniteGroup& B,
                                      const SearchBudget& budget, const GroupExpr* expr_a,
                                      const GroupExpr* expr_b, std::uint64_t cap,
                                      std::uint64_t scan_cap) {
  CriterionVerdict verdict = decide_criterion(A, B);
  if (verdict.verdict != Verdict::NotEqual)
    throw PreconditionFailed("separation requires a NotEqual verdict");

  GroupExpr ea = expr_or_perms(expr_a, A);
  GroupExpr eb = expr_or_perms(expr_b, B);
  GroupExpr law_expr = GroupExpr::wreath(ea, eb);
  FiniteGroup W = wreath_product(A, B, cap);

  std::vector<WitnessSpec> pool = separation_witness_pool(A, B, verdict, &ea, cap);
  std::vector<std::optional<FiniteGroup>> built(pool.size());
  std::vector<bool> dead(pool.size(), false);
  auto witness = [&](std::size_t i) -> const FiniteGroup* {
    if (dead[i]) return nullptr;
    if (!built[i]) {
      try {
        built[i] = build(pool[i].expr, cap);
      } catch (const Error&) {
        dead[i] = true;
        return nullptr;
      }
    }
    return &*built[i];
  };

  SeparationOutcome out;
  auto try_word = [&](const Word& w, const std::string& display) -> bool {
    ++out.frontier.words_tried;
    if (!scan_fits(W.order(), w.used_vars(), scan_cap)) {
      ++out.frontier.words_skipped_over_cap;
      return false;
    }
    LawCheckResult on_w = is_law(W, w, ExhaustiveMode{}, scan_cap);
    if (on_w.status != LawStatus::Law) return false;
    ++out.frontier.laws_found;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      const FiniteGroup* X = witness(i);
      if (!X) continue;
      ++out.frontier.witness_scans;
      LawCheckResult on_x =
          scan_fits(X->order(), w.used_vars(), scan_cap)
              ? is_law(*X, w, ExhaustiveMode{}, scan_cap)
              : is_law(*X, w, SampledMode{budget.sample_count, budget.seed});
      if (on_x.status == LawStatus::Violated) {
        out.certificate = SeparationCertificate{
            w, display, law_expr, on_w, ViolationSide{pool[i].expr, pool[i].kind, on_x}};
        return true;
      }
    }
    return false;
  };

  for (const Candidate& c : lead_candidates(budget, exponent(W)))
    if (try_word(c.word, c.display)) return out;

  WordEnumerator en(budget.max_arity, budget.max_length);
  std::uint64_t emitted = 0;
  while (emitted < budget.max_words) {
    std::optional<Word> w = en.next();
    if (!w) break;
    ++emitted;
    if (try_word(*w, word_text(*w))) return out;
  }
  return out;
}

namespace {

// Does some quotient of a subgroup of P realize G?  Sizes are pruned by
// Lagrange before any isomorphism test runs.
std::optional<std::string> find_section(const FiniteGroup& P, const FiniteGroup& G,
                                        std::uint64_t sub_cap) {
  if (P.order() > sub_cap) return std::nullopt;
  std::vector<Subgroup> subs = enumerate_subgroups(P, sub_cap);
  for (const Subgroup& S : subs) {
    if (S.size() % G.order() != 0) continue;
    if (S.size() == G.order()) {
      if (are_isomorphic(as_group(S), G)) return "isomorphic to a subgroup";
      continue;
    }
    FiniteGroup Sg = as_group(S);
    for (const Subgroup& N : enumerate_subgroups(Sg, sub_cap)) {
      if (N.size() * G.order() != Sg.order()) continue;
      if (!is_normal(Sg, N)) continue;
      if (are_isomorphic(quotient_group(Sg, N), G))
        return "isomorphic to a quotient of a subgroup";
    }
  }
  return std::nullopt;
}

}  // namespace

MembershipResult is_in_variety(const FiniteGroup& G, const FiniteGroup& H,
                               const SearchBudget& budget, std::uint64_t scan_cap) {
  MembershipResult res;

  // |G| must divide |H|^k for a section to exist at any power.
  std::uint64_t g = G.order();
  std::uint64_t shrunk = g;
  while (true) {
    std::uint64_t d = std::gcd(shrunk, H.order());
    if (d == 1) break;
    while (shrunk % d == 0) shrunk /= d;
  }
  bool order_possible = shrunk == 1;

  if (order_possible && H.order() <= kSubgroupCap) {
    if (auto why = find_section(H, G, kSubgroupCap)) {
      res.status = Membership::Member;
      res.witness = *why;
      res.power_used = 1;
      return res;
    }
  }

  // Law screen: a law of H that fails in G rules membership out.
  auto screen = [&](const Word& w) -> bool {
    if (!scan_fits(H.order(), w.used_vars(), scan_cap)) return false;
    if (is_law(H, w, ExhaustiveMode{}, scan_cap).status != LawStatus::Law) return false;
    LawCheckResult on_g = scan_fits(G.order(), w.used_vars(), scan_cap)
                              ? is_law(G, w, ExhaustiveMode{}, scan_cap)
                              : is_law(G, w, SampledMode{budget.sample_count, budget.seed});
    if (on_g.status != LawStatus::Violated) return false;
    res.status = Membership::NotMember;
    res.law = w;
    return true;
  };
  for (const Candidate& c : lead_candidates(budget, exponent(H)))
    if (screen(c.word)) return res;
  WordEnumerator en(budget.max_arity, budget.max_length);
  std::uint64_t emitted = 0;
  while (emitted < budget.max_words) {
    std::optional<Word> w = en.next();
    if (!w) break;
    ++emitted;
    if (screen(*w)) return res;
  }

  if (order_possible) {
    FiniteGroup P = H;
    for (std::uint32_t k = 2; k <= budget.max_power; ++k) {
      if (P.order() > kSubgroupCap / H.order()) break;
      P = direct_product(P, H);
      if (auto why = find_section(P, G, kSubgroupCap)) {
        res.status = Membership::Member;
        res.witness = *why;
        res.power_used = k;
        return res;
      }
    }
  }
  return res;  // Inconclusive
}

}  // namespace wrvar
