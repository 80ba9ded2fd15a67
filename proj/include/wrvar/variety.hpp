#ifndef WRVAR_VARIETY_HPP
#define WRVAR_VARIETY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrvar/constructions.hpp"
#include "wrvar/group.hpp"
#include "wrvar/structure.hpp"
#include "wrvar/words.hpp"

namespace wrvar {

enum class Verdict { Equal, NotEqual, TrivialFactor };

// The three conditions of the wreath criterion, with the numbers they were
// decided on.  Later conditions stay unset once an earlier one fails.
struct CondA {
  std::uint64_t exp_a = 0, exp_b = 0, gcd = 0;
  bool pass = false;
};
struct CondB {
  std::optional<std::uint32_t> class_a;  // unset: not nilpotent
  bool abelian_b = false;
  bool pass = false;
};
struct CondC {
  std::uint64_t required_n = 0;   // exponent of B
  std::uint32_t required_c = 0;   // nilpotency class of A
  bool pass = false;              // B contains C_n^c
};

struct CriterionVerdict {
  Verdict verdict = Verdict::TrivialFactor;
  std::optional<CondA> cond_a;
  std::optional<CondB> cond_b;
  std::optional<CondC> cond_c;
  bool circ_reading = false;  // set when produced by decide_circ_product
};

// Does var(A Wr B) equal the product variety var(A)var(B)?  TrivialFactor when
// either group is trivial (the equality then holds degenerately).  Otherwise
// Equal iff all of: (a) gcd(exp A, exp B) = 1; (b) A nilpotent, B abelian;
// (c) B contains a direct power C_n^c with n = exp B, c = class of A.
CriterionVerdict decide_criterion(const FiniteGroup& A, const FiniteGroup& B);

// Is var(A)var(B) generated by ANY finite group?  Holds iff (a) and (b).
struct FinGenResult {
  bool holds = false;
  CondA cond_a;
  CondB cond_b;
};
FinGenResult decide_finite_generation(const FiniteGroup& A, const FiniteGroup& B);  // TrivialGroup

// Does var(A) ∘ G (product of the variety of A with var(G)) coincide with
// var(A)var(G)?  Same condition set as decide_criterion; the returned verdict
// carries circ_reading = true.  Both groups must be nontrivial.
CriterionVerdict decide_circ_product(const FiniteGroup& A, const FiniteGroup& G);  // TrivialGroup

// The designated comparison group A Wr C_n^c (n = exp B, c = class of A).
// Its top section lies in var(B), so the wreath product lies in var(A)var(B);
// when (a) and (b) hold it generates the whole product variety.  Requires
// (a), (b) to pass and (c) to fail (PreconditionFailed otherwise); throws
// ClosureExceedsCap when the order formula |A|^(n^c) * n^c exceeds the cap.
struct CanonicalWitness {
  FiniteGroup group;
  GroupExpr expr;
  std::string justification;
  std::uint64_t n = 0;
  std::uint32_t c = 0;
};
CanonicalWitness canonical_witness(const FiniteGroup& A, const FiniteGroup& B,
                                   std::uint64_t cap = kEnumerationCap,
                                   const GroupExpr* expr_a = nullptr);

struct SearchBudget {
  std::uint32_t max_arity = 3;        // variables in candidate words
  std::uint64_t max_length = 10;      // letters per enumerated word
  bool use_hall_basis = true;         // lead with left-normed commutators
  std::uint64_t sample_count = 100000;
  std::uint64_t seed = 1;
  std::uint64_t max_words = 20000;    // general enumeration budget
  std::uint32_t max_power = 3;        // k bound for membership witnesses H^k
};

// One candidate comparison group known to lie in var(A)var(B), with the
// construction that certifies membership.  order is the predicted order, so
// entries can be ranked and materialized lazily.
struct WitnessSpec {
  GroupExpr expr;
  std::string kind;
  std::uint64_t order = 0;
};
std::vector<WitnessSpec> separation_witness_pool(const FiniteGroup& A, const FiniteGroup& B,
                                                 const CriterionVerdict& verdict,
                                                 const GroupExpr* expr_a = nullptr,
                                                 std::uint64_t cap = kEnumerationCap);

struct ViolationSide {
  GroupExpr witness_expr;
  std::string witness_kind;
  LawCheckResult check;  // status Violated with the tuple recorded
};

struct SeparationCertificate {
  Word word;
  std::string word_display;  // bracket form for commutator candidates
  GroupExpr law_expr;        // the wreath product the word is a law of
  LawCheckResult law_check;  // exhaustive, status Law
  ViolationSide violation;
};

struct SearchFrontier {
  std::uint64_t words_tried = 0;
  std::uint64_t laws_found = 0;
  std::uint64_t witness_scans = 0;
  std::uint64_t words_skipped_over_cap = 0;
};

struct SeparationOutcome {
  std::optional<SeparationCertificate> certificate;  // unset: inconclusive
  SearchFrontier frontier;
};

// Search for a word that is an exhaustive law of A Wr B yet fails in some
// member of var(A)var(B) from the witness pool.  Candidate order: left-normed
// commutators of weight 2..max_arity, then x1^exp(A Wr B), then general
// enumeration (max_words words).  The first (word, witness) hit in that order
// is returned; a failed bounded search is an honest Inconclusive, never a
// verdict.  Requires decide_criterion(A, B) == NotEqual (PreconditionFailed).
SeparationOutcome find_separating_law(const FiniteGroup& A, const FiniteGroup& B,
                                      const SearchBudget& budget = {},
                                      const GroupExpr* expr_a = nullptr,
                                      const GroupExpr* expr_b = nullptr,
                                      std::uint64_t cap = kEnumerationCap,
                                      std::uint64_t scan_cap = kScanCap);

enum class Membership { Member, NotMember, Inconclusive };

struct MembershipResult {
  Membership status = Membership::Inconclusive;
  std::optional<Word> law;             // NotMember: a law of H violated in G
  std::optional<std::string> witness;  // Member: how G arises from H
  std::uint32_t power_used = 0;        // k with G a section of H^k
};

// Is G in var(H)?  Member and NotMember are certified (a quotient of a
// subgroup of H^k, resp. a separating law); Inconclusive otherwise.
MembershipResult is_in_variety(const FiniteGroup& G, const FiniteGroup& H,
                               const SearchBudget& budget = {},
                               std::uint64_t scan_cap = kScanCap);

}  // namespace wrvar

#endif
