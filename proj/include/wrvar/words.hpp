#ifndef WRVAR_WORDS_HPP
#define WRVAR_WORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrvar/group.hpp"

namespace wrvar {

struct Syllable {
  std::uint32_t var = 0;  // 0-based variable index (x1 is var 0)
  std::int32_t exp = 0;   // never 0 in a reduced word
  bool operator==(const Syllable&) const = default;
};

// A freely reduced word in the free group of the given rank.  Adjacent
// syllables always have distinct variables and no syllable has exponent 0.
class Word {
 public:
  Word() = default;
  Word(std::uint32_t rank, std::vector<Syllable> raw);  // reduces

  std::uint32_t rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::uint64_t length() const;  // sum of |exp|
  std::uint32_t used_vars() const;

  Word inverse() const;
  bool operator==(const Word&) const = default;

 private:
  std::uint32_t rank_ = 0;
  std::vector<Syllable> syllables_;
};

// Free reduction of a raw syllable sequence.  The rank is inferred from the
// largest variable index unless a larger rank is passed explicitly.
Word reduce(const std::vector<Syllable>& raw, std::uint32_t rank = 0);

// [u, v] = u^-1 v^-1 u v, reduced.
Word commutator_word(const Word& u, const Word& v);

// Left-normed commutator [[...[x1,x2],x3]...,xw] on w distinct variables.
Word left_normed_commutator(std::uint32_t weight);

std::string word_text(const Word& w);
Word parse_word(const std::string& text);  // throws ParseError

// Hall basic commutators on x1..xk up to the given weight, in collection
// order: weight first, then lexicographic on the printed bracket form.
struct BasicCommutator {
  Word word;
  std::uint32_t weight = 0;
  std::string printed;  // bracket expression, e.g. "[[x2,x1],x1]"
};
std::vector<BasicCommutator> basic_commutators(std::uint32_t k, std::uint32_t max_weight);

// Streams every freely reduced word of the rank-k free group with length up
// to max_len, shortest first, each exactly once, in a fixed letter order
// (x1 < x1^-1 < x2 < x2^-1 < ...).
class WordEnumerator {
 public:
  WordEnumerator(std::uint32_t k, std::uint64_t max_len);
  std::optional<Word> next();

 private:
  bool advance();
  std::uint32_t k_;
  std::uint64_t max_len_;
  std::vector<std::uint32_t> letters_;  // 2i = x_{i+1}, 2i+1 = x_{i+1}^-1
  bool started_ = false;
};

std::vector<Word> enumerate_words(std::uint32_t k, std::uint64_t max_len);

// Evaluate w at the tuple (one group element per variable).  The tuple must
// supply at least rank() elements of G (ArityMismatch / ForeignElement).
Perm evaluate(const FiniteGroup& G, const Word& w, const std::vector<Perm>& tuple);

enum class LawStatus { Law, Violated, SampledNoViolation };

struct LawCheckResult {
  LawStatus status = LawStatus::Law;
  bool exhaustive = true;
  std::uint64_t tuples_checked = 0;
  std::optional<std::vector<Perm>> violating_tuple;
  std::optional<std::uint64_t> seed;  // present for sampled checks
};

struct ExhaustiveMode {};
struct SampledMode {
  std::uint64_t count = 100000;
  std::uint64_t seed = 1;
};

// Exhaustive mode scans all tuples over the variables the word actually uses
// (unused variables cannot change the value), in canonical element order, and
// reports the first violating tuple.  Sampled mode is a seeded violation
// finder and can never return Law.
LawCheckResult is_law(const FiniteGroup& G, const Word& w, ExhaustiveMode,
                      std::uint64_t scan_cap = kScanCap);
LawCheckResult is_law(const FiniteGroup& G, const Word& w, SampledMode mode);

}  // namespace wrvar

#endif
