#include "wrvar/words.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

namespace wrvar {

Word::Word(std::uint32_t rank, std::vector<Syllable> raw) {
  std::vector<Syllable> stack;
  for (const Syllable& s : raw) {
    if (s.exp == 0) continue;
    if (!stack.empty() && stack.back().var == s.var) {
      stack.back().exp += s.exp;
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(s);
    }
  }
  syllables_ = std::move(stack);
  rank_ = rank;
  for (const Syllable& s : syllables_) rank_ = std::max(rank_, s.var + 1);
}

std::uint64_t Word::length() const {
  std::uint64_t n = 0;
  for (const Syllable& s : syllables_) n += static_cast<std::uint64_t>(s.exp < 0 ? -s.exp : s.exp);
  return n;
}

std::uint32_t Word::used_vars() const {
  std::set<std::uint32_t> used;
  for (const Syllable& s : syllables_) used.insert(s.var);
  return static_cast<std::uint32_t>(used.size());
}

Word Word::inverse() const {
  std::vector<Syllable> rev(syllables_.rbegin(), syllables_.rend());
  for (Syllable& s : rev) s.exp = -s.exp;
  return Word(rank_, std::move(rev));
}

Word reduce(const std::vector<Syllable>& raw, std::uint32_t rank) {
  return Word(rank, raw);
}

Word commutator_word(const Word& u, const Word& v) {
  std::vector<Syllable> raw;
  auto append = [&raw](const Word& w) {
    raw.insert(raw.end(), w.syllables().begin(), w.syllables().end());
  };
  append(u.inverse());
  append(v.inverse());
  append(u);
  append(v);
  return Word(std::max(u.rank(), v.rank()), std::move(raw));
}

Word left_normed_commutator(std::uint32_t weight) {
  if (weight < 1) throw BadParameter("weight must be at least 1");
  Word w(1, {{0, 1}});
  for (std::uint32_t i = 1; i < weight; ++i) w = commutator_word(w, Word(i + 1, {{i, 1}}));
  return w;
}

std::string word_text(const Word& w) {
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(s.var + 1);
    if (s.exp != 1) out += "^" + std::to_string(s.exp);
  }
  return out;
}

namespace {

struct WordParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < text.size() && text[pos] == '-') {
      neg = true;
      ++pos;
    }
    if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(start, "expected an integer");
    std::int64_t v = 0;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > INT32_MAX) throw ParseError(start, "integer too large");
      ++pos;
    }
    return neg ? -v : v;
  }

  // word := factor { factor } ; factor := atom [ '^' int ]
  // atom := 'x' digits | '[' word ',' word ']'
  std::vector<Syllable> word() {
    std::vector<Syllable> out = factor();
    skip_ws();
    while (pos < text.size() && (text[pos] == 'x' || text[pos] == '[')) {
      std::vector<Syllable> f = factor();
      out.insert(out.end(), f.begin(), f.end());
      skip_ws();
    }
    return out;
  }

  std::vector<Syllable> factor() {
    std::vector<Syllable> atom_syl = atom();
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      std::size_t caret = pos;
      ++pos;
      std::int64_t e = integer();
      if (atom_syl.size() == 1) {
        std::int64_t scaled = static_cast<std::int64_t>(atom_syl[0].exp) * e;
        if (scaled > INT32_MAX || scaled < INT32_MIN)
          throw ParseError(caret, "exponent too large");
        return {{atom_syl[0].var, static_cast<std::int32_t>(scaled)}};
      }
      std::int64_t reps = e < 0 ? -e : e;
      if (reps * static_cast<std::int64_t>(atom_syl.size()) > 1000000)
        throw ParseError(caret, "exponent too large for a bracketed factor");
      Word base(0, atom_syl);
      Word factor_word = e < 0 ? base.inverse() : base;
      std::vector<Syllable> acc;
      for (std::int64_t i = 0; i < reps; ++i)
        acc.insert(acc.end(), factor_word.syllables().begin(), factor_word.syllables().end());
      return acc;
    }
    return atom_syl;
  }

  std::vector<Syllable> atom() {
    skip_ws();
    if (pos >= text.size()) throw ParseError(pos, "expected a variable or '['");
    if (text[pos] == 'x') {
      std::size_t start = pos;
      ++pos;
      if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError(start, "expected a variable index after 'x'");
      std::int64_t idx = integer();
      if (idx < 1) throw ParseError(start, "variable indices are 1-based");
      return {{static_cast<std::uint32_t>(idx - 1), 1}};
    }
    if (text[pos] == '[') {
      ++pos;
      std::vector<Syllable> u = word();
      expect(',');
      std::vector<Syllable> v = word();
      expect(']');
      Word cw = commutator_word(Word(0, u), Word(0, v));
      return {cw.syllables().begin(), cw.syllables().end()};
    }
    throw ParseError(pos, "expected a variable or '['");
  }
};

}  // namespace

Word parse_word(const std::string& text) {
  WordParser p{text};
  p.skip_ws();
  if (p.pos == text.size()) return Word();  // the empty word
  std::vector<Syllable> syl = p.word();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError(p.pos, "trailing input after word");
  return Word(0, std::move(syl));
}

std::vector<BasicCommutator> basic_commutators(std::uint32_t k, std::uint32_t max_weight) {
  if (k < 1) throw BadParameter("rank must be at least 1");
  struct Node {
    Word word;
    std::uint32_t weight;
    std::string printed;
    std::int32_t right = -1;  // index of v for composite [u,v]
  };
  std::vector<Node> basis;
  for (std::uint32_t i = 0; i < k; ++i)
    basis.push_back({Word(i + 1, {{i, 1}}), 1, "x" + std::to_string(i + 1), -1});

  for (std::uint32_t w = 2; w <= max_weight; ++w) {
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> fresh;
    for (std::size_t iu = 0; iu < basis.size(); ++iu) {
      if (basis[iu].weight >= w) continue;
      for (std::size_t iv = 0; iv < iu; ++iv) {  // iv < iu realizes u > v in collection order
        if (basis[iu].weight + basis[iv].weight != w) continue;
        // Hall condition: if u = [a, b] then b <= v.
        if (basis[iu].right >= 0 && static_cast<std::size_t>(basis[iu].right) > iv) continue;
        fresh.push_back({"[" + basis[iu].printed + "," + basis[iv].printed + "]", {iu, iv}});
      }
    }
    std::sort(fresh.begin(), fresh.end());
    for (auto& [printed, uv] : fresh) {
      basis.push_back({commutator_word(basis[uv.first].word, basis[uv.second].word), w, printed,
                       static_cast<std::int32_t>(uv.second)});
    }
  }

  std::vector<BasicCommutator> out;
  out.reserve(basis.size());
  for (Node& n : basis) out.push_back({std::move(n.word), n.weight, std::move(n.printed)});
  return out;
}

WordEnumerator::WordEnumerator(std::uint32_t k, std::uint64_t max_len) : k_(k), max_len_(max_len) {
  if (k < 1) throw BadParameter("rank must be at least 1");
}

bool WordEnumerator::advance() {
  std::uint32_t nletters = 2 * k_;
  auto blocked = [&](std::size_t i, std::uint32_t letter) {
    // A letter may not cancel its left neighbor (x and x^-1 differ in bit 0).
    return i > 0 && (letters_[i - 1] ^ 1u) == letter;
  };
  if (!started_) {
    started_ = true;
    if (max_len_ == 0) return false;
    letters_ = {0};
    return true;
  }
  // Odometer increment over valid (reduced) letter strings of this length,
  // rolling over to the first valid string one letter longer.
  std::size_t i = letters_.size();
  while (i > 0) {
    --i;
    std::uint32_t next = letters_[i] + 1;
    while (next < nletters && blocked(i, next)) ++next;
    if (next < nletters) {
      letters_[i] = next;
      for (std::size_t j = i + 1; j < letters_.size(); ++j) {
        std::uint32_t c = 0;
        while (blocked(j, c)) ++c;
        letters_[j] = c;
      }
      return true;
    }
  }
  if (letters_.size() + 1 > max_len_) return false;
  letters_.assign(letters_.size() + 1, 0);  // all-x1 is always reduced
  return true;
}

std::optional<Word> WordEnumerator::next() {
  if (!advance()) return std::nullopt;
  std::vector<Syllable> syl;
  for (std::uint32_t letter : letters_) {
    std::uint32_t var = letter >> 1;
    std::int32_t e = (letter & 1) ? -1 : 1;
    if (!syl.empty() && syl.back().var == var) {
      syl.back().exp += e;
    } else {
      syl.push_back({var, e});
    }
  }
  return Word(k_, std::move(syl));
}

std::vector<Word> enumerate_words(std::uint32_t k, std::uint64_t max_len) {
  WordEnumerator en(k, max_len);
  std::vector<Word> out;
  while (auto w = en.next()) out.push_back(std::move(*w));
  return out;
}

Perm evaluate(const FiniteGroup& G, const Word& w, const std::vector<Perm>& tuple) {
  if (tuple.size() < w.rank()) throw ArityMismatch("tuple shorter than the word's rank");
  for (std::uint32_t i = 0; i < w.rank(); ++i) {
    if (!G.contains(tuple[i])) throw ForeignElement("tuple element outside the group");
  }
  Perm acc = Perm::identity(G.degree());
  for (const Syllable& s : w.syllables()) acc = acc * tuple[s.var].power(s.exp);
  return acc;
}

namespace {

// Remap a word onto its used variables, densely renumbered in order of first
// appearance of the variable index.  Returns the dense word and the original
// variable for each dense slot.
std::pair<Word, std::vector<std::uint32_t>> densify(const Word& w) {
  std::vector<std::uint32_t> slot_to_var;
  std::vector<std::uint32_t> var_to_slot(w.rank(), UINT32_MAX);
  for (const Syllable& s : w.syllables()) {
    if (var_to_slot[s.var] == UINT32_MAX) {
      var_to_slot[s.var] = static_cast<std::uint32_t>(slot_to_var.size());
      slot_to_var.push_back(s.var);
    }
  }
  // Dense slots ordered by variable index keeps tuple scans in canonical
  // order over the used variables.
  std::sort(slot_to_var.begin(), slot_to_var.end());
  for (std::uint32_t d = 0; d < slot_to_var.size(); ++d) var_to_slot[slot_to_var[d]] = d;
  std::vector<Syllable> syl = w.syllables();
  for (Syllable& s : syl) s.var = var_to_slot[s.var];
  return {Word(static_cast<std::uint32_t>(slot_to_var.size()), std::move(syl)), slot_to_var};
}

std::vector<Perm> expand_tuple(const FiniteGroup& G, const Word& w,
                               const std::vector<std::uint32_t>& slot_to_var,
                               const std::vector<std::uint32_t>& dense_tuple) {
  std::vector<Perm> full(w.rank(), G.identity());
  for (std::size_t d = 0; d < slot_to_var.size(); ++d)
    full[slot_to_var[d]] = G.element(dense_tuple[d]);
  return full;
}

}  // namespace

LawCheckResult is_law(const FiniteGroup& G, const Word& w, ExhaustiveMode, std::uint64_t scan_cap) {
  auto [dense, slot_to_var] = densify(w);
  std::uint32_t u = dense.rank();

  LawCheckResult res;
  res.exhaustive = true;
  if (u == 0) {
    res.status = LawStatus::Law;
    res.tuples_checked = 1;
    return res;
  }

  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < u; ++i) {
    if (total > scan_cap / G.order()) throw ScanCapExceeded("exhaustive scan exceeds tuple cap");
    total *= G.order();
  }

  const auto& syl = dense.syllables();
  std::size_t L = syl.size();
  // first_use[v]: index of the first syllable reading variable v.
  std::vector<std::size_t> first_use(u, L);
  for (std::size_t i = L; i > 0; --i) first_use[syl[i - 1].var] = i - 1;

  // Odometer in canonical order (last variable fastest).  prefix[i] is the
  // product of syllables [0, i); powers[i] caches tuple[var]^exp per syllable.
  std::vector<std::uint32_t> idx(u, 0);
  std::vector<Perm> powers(L);
  std::vector<Perm> prefix(L + 1, Perm::identity(G.degree()));
  auto recompute_from = [&](std::size_t start) {
    for (std::size_t i = start; i < L; ++i) prefix[i + 1] = prefix[i] * powers[i];
  };
  auto refresh_var = [&](std::uint32_t v) {
    for (std::size_t i = 0; i < L; ++i) {
      if (syl[i].var == v) powers[i] = G.element(idx[v]).power(syl[i].exp);
    }
  };
  for (std::uint32_t v = 0; v < u; ++v) refresh_var(v);
  recompute_from(0);

  std::uint64_t checked = 0;
  while (true) {
    ++checked;
    if (!prefix[L].is_identity()) {
      res.status = LawStatus::Violated;
      res.tuples_checked = checked;
      res.violating_tuple = expand_tuple(G, w, slot_to_var, idx);
      return res;
    }
    // Advance the odometer; recompute from the first syllable that reads the
    // leftmost changed variable.
    std::uint32_t v = u;
    while (v > 0) {
      --v;
      if (++idx[v] < G.order()) break;
      idx[v] = 0;
      if (v == 0) {
        res.status = LawStatus::Law;
        res.tuples_checked = checked;
        return res;
      }
    }
    std::size_t start = L;
    for (std::uint32_t t = v; t < u; ++t) {
      refresh_var(t);
      start = std::min(start, first_use[t]);
    }
    recompute_from(start);
  }
}

LawCheckResult is_law(const FiniteGroup& G, const Word& w, SampledMode mode) {
  auto [dense, slot_to_var] = densify(w);
  std::uint32_t u = dense.rank();

  LawCheckResult res;
  res.exhaustive = false;
  res.seed = mode.seed;
  if (u == 0) {
    res.status = LawStatus::SampledNoViolation;
    res.tuples_checked = mode.count;
    return res;
  }

  std::mt19937_64 rng(mode.seed);
  std::vector<std::uint32_t> idx(u);
  std::vector<Perm> tuple(u, G.identity());
  for (std::uint64_t s = 0; s < mode.count; ++s) {
    for (std::uint32_t v = 0; v < u; ++v) {
      idx[v] = static_cast<std::uint32_t>(rng() % G.order());
      tuple[v] = G.element(idx[v]);
    }
    Perm val = Perm::identity(G.degree());
    for (const Syllable& syl : dense.syllables()) val = val * tuple[syl.var].power(syl.exp);
    if (!val.is_identity()) {
      res.status = LawStatus::Violated;
      res.tuples_checked = s + 1;
      res.violating_tuple = expand_tuple(G, w, slot_to_var, idx);
      return res;
    }
  }
  res.status = LawStatus::SampledNoViolation;
  res.tuples_checked = mode.count;
  return res;
}

}  // namespace wrvar
