#include "wrvar/expr_parse.hpp"

#include <cctype>

#include "wrvar/errors.hpp"

namespace wrvar {

namespace {

struct ExprParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(pos, std::string("expected '") + c + "'");
    ++pos;
  }
  bool word_ahead(const std::string& w) {
    skip_ws();
    if (text.compare(pos, w.size(), w) != 0) return false;
    // A name must not continue as a longer identifier ("Wr" vs "Wrx").
    std::size_t end = pos + w.size();
    if (end < text.size() && isalnum(static_cast<unsigned char>(text[end])) &&
        isalpha(static_cast<unsigned char>(w.back())))
      return false;
    return true;
  }
  bool eat_word(const std::string& w) {
    if (!word_ahead(w)) return false;
    pos += w.size();
    return true;
  }

  std::uint32_t uint() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError(start, "expected a number");
    std::uint64_t v = 0;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > UINT32_MAX) throw ParseError(start, "number too large");
      ++pos;
    }
    return static_cast<std::uint32_t>(v);
  }

  GroupExpr expr() {
    GroupExpr e = term();
    // No term begins with 'X', so after a term it can only be the product.
    while (eat('X')) e = GroupExpr::direct(std::move(e), term());
    return e;
  }

  GroupExpr term() {
    skip_ws();
    std::size_t start = pos;
    if (eat_word("C")) return one_arg(GroupExpr::cyclic);
    if (eat_word("D")) return one_arg(GroupExpr::dihedral);
    if (eat_word("Q8")) return GroupExpr::quaternion8();
    if (eat_word("S")) return one_arg(GroupExpr::symmetric);
    // "A" must be tried after names that begin with it would be (none do).
    if (eat_word("Heis")) return two_arg(GroupExpr::heis);
    if (eat_word("A")) return one_arg(GroupExpr::alternating);
    if (eat_word("E")) return two_arg(GroupExpr::elem_abelian);
    if (eat_word("Wr")) {
      expect('(');
      GroupExpr l = expr();
      expect(',');
      GroupExpr r = expr();
      expect(')');
      return GroupExpr::wreath(std::move(l), std::move(r));
    }
    if (eat_word("Perm")) return perm_term();
    if (eat('(')) {
      GroupExpr e = expr();
      expect(')');
      return e;
    }
    throw ParseError(start, "expected a group expression");
  }

  GroupExpr one_arg(GroupExpr (*make)(std::uint32_t)) {
    expect('(');
    std::uint32_t n = uint();
    expect(')');
    return make(n);
  }

  GroupExpr two_arg(GroupExpr (*make)(std::uint32_t, std::uint32_t)) {
    expect('(');
    std::uint32_t a = uint();
    expect(',');
    std::uint32_t b = uint();
    expect(')');
    return make(a, b);
  }

  GroupExpr perm_term() {
    expect('(');
    std::uint32_t degree = uint();
    expect(';');
    std::vector<std::vector<std::vector<Point>>> gens;
    do {
      gens.push_back(generator(degree));
    } while (eat(','));
    expect(')');
    return GroupExpr::perms(degree, std::move(gens));
  }

  // One generator: a run of cycles "(1 2 3)(4 5)"; "()" is the identity.
  std::vector<std::vector<Point>> generator(std::uint32_t degree) {
    std::vector<std::vector<Point>> cycles;
    skip_ws();
    if (pos >= text.size() || text[pos] != '(')
      throw ParseError(pos, "expected a cycle");
    while (eat('(')) {
      std::vector<Point> cyc;
      skip_ws();
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t at = pos;
        std::uint32_t p = uint();
        if (p < 1 || p > degree) throw ParseError(at, "cycle point out of range");
        cyc.push_back(static_cast<Point>(p - 1));
        skip_ws();
        if (pos < text.size() && text[pos] == ',') {  // allow "1,2,3" too
          ++pos;
          skip_ws();
        }
      }
      expect(')');
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
      if (pos >= text.size() || text[pos] != '(') break;
    }
    return cycles;
  }
};

}  // namespace

GroupExpr parse_group_expr(const std::string& text) {
  ExprParser p{text};
  GroupExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError(p.pos, "trailing input after expression");
  return e;
}

}  // namespace wrvar
