#include <array>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "wrvar/expr_parse.hpp"
#include "wrvar/serialize.hpp"

using namespace wrvar;
using nlohmann::json;

namespace {

// Exit codes: 0 equal/true/law/member/ok, 1 not-equal/false/violated, 2
// inconclusive or sampled-without-violation, 3 parse, 4 caps, 5 domain.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitParse = 3;
constexpr int kExitCap = 4;
constexpr int kExitDomain = 5;

struct Options {
  bool as_json = false;
  std::uint64_t cap = kEnumerationCap;
  std::uint64_t scan_cap = kScanCap;
  std::string cache_dir;
  std::uint64_t seed = 1;
};

void emit(const Options& opt, const json& doc, const std::string& text) {
  if (opt.as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string cond_a_line(const CondA& a) {
  return "cond (a) coprime exponents: exp A = " + std::to_string(a.exp_a) +
         ", exp B = " + std::to_string(a.exp_b) + ", gcd = " + std::to_string(a.gcd) +
         " -> " + (a.pass ? "pass" : "fail") + "\n";
}

std::string cond_b_line(const CondB& b) {
  std::string cls = b.class_a ? "class A = " + std::to_string(*b.class_a) : "A not nilpotent";
  return "cond (b) nilpotent by abelian: " + cls + ", B abelian = " + yn(b.abelian_b) + " -> " +
         (b.pass ? "pass" : "fail") + "\n";
}

std::string cond_c_line(const CondC& c) {
  return "cond (c) direct power: B needs a subgroup C_" + std::to_string(c.required_n) + "^" +
         std::to_string(c.required_c) + " -> " + (c.pass ? "pass" : "fail") + "\n";
}

std::string verdict_text(const CriterionVerdict& v) {
  std::string out;
  if (v.circ_reading)
    out += "reading: variety-of-A circ-product G versus var(A)var(G)\n";
  switch (v.verdict) {
    case Verdict::Equal: out += "verdict: Equal\n"; break;
    case Verdict::NotEqual: out += "verdict: NotEqual\n"; break;
    case Verdict::TrivialFactor: out += "verdict: TrivialFactor (equality is degenerate)\n"; break;
  }
  out += v.cond_a ? cond_a_line(*v.cond_a) : "cond (a) coprime exponents: not evaluated\n";
  out += v.cond_b ? cond_b_line(*v.cond_b) : "cond (b) nilpotent by abelian: not evaluated\n";
  out += v.cond_c ? cond_c_line(*v.cond_c) : "cond (c) direct power: not evaluated\n";
  return out;
}

int verdict_exit(Verdict v) { return v == Verdict::NotEqual ? kExitNo : kExitYes; }

std::string report_text(const std::string& expr, const json& r) {
  std::string out = "expr: " + expr + "\n";
  out += "order: " + r.at("order").dump() + "\n";
  out += "degree: " + r.at("degree").dump() + "\n";
  out += "exponent: " + r.at("exponent").dump() + "\n";
  out += "abelian: " + std::string(yn(r.at("abelian").get<bool>())) + "\n";
  const json& nc = r.at("nilpotency_class");
  out += "nilpotency class: " + (nc.is_number() ? nc.dump() : std::string("not nilpotent")) + "\n";
  out += "lower central sizes:";
  for (const json& s : r.at("lower_central_sizes")) out += " " + s.dump();
  out += "\n";
  if (r.contains("abelian_invariants")) {
    out += "abelian invariants (prime: exponents):";
    for (auto it = r.at("abelian_invariants").begin(); it != r.at("abelian_invariants").end(); ++it)
      out += " " + it.key() + ":" + it.value().dump();
    out += "\n";
  }
  return out;
}

std::string check_text(const LawCheckResult& r) {
  std::string out;
  switch (r.status) {
    case LawStatus::Law: out += "status: Law\n"; break;
    case LawStatus::Violated: out += "status: Violated\n"; break;
    case LawStatus::SampledNoViolation: out += "status: SampledNoViolation\n"; break;
  }
  out += "exhaustive: " + yn(r.exhaustive) + "\n";
  out += "tuples checked: " + std::to_string(r.tuples_checked) + "\n";
  if (r.seed) out += "seed: " + std::to_string(*r.seed) + "\n";
  if (r.violating_tuple) {
    out += "violating tuple:\n";
    for (const Perm& p : *r.violating_tuple) out += "  " + p.cycle_string() + "\n";
  }
  return out;
}

int law_exit(LawStatus s) {
  switch (s) {
    case LawStatus::Law: return kExitYes;
    case LawStatus::Violated: return kExitNo;
    case LawStatus::SampledNoViolation: return kExitInconclusive;
  }
  return kExitDomain;
}

json analyze_report(const Options& opt, const GroupExpr& expr) {
  std::string key = expr_text(expr);
  if (!opt.cache_dir.empty()) {
    if (auto cached = cache_load(opt.cache_dir, key, opt.cap)) return *cached;
  }
  json report = structure_json(structure_report(build(expr, opt.cap)));
  if (!opt.cache_dir.empty()) cache_store(opt.cache_dir, key, opt.cap, report);
  return report;
}

const std::vector<std::array<std::string, 3>>& catalog_entries() {
  static const std::vector<std::array<std::string, 3>> entries = {
      {"C(n)", "C(6)", "cyclic group of order n"},
      {"D(n)", "D(4)", "dihedral group of order 2n"},
      {"Q8", "Q8", "quaternion group of order 8"},
      {"S(k)", "S(4)", "symmetric group on k points"},
      {"A(k)", "A(5)", "alternating group on k points"},
      {"E(p,k)", "E(2,3)", "elementary abelian group of order p^k (p prime)"},
      {"Heis(r,m)", "Heis(2,3)",
       "free class-2 group of odd exponent m on r generators, order m^(r+r(r-1)/2)"},
      {"A X B", "C(2) X C(2)", "direct product (infix, left associative)"},
      {"Wr(A,B)", "Wr(C(2),C(3))", "wreath product with B acting regularly"},
      {"Perm(d;gens)", "Perm(3;(1 2),(1 2 3))",
       "explicit generators as 1-based disjoint cycles, comma separated"},
  };
  return entries;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wreath-product variety toolkit"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.as_json, "emit machine-readable JSON");
  app.add_option("--cap", opt.cap, "element enumeration cap");
  app.add_option("--scan-cap", opt.scan_cap, "exhaustive tuple-scan cap");
  app.add_option("--cache", opt.cache_dir, "cache directory for structure reports");
  app.add_option("--seed", opt.seed, "seed for all sampled scans");

  std::string expr1, expr2, word_in, mode = "exhaustive", path;
  SearchBudget budget;

  auto* cmd_analyze = app.add_subcommand("analyze", "structure report for a group expression");
  cmd_analyze->add_option("expr", expr1, "group expression")->required();

  auto* cmd_criterion =
      app.add_subcommand("criterion", "does var(A Wr B) equal var(A)var(B)?");
  cmd_criterion->add_option("exprA", expr1)->required();
  cmd_criterion->add_option("exprB", expr2)->required();

  auto* cmd_circ = app.add_subcommand("circ", "does var(A) circ G equal var(A)var(G)?");
  cmd_circ->add_option("exprA", expr1)->required();
  cmd_circ->add_option("exprG", expr2)->required();

  auto* cmd_fingen =
      app.add_subcommand("fingen", "is var(A)var(B) generated by a finite group?");
  cmd_fingen->add_option("exprA", expr1)->required();
  cmd_fingen->add_option("exprB", expr2)->required();

  auto* cmd_law = app.add_subcommand("law", "check whether a word is a law of a group");
  cmd_law->add_option("word", word_in, "word, e.g. \"[[x1,x2],x3]\" or \"x1^4\"")->required();
  cmd_law->add_option("expr", expr1, "group expression")->required();
  cmd_law->add_option("mode", mode, "exhaustive | sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  cmd_law->add_option("--samples", budget.sample_count, "sample count for sampled mode");

  auto* cmd_separate =
      app.add_subcommand("separate", "search for a law separating var(A Wr B) from var(A)var(B)");
  cmd_separate->add_option("exprA", expr1)->required();
  cmd_separate->add_option("exprB", expr2)->required();
  cmd_separate->add_option("--max-arity", budget.max_arity, "variables in candidate words");
  cmd_separate->add_option("--max-length", budget.max_length, "letters per enumerated word");
  cmd_separate->add_option("--max-words", budget.max_words, "general enumeration budget");
  cmd_separate->add_option("--samples", budget.sample_count, "samples for oversized witnesses");
  bool no_hall = false;
  cmd_separate->add_flag("--no-hall", no_hall, "skip the commutator lead candidates");

  auto* cmd_member = app.add_subcommand("member", "is G in the variety generated by H?");
  cmd_member->add_option("exprG", expr1)->required();
  cmd_member->add_option("exprH", expr2)->required();
  cmd_member->add_option("--max-power", budget.max_power, "largest direct power of H searched");
  cmd_member->add_option("--max-arity", budget.max_arity, "variables in screened words");
  cmd_member->add_option("--max-length", budget.max_length, "letters per screened word");
  cmd_member->add_option("--max-words", budget.max_words, "word screen budget");
  cmd_member->add_option("--samples", budget.sample_count, "samples for oversized scans");

  auto* cmd_verify = app.add_subcommand("verify", "replay a separation certificate");
  cmd_verify->add_option("path", path, "certificate JSON file")->required();

  auto* cmd_catalog = app.add_subcommand("catalog", "list the expression forms");

  for (CLI::App* sub : {cmd_analyze, cmd_criterion, cmd_circ, cmd_fingen, cmd_law, cmd_separate,
                        cmd_member, cmd_verify, cmd_catalog})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  budget.seed = opt.seed;

  try {
    if (*cmd_analyze) {
      GroupExpr e = parse_group_expr(expr1);
      json report = analyze_report(opt, e);
      emit(opt, report, report_text(expr_text(e), report));
      return kExitYes;
    }

    if (*cmd_criterion || *cmd_circ) {
      FiniteGroup A = build(parse_group_expr(expr1), opt.cap);
      FiniteGroup B = build(parse_group_expr(expr2), opt.cap);
      CriterionVerdict v =
          *cmd_circ ? decide_circ_product(A, B) : decide_criterion(A, B);
      emit(opt, verdict_json(v), verdict_text(v));
      return verdict_exit(v.verdict);
    }

    if (*cmd_fingen) {
      FiniteGroup A = build(parse_group_expr(expr1), opt.cap);
      FiniteGroup B = build(parse_group_expr(expr2), opt.cap);
      FinGenResult r = decide_finite_generation(A, B);
      std::string text = "finitely generated: " + yn(r.holds) + "\n" + cond_a_line(r.cond_a) +
                         cond_b_line(r.cond_b);
      emit(opt, fingen_json(r), text);
      return r.holds ? kExitYes : kExitNo;
    }

    if (*cmd_law) {
      Word w = parse_word(word_in);
      FiniteGroup G = build(parse_group_expr(expr1), opt.cap);
      LawCheckResult r = mode == "sampled"
                             ? is_law(G, w, SampledMode{budget.sample_count, opt.seed})
                             : is_law(G, w, ExhaustiveMode{}, opt.scan_cap);
      emit(opt, law_json(w, r), "word: " + word_in + "\n" + check_text(r));
      return law_exit(r.status);
    }

    if (*cmd_separate) {
      budget.use_hall_basis = !no_hall;
      GroupExpr ea = parse_group_expr(expr1);
      GroupExpr eb = parse_group_expr(expr2);
      FiniteGroup A = build(ea, opt.cap);
      FiniteGroup B = build(eb, opt.cap);
      SeparationOutcome out =
          find_separating_law(A, B, budget, &ea, &eb, opt.cap, opt.scan_cap);
      std::string text;
      if (out.certificate) {
        const SeparationCertificate& c = *out.certificate;
        text += "separating law: " + c.word_display + "\n";
        text += "word: " + word_text(c.word) + "\n";
        text += "law side: " + expr_text(c.law_expr) + "\n" + check_text(c.law_check);
        text += "witness: " + expr_text(c.violation.witness_expr) + "\n";
        text += "witness kind: " + c.violation.witness_kind + "\n";
        text += check_text(c.violation.check);
      } else {
        text += "inconclusive: no separating law within the budget\n";
      }
      text += "words tried: " + std::to_string(out.frontier.words_tried) +
              ", laws found: " + std::to_string(out.frontier.laws_found) +
              ", witness scans: " + std::to_string(out.frontier.witness_scans) +
              ", skipped over cap: " + std::to_string(out.frontier.words_skipped_over_cap) + "\n";
      emit(opt, separation_json(out), text);
      return out.certificate ? kExitYes : kExitInconclusive;
    }

    if (*cmd_member) {
      FiniteGroup G = build(parse_group_expr(expr1), opt.cap);
      FiniteGroup H = build(parse_group_expr(expr2), opt.cap);
      MembershipResult r = is_in_variety(G, H, budget, opt.scan_cap);
      std::string text;
      switch (r.status) {
        case Membership::Member:
          text = "status: Member\nwitness: " + *r.witness + " of H^" +
                 std::to_string(r.power_used) + "\n";
          break;
        case Membership::NotMember:
          text = "status: NotMember\nseparating law of H: " + word_text(*r.law) + "\n";
          break;
        case Membership::Inconclusive:
          text = "status: Inconclusive\n";
          break;
      }
      emit(opt, membership_json(r), text);
      return r.status == Membership::Member
                 ? kExitYes
                 : (r.status == Membership::NotMember ? kExitNo : kExitInconclusive);
    }

    if (*cmd_verify) {
      std::ifstream in(path);
      if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kExitDomain;
      }
      json doc = json::parse(in, nullptr, false);
      if (doc.is_discarded()) {
        std::cerr << "not a JSON document: " << path << "\n";
        return kExitParse;
      }
      VerifyReport rep = verify_certificate(doc, opt.cap, opt.scan_cap);
      json j;
      j["ok"] = rep.ok;
      j["checks"] = rep.checks;
      std::string text;
      for (const std::string& line : rep.checks) text += line + "\n";
      text += rep.ok ? "verify: ok\n" : "verify: FAIL\n";
      emit(opt, j, text);
      return rep.ok ? kExitYes : kExitNo;
    }

    if (*cmd_catalog) {
      json j = json::array();
      std::string text;
      for (const auto& [form, example, what] : catalog_entries()) {
        j.push_back({{"form", form}, {"example", example}, {"description", what}});
        text += form + "\t" + what + "\t example: " + example + "\n";
      }
      emit(opt, j, text);
      return kExitYes;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const ClosureExceedsCap& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const OrderCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ScanCapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const PointLimitExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitDomain;
}
