#include "wrvar/serialize.hpp"

#include <cstdio>
#include <fstream>

#include "wrvar/errors.hpp"
#include "wrvar/expr_parse.hpp"

namespace wrvar {

using nlohmann::json;

namespace {

constexpr int kCacheVersion = 1;

json cond_a_json(const CondA& a) {
  return {{"exp_A", a.exp_a}, {"exp_B", a.exp_b}, {"gcd", a.gcd}, {"pass", a.pass}};
}

json cond_b_json(const CondB& b) {
  json j;
  if (b.class_a) j["class_A"] = *b.class_a;
  else j["class_A"] = "NotNilpotent";
  j["abelian_B"] = b.abelian_b;
  j["pass"] = b.pass;
  return j;
}

json cond_c_json(const CondC& c) {
  return {{"required_c", c.required_c}, {"required_n", c.required_n}, {"pass", c.pass}};
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::NotEqual: return "NotEqual";
    case Verdict::TrivialFactor: return "TrivialFactor";
  }
  return "?";
}

const char* status_name(LawStatus s) {
  switch (s) {
    case LawStatus::Law: return "Law";
    case LawStatus::Violated: return "Violated";
    case LawStatus::SampledNoViolation: return "SampledNoViolation";
  }
  return "?";
}

json perm_json(const Perm& p) {
  json imgs = json::array();
  for (Point i = 0; i < p.degree(); ++i) imgs.push_back(p.apply(i));
  return imgs;
}

json tuple_json(const std::vector<Perm>& tuple) {
  json arr = json::array();
  for (const Perm& p : tuple) arr.push_back(perm_json(p));
  return arr;
}

json check_json(const LawCheckResult& r) {
  json j;
  j["exhaustive"] = r.exhaustive;
  j["status"] = status_name(r.status);
  j["tuples_checked"] = r.tuples_checked;
  if (r.seed) j["seed"] = *r.seed;
  if (r.violating_tuple) j["violating_tuple"] = tuple_json(*r.violating_tuple);
  return j;
}

}  // namespace

json structure_json(const StructureReport& report) {
  json j;
  j["order"] = report.order;
  j["degree"] = report.degree;
  j["exponent"] = report.exponent;
  j["abelian"] = report.abelian;
  if (report.nilpotency_class) j["nilpotency_class"] = *report.nilpotency_class;
  else j["nilpotency_class"] = "NotNilpotent";
  j["lower_central_sizes"] = report.lcs_sizes;
  if (report.invariants) {
    json inv = json::object();
    for (const auto& [p, exps] : report.invariants->primary)
      inv[std::to_string(p)] = exps;
    j["abelian_invariants"] = inv;
  }
  return j;
}

json verdict_json(const CriterionVerdict& verdict) {
  json j;
  j["verdict"] = verdict_name(verdict.verdict);
  j["cond_a"] = verdict.cond_a ? cond_a_json(*verdict.cond_a) : json("not-evaluated");
  j["cond_b"] = verdict.cond_b ? cond_b_json(*verdict.cond_b) : json("not-evaluated");
  j["cond_c"] = verdict.cond_c ? cond_c_json(*verdict.cond_c) : json("not-evaluated");
  if (verdict.circ_reading) j["circ_reading"] = true;
  return j;
}

json fingen_json(const FinGenResult& result) {
  json j;
  j["finitely_generated"] = result.holds;
  j["cond_a"] = cond_a_json(result.cond_a);
  j["cond_b"] = cond_b_json(result.cond_b);
  return j;
}

json law_json(const Word& word, const LawCheckResult& result) {
  json j = check_json(result);
  j["word"] = word_text(word);
  return j;
}

json membership_json(const MembershipResult& result) {
  json j;
  switch (result.status) {
    case Membership::Member: j["status"] = "Member"; break;
    case Membership::NotMember: j["status"] = "NotMember"; break;
    case Membership::Inconclusive: j["status"] = "Inconclusive"; break;
  }
  if (result.law) j["law"] = word_text(*result.law);
  if (result.witness) j["witness"] = *result.witness;
  if (result.power_used) j["power_used"] = result.power_used;
  return j;
}

json certificate_json(const SeparationCertificate& cert) {
  json j;
  j["word"] = word_text(cert.word);
  j["word_display"] = cert.word_display;
  j["law_side"] = {{"expr", expr_text(cert.law_expr)}, {"check", check_json(cert.law_check)}};
  j["violation_side"] = {{"expr", expr_text(cert.violation.witness_expr)},
                         {"witness_kind", cert.violation.witness_kind},
                         {"check", check_json(cert.violation.check)}};
  return j;
}

json separation_json(const SeparationOutcome& outcome) {
  json j;
  j["frontier"] = {{"words_tried", outcome.frontier.words_tried},
                   {"laws_found", outcome.frontier.laws_found},
                   {"witness_scans", outcome.frontier.witness_scans},
                   {"words_skipped_over_cap", outcome.frontier.words_skipped_over_cap}};
  if (outcome.certificate) {
    j["outcome"] = "certificate";
    j["certificate"] = certificate_json(*outcome.certificate);
  } else {
    j["outcome"] = "inconclusive";
  }
  return j;
}

namespace {

std::vector<Perm> tuple_from_json(const json& arr, Point degree) {
  std::vector<Perm> tuple;
  for (const json& imgs : arr) {
    std::vector<Point> v;
    for (const json& x : imgs) {
      std::uint64_t p = x.get<std::uint64_t>();
      if (p > kMaxDegree) throw BadParameter("tuple image out of range");
      v.push_back(static_cast<Point>(p));
    }
    if (v.size() != degree) throw DegreeMismatch("tuple entry has the wrong degree");
    tuple.push_back(Perm(std::move(v)));
  }
  return tuple;
}

}  // namespace

VerifyReport verify_certificate(const json& doc, std::uint64_t cap, std::uint64_t scan_cap) {
  VerifyReport rep;
  rep.ok = true;
  auto check = [&rep](bool pass, const std::string& name, const std::string& detail) {
    rep.checks.push_back(name + ": " + (pass ? "ok" : "FAIL") +
                         (detail.empty() ? "" : " (" + detail + ")"));
    if (!pass) rep.ok = false;
    return pass;
  };

  try {
    const json& cert = doc.contains("certificate") ? doc.at("certificate") : doc;
    Word word = parse_word(cert.at("word").get<std::string>());

    const json& law_side = cert.at("law_side");
    GroupExpr law_expr = parse_group_expr(law_side.at("expr").get<std::string>());
    FiniteGroup W = build(law_expr, cap);
    LawCheckResult on_w = is_law(W, word, ExhaustiveMode{}, scan_cap);
    check(on_w.status == LawStatus::Law, "law-side exhaustive law",
          "status " + std::string(status_name(on_w.status)));
    std::uint64_t recorded = law_side.at("check").at("tuples_checked").get<std::uint64_t>();
    check(on_w.tuples_checked == recorded, "law-side tuple count",
          std::to_string(on_w.tuples_checked) + " vs recorded " + std::to_string(recorded));

    const json& vio = cert.at("violation_side");
    GroupExpr wit_expr = parse_group_expr(vio.at("expr").get<std::string>());
    FiniteGroup X = build(wit_expr, cap);
    const json& vio_check = vio.at("check");
    std::vector<Perm> tuple =
        tuple_from_json(vio_check.at("violating_tuple"), X.degree());
    check(tuple.size() >= word.rank(), "tuple arity",
          std::to_string(tuple.size()) + " of " + std::to_string(word.rank()));
    bool all_members = true;
    for (const Perm& p : tuple) all_members = all_members && X.contains(p);
    check(all_members, "tuple lies in the witness", "");
    Perm value = evaluate(X, word, tuple);
    check(!value.is_identity(), "word violated at the tuple", value.cycle_string());

    // Replay the recorded scan mode; it must rediscover the same tuple.
    bool exhaustive = vio_check.at("exhaustive").get<bool>();
    LawCheckResult on_x = exhaustive
                              ? is_law(X, word, ExhaustiveMode{}, scan_cap)
                              : is_law(X, word,
                                       SampledMode{vio_check.at("tuples_checked").get<std::uint64_t>(),
                                                   vio_check.at("seed").get<std::uint64_t>()});
    bool same = on_x.status == LawStatus::Violated && on_x.violating_tuple &&
                on_x.violating_tuple->size() == tuple.size();
    if (same)
      for (std::size_t i = 0; i < tuple.size(); ++i)
        same = same && (*on_x.violating_tuple)[i] == tuple[i];
    check(same, "violation scan replays to the same tuple", "");
  } catch (const std::exception& e) {
    check(false, "replay", e.what());
  }
  return rep;
}

std::string cache_key(const std::string& expr_text, std::uint64_t cap) {
  // FNV-1a 64 over the canonical expression text and the cap.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  for (char c : expr_text) mix(static_cast<unsigned char>(c));
  mix('\n');
  for (std::string cs = std::to_string(cap); char c : cs) mix(static_cast<unsigned char>(c));
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<json> cache_load(const std::string& dir, const std::string& expr_text,
                               std::uint64_t cap) {
  std::ifstream in(dir + "/" + cache_key(expr_text, cap) + ".json");
  if (!in) return std::nullopt;
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) return std::nullopt;
  if (!doc.contains("version") || doc["version"] != kCacheVersion) return std::nullopt;
  if (!doc.contains("expr") || doc["expr"] != expr_text) return std::nullopt;
  if (!doc.contains("cap") || doc["cap"] != cap) return std::nullopt;
  if (!doc.contains("report")) return std::nullopt;
  return doc["report"];
}

void cache_store(const std::string& dir, const std::string& expr_text, std::uint64_t cap,
                 const json& report) {
  json doc;
  doc["version"] = kCacheVersion;
  doc["expr"] = expr_text;
  doc["cap"] = cap;
  doc["report"] = report;
  std::ofstream out(dir + "/" + cache_key(expr_text, cap) + ".json");
  out << doc.dump(2) << "\n";
}

}  // namespace wrvar
