#include "comsep/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "comsep/subsets.hpp"

namespace comsep::cli {

namespace {

struct Options {
  std::string system_path;
  std::string points_path;
  std::string certificate_path;
  std::string elements;
  std::string target;
  std::string variant;
  std::uint64_t seed = 7;
  std::size_t count = 100;
  std::size_t max_size = 0;
  bool json_output = false;
  bool linear = false;
};

struct Report {
  json verdict;
  json certificates = json::array();
  json body = json::object();
  std::vector<std::string> lines;
  int code = ok;
};

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

ElementSet parse_elements(const GroundSet& ground, const std::string& text) {
  try {
    return ground.subset(split_names(text));
  } catch (const Error& e) {
    throw FormatError(std::string("--elements: ") + e.what());
  }
}

SignVector parse_target(const GroundPtr& ground, const std::string& text) {
  try {
    return SignVector::parse(ground, text);
  } catch (const Error& e) {
    throw FormatError(std::string("--target: ") + e.what());
  }
}

Variant parse_variant(const std::string& text) {
  if (text == "contraction" || text.empty()) return Variant::contraction;
  if (text == "deletion") return Variant::deletion;
  throw FormatError("--variant: expected contraction or deletion");
}

SignSystem load_system(const Options& o) {
  if (o.system_path.empty()) throw FormatError("--system is required");
  const json j = read_json_file(o.system_path);
  try {
    return decode_system(j);
  } catch (const FormatError& e) {
    throw FormatError(o.system_path + ": " + e.what());
  }
}

PointConfiguration load_points(const Options& o) {
  if (o.points_path.empty()) throw FormatError("--points is required");
  const json j = read_json_file(o.points_path);
  try {
    return decode_points(j);
  } catch (const FormatError& e) {
    throw FormatError(o.points_path + ": " + e.what());
  }
}

std::string names(const GroundSet& g, ElementSet s) {
  std::string out = "{";
  for (const auto& id : g.names_of(s)) out += (out.size() > 1 ? "," : "") + id;
  return out + "}";
}

json query_json(const GroundSet& g, const SeparationQuery& q) {
  return json{{"V", encode_set(g, q.v)}, {"W", encode_set(g, q.w)}};
}

json covector_certificate(const SignSystem& m, const SeparationQuery& q, const SignVector& x) {
  return json{{"kind", "covector"}, {"system", encode_system(m)}, {"query", query_json(*m.ground(), q)},
              {"covector", x.to_string()}};
}

json record_certificate(const CounterexampleRecord& r, std::optional<std::uint64_t> seed,
                        std::optional<std::uint64_t> index) {
  json c{{"kind", "counterexample"}};
  const json record = encode_record(r);
  for (auto& [k, v] : record.items()) c[k] = v;
  if (seed) c["seed"] = *seed;
  if (index) c["index"] = *index;
  return c;
}

// ---- commands -------------------------------------------------------------

Report cmd_check(const Options& o) {
  const SignSystem m = load_system(o);
  const bool fs = check_fs(m), se = check_se(m), c = check_c(m);
  const bool com = fs && se, om = com && m.contains(Packed{}), simple = is_simple(m);
  Report r;
  r.verdict = json{{"com", com}, {"om", om}, {"simple", simple}};
  r.body["axioms"] = json{{"FS", fs}, {"SE", se}, {"C", c}};
  r.certificates.push_back(json{{"kind", "axioms"}, {"system", encode_system(m)}, {"FS", fs}, {"SE", se},
                                {"C", c}, {"com", com}, {"om", om}, {"simple", simple}});
  r.lines = {"elements: " + std::to_string(m.ground_size()) + ", covectors: " + std::to_string(m.size()),
             std::string("FS: ") + (fs ? "yes" : "no") + ", SE: " + (se ? "yes" : "no") + ", C: " + (c ? "yes" : "no"),
             std::string("COM: ") + (com ? "yes" : "no") + ", OM: " + (om ? "yes" : "no") +
                 ", simple: " + (simple ? "yes" : "no")};
  r.code = com ? ok : negative;
  return r;
}

Report cmd_topes(const Options& o) {
  const SignSystem m = load_system(o);
  const SignSystem t = topes(m);
  Report r;
  r.verdict = json{{"topes", t.size()}};
  r.body["topes"] = t.encoded();
  r.certificates.push_back(json{{"kind", "topes"}, {"system", encode_system(m)}, {"topes", t.encoded()}});
  r.lines.push_back(std::to_string(t.size()) + " topes");
  for (const auto& s : t.encoded()) r.lines.push_back("  " + s);
  return r;
}

Report cmd_rank(const Options& o) {
  const SignSystem m = load_system(o);
  Report r;
  if (m.empty()) {
    r.verdict = json{{"rank", nullptr}};
    r.lines.push_back("rank undefined for the empty system");
    r.code = negative;
    return r;
  }
  const std::size_t k = rank(m);
  ElementSet witness;
  any_subset_lex(m.ground_size(), k, [&](std::uint64_t a) {
    witness = ElementSet(a);
    return is_shattered(m, witness);
  });
  r.verdict = json{{"rank", k}};
  r.body["shattered"] = encode_set(*m.ground(), witness);
  r.certificates.push_back(json{{"kind", "rank"}, {"system", encode_system(m)}, {"rank", k},
                                {"shattered", encode_set(*m.ground(), witness)}});
  r.lines = {"rank: " + std::to_string(k), "shattered: " + names(*m.ground(), witness)};
  return r;
}

Report cmd_minor(const Options& o, const std::string& op) {
  const SignSystem m = load_system(o);
  const ElementSet f = parse_elements(*m.ground(), o.elements);
  const SignSystem result = op == "contract" ? contraction(m, f) : op == "delete" ? deletion(m, f) : reorient_system(m, f);
  Report r;
  r.verdict = json{{"covectors", result.size()}};
  r.body["result"] = encode_system(result);
  r.certificates.push_back(json{{"kind", "minor"}, {"operation", op}, {"system", encode_system(m)},
                                {"elements", encode_set(*m.ground(), f)}, {"result", encode_system(result)}});
  r.lines.push_back(op + " " + names(*m.ground(), f) + ": " + std::to_string(result.size()) + " covectors");
  r.lines.push_back(encode_system(result).dump());
  return r;
}

Report cmd_build(const Options& o) {
  const PointConfiguration p = load_points(o);
  const SignSystem m = o.linear ? linear_om(p) : affine_com(p);
  Report r;
  r.verdict = json{{"covectors", m.size()}};
  r.body["result"] = encode_system(m);
  r.certificates.push_back(json{{"kind", "build"}, {"mode", o.linear ? "linear" : "affine"},
                                {"points", encode_points(p)}, {"result", encode_system(m)}});
  r.lines.push_back(std::string(o.linear ? "linear" : "affine") + " system with " + std::to_string(m.size()) +
                    " covectors");
  r.lines.push_back(encode_system(m).dump());
  return r;
}

json hypothesis_rows(const SignSystem& m, const SeparationQuery& q, Variant variant, std::vector<std::string>& lines) {
  json rows = json::array();
  std::size_t disagreements = 0;
  for (const auto& row : hypothesis_table(m, q)) {
    const bool ok_variant = variant == Variant::contraction ? row.contraction_ok : row.deletion_ok;
    disagreements += row.contraction_ok != row.deletion_ok;
    rows.push_back(json{{"C", encode_set(*m.ground(), row.c)}, {"ok", ok_variant},
                        {"contraction", row.contraction_ok}, {"deletion", row.deletion_ok}});
    lines.push_back("  C=" + names(*m.ground(), row.c) + " contraction:" + (row.contraction_ok ? "yes" : "no") +
                    " deletion:" + (row.deletion_ok ? "yes" : "no"));
  }
  lines.push_back("variants disagree on " + std::to_string(disagreements) + " of " + std::to_string(rows.size()) +
                  " subsets");
  return json{{"variant", to_string(variant)}, {"rows", rows}, {"disagreements", disagreements}};
}

Report cmd_separate(const Options& o) {
  Report r;
  if (!o.points_path.empty()) {
    const PointConfiguration p = load_points(o);
    const ElementSet v = p.labeled(Label::v), w = p.labeled(Label::w);
    const auto f = separating_functional(p, v, w);
    const GroundSet& g = *p.ground();
    if (f) {
      r.verdict = json{{"separable", true}};
      r.body["functional"] = encode_functional(*f);
      r.certificates.push_back(json{{"kind", "functional"}, {"points", encode_points(p)}, {"V", encode_set(g, v)},
                                    {"W", encode_set(g, w)}, {"functional", encode_functional(*f)}});
      std::string a;
      for (const auto& c : f->a) a += (a.empty() ? "" : ", ") + to_string(c);
      r.lines.push_back("separable: a = (" + a + "), alpha = " + to_string(f->alpha));
    } else {
      r.verdict = json{{"separable", false}};
      r.code = negative;
      const std::size_t limit = o.max_size ? o.max_size : p.dim() + 2;
      r.lines.push_back("not separable");
      if (const auto c = failing_subset(p, v, w, limit)) {
        r.body["failing_subset"] = encode_set(g, *c);
        r.certificates.push_back(json{{"kind", "failing_subset"}, {"points", encode_points(p)},
                                      {"V", encode_set(g, v)}, {"W", encode_set(g, w)},
                                      {"subset", encode_set(g, *c)}});
        r.lines.push_back("failing subset of " + std::to_string(c->size()) + " points: " + names(g, *c));
      } else {
        r.lines.push_back("no failing subset of at most " + std::to_string(limit) + " points");
      }
    }
    if (!o.variant.empty() && (v | w) == p.ground()->all()) {
      const SignSystem m = affine_com(p);
      r.body["hypothesis"] = hypothesis_rows(m, SeparationQuery{w, v}, parse_variant(o.variant), r.lines);
    }
    return r;
  }
  const SignSystem m = load_system(o);
  const SeparationQuery q = query_of(parse_target(m.ground(), o.target));
  const auto x = is_separable(m, q);
  r.verdict = json{{"separable", x.has_value()}};
  if (x) {
    r.certificates.push_back(covector_certificate(m, q, *x));
    r.lines.push_back("separable by covector " + x->to_string());
  } else {
    r.code = negative;
    r.lines.push_back("not separable");
  }
  if (!o.variant.empty() && q.is_full(*m.ground()))
    r.body["hypothesis"] = hypothesis_rows(m, q, parse_variant(o.variant), r.lines);
  return r;
}

Report cmd_witness(const Options& o) {
  const SignSystem m = load_system(o);
  const SignVector target = parse_target(m.ground(), o.target.empty() ? std::string(m.ground_size(), '+') : o.target);
  if (!target.is_full()) throw FormatError("--target: witness needs a full-support target");
  require_com(m);
  const SeparationQuery q = query_of(target);
  Report r;
  if (target_tope_present(m, q)) {
    r.verdict = json{{"separable", true}};
    r.certificates.push_back(covector_certificate(m, q, target));
    r.lines.push_back("target " + target.to_string() + " is a tope; no witness");
    r.code = negative;
    return r;
  }
  const WitnessReport w = minimal_witness(m, q);
  const GroundSet& g = *m.ground();
  r.verdict = json{{"separable", false}, {"D", encode_set(g, w.d)}, {"circuit_verified", w.circuit_verified}};
  r.body["witness"] = encode_witness(m, w);
  r.certificates.push_back(json{{"kind", "witness"}, {"system", encode_system(m)}, {"target", target.to_string()},
                                {"D", encode_set(g, w.d)}});
  r.lines = {"D = " + names(g, w.d) + " (|D| = " + std::to_string(w.d.size()) + ")",
             "contraction onto D: " + encode_system(w.contraction_snapshot).dump(),
             std::string("circuit structure: ") + (w.circuit_verified ? "verified" : "not a directed circuit"),
             "extension C = " + names(g, w.extension_c) + (w.extension_fails ? " still fails" : " does not fail")};
  return r;
}

Report cmd_kirchberger(const Options& o) {
  const SignSystem m = load_system(o);
  require_com(m);
  Report r;
  if (!o.target.empty()) {
    const SignVector target = parse_target(m.ground(), o.target);
    if (!target.is_full()) throw FormatError("--target: needs full support");
    const SeparationQuery q = query_of(target);
    const bool tope = target_tope_present(m, q);
    const auto con = hypothesis_holds(m, q, Variant::contraction);
    const auto del = hypothesis_holds(m, q, Variant::deletion);
    r.lines.push_back("rank " + std::to_string(con.rank) + ", subsets of size " + std::to_string(con.subset_size));
    r.body["table"] = hypothesis_rows(m, q, Variant::contraction, r.lines);
    r.lines.push_back(std::string("tope: ") + (tope ? "yes" : "no") + ", contraction hypothesis: " +
                      (con.holds ? "holds" : "fails") + ", deletion hypothesis: " + (del.holds ? "holds" : "fails"));
    r.verdict = json{{"tope", tope}, {"contraction_hypothesis", con.holds}, {"deletion_hypothesis", del.holds}};
    if (tope) r.certificates.push_back(covector_certificate(m, q, target));
    if (con.holds && !tope) {
      r.code = negative;
      r.certificates.push_back(record_certificate(
          {m, target, Variant::contraction, Claim::theorem8, std::nullopt, std::nullopt, "hypothesis holds"},
          std::nullopt, std::nullopt));
    }
    return r;
  }
  const auto records = audit_theorem(m);
  r.verdict = json{{"counterexamples", records.size()}};
  for (const auto& rec : records) r.certificates.push_back(record_certificate(rec, std::nullopt, std::nullopt));
  r.lines.push_back(std::to_string(records.size()) + " counterexamples over " +
                    std::to_string(m.empty() ? 0 : all_targets(m).size()) + " targets");
  r.code = records.empty() ? ok : negative;
  return r;
}

Report cmd_fuzz(const Options& o) {
  CorpusSpec spec;
  spec.seed = o.seed;
  spec.count = o.count;
  if (o.max_size) spec.max_points = o.max_size;
  constexpr std::size_t kept_per_claim = 25;
  std::map<std::string, std::size_t> counts{{"theorem8", 0}, {"prop7", 0}, {"monotonicity", 0}, {"circuit", 0}};
  std::map<std::string, std::size_t> kept;
  std::size_t targets = 0, witnesses = 0, om = 0, empty = 0;
  Report r;
  auto keep = [&](const CounterexampleRecord& rec, const CorpusInstance& inst) {
    const std::string claim = to_string(rec.claim);
    ++counts[claim];
    if (kept[claim]++ < kept_per_claim) r.certificates.push_back(record_certificate(rec, inst.seed, inst.index));
  };
  for (std::size_t i = 0; i < spec.count; ++i) {
    const CorpusInstance inst = generate_instance(spec, i);
    const SignSystem& m = inst.system;
    om += inst.om;
    empty += m.empty();
    for (const auto& rec : audit_theorem(m)) keep(rec, inst);
    if (!check_proposition7(m))
      keep({m, std::nullopt, Variant::contraction, Claim::prop7, std::nullopt, std::nullopt,
            "premise holds but the system is not the directed circuit"},
           inst);
    for (const auto& rec : audit_monotonicity(m)) keep(rec, inst);
    if (m.empty()) continue;
    for (const auto& q : all_targets(m)) {
      ++targets;
      if (target_tope_present(m, q)) continue;
      ++witnesses;
      const WitnessReport w = minimal_witness(m, q);
      if (!w.circuit_verified)
        keep({m, target_vector(m.ground(), q), Variant::contraction, Claim::circuit, w.d, std::nullopt,
              "contraction onto D is not the directed circuit"},
             inst);
    }
  }
  const std::size_t fatal = counts["theorem8"] + counts["prop7"];
  r.verdict = json{{"counterexamples", fatal}};
  r.body["spec"] = json{{"seed", spec.seed}, {"count", spec.count}, {"max_points", spec.max_points},
                        {"max_dim", spec.max_dim}, {"coord_bound", spec.coord_bound},
                        {"minor_depth", spec.minor_depth}};
  r.body["claims"] = counts;
  r.body["instances"] = json{{"total", spec.count}, {"om", om}, {"empty", empty}};
  r.body["targets"] = targets;
  r.body["witnesses"] = witnesses;
  r.lines = {std::to_string(spec.count) + " instances (" + std::to_string(om) + " OMs, " + std::to_string(empty) +
                 " empty), " + std::to_string(targets) + " targets, " + std::to_string(witnesses) + " witnesses",
             std::to_string(fatal) + " counterexamples (theorem8: " + std::to_string(counts["theorem8"]) +
                 ", prop7: " + std::to_string(counts["prop7"]) + ")",
             "proof-step findings: monotonicity " + std::to_string(counts["monotonicity"]) + ", circuit " +
                 std::to_string(counts["circuit"])};
  r.code = fatal == 0 ? ok : negative;
  return r;
}

Report cmd_verify(const Options& o) {
  if (o.certificate_path.empty()) throw FormatError("--certificate is required");
  const json doc = read_json_file(o.certificate_path);
  const auto failures = verify_document(doc);
  Report r;
  r.verdict = json{{"accepted", failures.empty()}, {"failures", failures}};
  r.lines.push_back(failures.empty() ? "all certificates accepted" : std::to_string(failures.size()) + " failures");
  for (const auto& f : failures) r.lines.push_back("  " + f);
  r.code = failures.empty() ? ok : negative;
  return r;
}

// ---- verification ---------------------------------------------------------

void expect(bool cond, const std::string& what, std::vector<std::string>& failures) {
  if (!cond) failures.push_back(what);
}

std::vector<std::string> verify_counterexample(const json& c) {
  std::vector<std::string> failures;
  const SignSystem m = decode_system(c.at("system"));
  const std::string claim = c.at("claim").get<std::string>();
  if (!is_com(m)) return {"counterexample system is not a COM"};
  if (claim == "prop7") {
    expect(!check_proposition7(m), "prop7 violation does not reproduce", failures);
    return failures;
  }
  const SignVector target = SignVector::parse(m.ground(), c.at("target").get<std::string>());
  const SeparationQuery q = query_of(target);
  const json& wit = c.at("witness");
  if (claim == "theorem8") {
    const auto hyp = hypothesis_holds(m, q, Variant::contraction);
    expect(hyp.holds && !target_tope_present(m, q), "theorem8 violation does not reproduce", failures);
  } else if (claim == "monotonicity" || claim == "circuit") {
    const WitnessReport w = minimal_witness(m, q);
    const ElementSet d = decode_set(*m.ground(), wit.at("D"), "witness.D");
    expect(w.d == d, "recorded D is not the minimal witness", failures);
    if (claim == "monotonicity") {
      const ElementSet cset = decode_set(*m.ground(), wit.at("C"), "witness.C");
      expect(d.is_subset_of(cset) && !fails_on(m, target, cset), "monotonicity violation does not reproduce",
             failures);
    } else {
      expect(!verify_circuit_structure(m, d, q), "circuit failure does not reproduce", failures);
    }
  } else {
    failures.push_back("unknown claim '" + claim + "'");
  }
  return failures;
}

std::vector<std::string> verify_one(const json& c) {
  std::vector<std::string> failures;
  const std::string kind = c.at("kind").get<std::string>();
  if (kind == "covector") {
    const SignSystem m = decode_system(c.at("system"));
    const SignVector x = SignVector::parse(m.ground(), c.at("covector").get<std::string>());
    const SeparationQuery q{decode_set(*m.ground(), c.at("query").at("V"), "query.V"),
                            decode_set(*m.ground(), c.at("query").at("W"), "query.W")};
    expect(m.contains(x), "covector is not a member of the system", failures);
    expect(q.v.is_subset_of(x.positive()) && q.w.is_subset_of(x.negative()), "covector does not separate V from W",
           failures);
  } else if (kind == "functional") {
    const PointConfiguration p = decode_points(c.at("points"));
    const AffineFunctional f = decode_functional(c.at("functional"), p.dim());
    const ElementSet v = decode_set(*p.ground(), c.at("V"), "V"), w = decode_set(*p.ground(), c.at("W"), "W");
    for (auto i : v.indices()) expect(sgn(f.value(p[i].coords)) < 0, "functional not negative at " + p[i].id, failures);
    for (auto i : w.indices()) expect(sgn(f.value(p[i].coords)) > 0, "functional not positive at " + p[i].id, failures);
  } else if (kind == "failing_subset") {
    const PointConfiguration p = decode_points(c.at("points"));
    const ElementSet v = decode_set(*p.ground(), c.at("V"), "V"), w = decode_set(*p.ground(), c.at("W"), "W");
    const ElementSet s = decode_set(*p.ground(), c.at("subset"), "subset");
    expect(s.is_subset_of(v | w), "subset contains unlabeled points", failures);
    expect(!separating_functional(p, v & s, w & s), "subset is separable", failures);
  } else if (kind == "witness") {
    const SignSystem m = decode_system(c.at("system"));
    const SignVector target = SignVector::parse(m.ground(), c.at("target").get<std::string>());
    const ElementSet d = decode_set(*m.ground(), c.at("D"), "D");
    expect(is_com(m), "witness system is not a COM", failures);
    expect(fails_on(m, target, d), "target restricted to D is a tope of the contraction", failures);
    for (std::size_t k = 0; k < d.size(); ++k) {
      for_each_subset_lex(m.ground_size(), k, [&](std::uint64_t s) {
        if (fails_on(m, target, ElementSet(s)))
          failures.push_back("smaller failing set " + names(*m.ground(), ElementSet(s)) + " exists");
      });
    }
  } else if (kind == "axioms") {
    const SignSystem m = decode_system(c.at("system"));
    expect(c.at("FS").get<bool>() == check_fs(m), "FS verdict differs", failures);
    expect(c.at("SE").get<bool>() == check_se(m), "SE verdict differs", failures);
    expect(c.at("C").get<bool>() == check_c(m), "C verdict differs", failures);
    expect(c.at("om").get<bool>() == is_om(m), "OM verdict differs", failures);
    expect(c.at("simple").get<bool>() == is_simple(m), "simplicity verdict differs", failures);
  } else if (kind == "topes") {
    const SignSystem m = decode_system(c.at("system"));
    expect(c.at("topes").get<std::vector<std::string>>() == topes(m).encoded(), "tope list differs", failures);
  } else if (kind == "rank") {
    const SignSystem m = decode_system(c.at("system"));
    const auto k = c.at("rank").get<std::size_t>();
    const ElementSet a = decode_set(*m.ground(), c.at("shattered"), "shattered");
    expect(a.size() == k && is_shattered(m, a), "recorded set is not a shattered set of the stated rank", failures);
    bool larger = false;
    if (k < m.ground_size())
      larger = any_subset_lex(m.ground_size(), k + 1, [&](std::uint64_t s) { return is_shattered(m, ElementSet(s)); });
    expect(!larger, "a larger shattered set exists", failures);
  } else if (kind == "minor") {
    const SignSystem m = decode_system(c.at("system"));
    const ElementSet f = decode_set(*m.ground(), c.at("elements"), "elements");
    const std::string op = c.at("operation").get<std::string>();
    const SignSystem expected = op == "contract" ? contraction(m, f) : op == "delete" ? deletion(m, f) : reorient_system(m, f);
    expect(decode_system(c.at("result")) == expected, "minor result differs", failures);
  } else if (kind == "build") {
    const PointConfiguration p = decode_points(c.at("points"));
    const SignSystem result = decode_system(c.at("result"));
    const bool linear = c.at("mode").get<std::string>() == "linear";
    // Each listed covector must be realized; the count must match the scan.
    for (const auto& x : result.covectors()) {
      const SignVector on_points(p.ground(), x.plus_mask(), x.minus_mask());
      const auto f = linear ? feasible_linear_sign_vector(p, on_points) : feasible_sign_vector(p, on_points);
      expect(f.has_value(), "covector " + x.to_string() + " is not realizable", failures);
    }
    expect(result == (linear ? linear_om(p) : affine_com(p)), "covector set differs from the enumeration", failures);
  } else if (kind == "counterexample") {
    return verify_counterexample(c);
  } else {
    failures.push_back("unknown certificate kind '" + kind + "'");
  }
  return failures;
}

std::string joined(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

std::vector<std::string> verify_certificate(const json& certificate) {
  try {
    return verify_one(certificate);
  } catch (const std::exception& e) {
    return {std::string("malformed certificate: ") + e.what()};
  }
}

std::vector<std::string> verify_document(const json& document) {
  const json* list = &document;
  if (document.is_object() && document.contains("certificates")) list = &document["certificates"];
  std::vector<std::string> failures;
  if (list->is_object()) return verify_certificate(*list);
  if (!list->is_array()) return {"expected a certificate, an array of certificates, or a report"};
  for (std::size_t i = 0; i < list->size(); ++i)
    for (auto& f : verify_certificate((*list)[i])) failures.push_back("certificate " + std::to_string(i) + ": " + f);
  return failures;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign-vector calculus of complexes of oriented matroids and Kirchberger separation", "comsep"};
  app.require_subcommand(1);
  Options o;
  std::string chosen;

  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json_output, "Print the report as JSON");
    sub->callback([&chosen, name] { chosen = name; });
    return sub;
  };
  auto with_system = [&](CLI::App* sub) { sub->add_option("--system", o.system_path, "System JSON file"); };

  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"check", "Check the (FS), (SE) and (C) axioms, OM and simplicity"},
           {"topes", "List covectors of full support"},
           {"rank", "Largest shattered subset"}}) {
    with_system(add(name, help));
  }
  for (const auto& name : {"contract", "delete", "reorient"}) {
    auto* sub = add(name, std::string(name) + " the given elements");
    with_system(sub);
    sub->add_option("--elements", o.elements, "Comma-separated element ids, e.g. e1,e2");
  }
  auto* build = add("build", "Enumerate the affine (or linear) system of a point file");
  build->add_option("--points", o.points_path, "Point JSON file");
  build->add_flag("--linear", o.linear, "Linear functionals only (alpha = 0)");

  auto* separate = add("separate", "Decide separability of labeled points or of a target in a system");
  separate->add_option("--points", o.points_path, "Point JSON file (labels V and W)");
  with_system(separate);
  separate->add_option("--target", o.target, "Target sign vector, + for V and - for W");
  separate->add_option("--variant", o.variant, "Also print the hypothesis table: contraction|deletion");
  separate->add_option("--max-size", o.max_size, "Largest failing subset to search (default dim+2)");

  auto* witness = add("witness", "Minimal failing set for a non-tope target");
  with_system(witness);
  witness->add_option("--target", o.target, "Full-support target (default all +)");

  auto* kirch = add("kirchberger", "Hypothesis table for a target, or theorem audit over all targets");
  with_system(kirch);
  kirch->add_option("--target", o.target, "Full-support target");

  auto* fuzz = add("fuzz", "Audit the theorem and proof steps over a seeded corpus");
  fuzz->add_option("--seed", o.seed, "Corpus seed");
  fuzz->add_option("--count", o.count, "Number of instances");
  fuzz->add_option("--max-size", o.max_size, "Largest point count (<= 8)");

  auto* verify = add("verify", "Re-check every certificate in a --json report");
  verify->add_option("--certificate", o.certificate_path, "Report or certificate JSON file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  const auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    if (chosen == "check")
      r = cmd_check(o);
    else if (chosen == "topes")
      r = cmd_topes(o);
    else if (chosen == "rank")
      r = cmd_rank(o);
    else if (chosen == "contract" || chosen == "delete" || chosen == "reorient")
      r = cmd_minor(o, chosen);
    else if (chosen == "build")
      r = cmd_build(o);
    else if (chosen == "separate")
      r = cmd_separate(o);
    else if (chosen == "witness")
      r = cmd_witness(o);
    else if (chosen == "kirchberger")
      r = cmd_kirchberger(o);
    else if (chosen == "fuzz")
      r = cmd_fuzz(o);
    else
      r = cmd_verify(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  if (o.json_output) {
    json report{{"command", joined(args)}, {"verdict", r.verdict}};
    for (auto& [k, v] : r.body.items()) report[k] = v;
    report["certificates"] = r.certificates;
    out << report.dump(2) << "\n";
  } else {
    for (const auto& line : r.lines) out << line << "\n";
    out << "verdict: " << r.verdict.dump() << "\n";
    out << "time: " << ms << " ms\n";
  }
  return r.code;
}

}  // namespace comsep::cli
