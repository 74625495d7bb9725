#include "gt/json_io.hpp"

#include <algorithm>

namespace gt {

namespace {

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    Rat r = parse_rat(j.get<std::string>());
    if (!is_integer(r)) fail(errc::parse, "expected an integer, got " + j.get<std::string>());
    return numerator(r);
  }
  fail(errc::parse, "expected an integer");
}

Entry entry_from_json(const json& j, std::map<std::string, Rat>& anchors) {
  if (j.is_number_integer()) return Entry{"0", Int(j.get<long long>())};
  if (j.is_string()) {
    Rat v = parse_rat(j.get<std::string>());
    Int fl = floor_rat(v);
    Rat frac = v - Rat(fl);
    if (frac == 0) return Entry{"0", fl};
    std::string id = rat_str(frac);
    auto it = anchors.find(id);
    if (it != anchors.end() && it->second != frac)
      fail(errc::anchor, "literal class '" + id + "' collides with a declared anchor");
    anchors[id] = frac;
    return Entry{id, fl};
  }
  if (j.is_object()) {
    Entry e;
    e.anchor = j.at("anchor").get<std::string>();
    if (j.contains("offset")) e.offset = int_from_json(j.at("offset"));
    return e;
  }
  fail(errc::parse, "entry must be an integer, a rational string, or {anchor, offset}");
}

json entry_to_json(const Entry& e) {
  if (e.anchor == "0") {
    if (e.offset >= std::numeric_limits<long long>::min() &&
        e.offset <= std::numeric_limits<long long>::max())
      return json(static_cast<long long>(e.offset));
    return json(e.offset.str());
  }
  json j;
  j["anchor"] = e.anchor;
  j["offset"] = e.offset >= std::numeric_limits<long long>::min() &&
                        e.offset <= std::numeric_limits<long long>::max()
                    ? json(static_cast<long long>(e.offset))
                    : json(e.offset.str());
  return j;
}

Position position_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) fail(errc::parse, "position must be [row, col]");
  return Position{j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

json tableau_to_json(const Tableau& t) {
  json j;
  j["n"] = t.n();
  json anchors = json::object();
  for (const auto& [id, v] : t.anchors()->values())
    if (id != "0") anchors[id] = rat_str(v);
  if (!anchors.empty()) j["anchors"] = anchors;
  json rows = json::array();
  for (int k = t.n(); k >= 1; --k) {
    json row = json::array();
    for (const Entry& e : t.row(k)) row.push_back(entry_to_json(e));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

Tableau tableau_from_json(const json& j) {
  if (!j.is_object()) fail(errc::parse, "tableau must be an object");
  int n = j.at("n").get<int>();
  std::map<std::string, Rat> anchors;
  if (j.contains("anchors"))
    for (auto it = j["anchors"].begin(); it != j["anchors"].end(); ++it)
      anchors[it.key()] = parse_rat(it.value().get<std::string>());
  const json& rows_json = j.at("rows");
  if (!rows_json.is_array() || static_cast<int>(rows_json.size()) != n)
    fail(errc::parse, "'rows' must list the n rows, top row first");
  std::vector<std::vector<Entry>> rows(n);
  for (int idx = 0; idx < n; ++idx) {
    int k = n - idx;  // top row first
    const json& row = rows_json[idx];
    if (!row.is_array() || static_cast<int>(row.size()) != k)
      fail(errc::parse, "row " + std::to_string(k) + " must have " + std::to_string(k) +
                            " entries");
    for (const json& ej : row) rows[k - 1].push_back(entry_from_json(ej, anchors));
  }
  return Tableau::make(n, std::move(rows), make_anchor_table(anchors));
}

json relation_set_to_json(const RelationSet& c) {
  json j;
  j["n"] = c.n();
  json rels = json::array();
  for (const Relation& r : c.relations()) {
    json rj;
    rj["from"] = {r.from.row, r.from.col};
    rj["rel"] = r.kind == RelKind::ge ? ">=" : ">";
    rj["to"] = {r.to.row, r.to.col};
    rels.push_back(rj);
  }
  j["relations"] = rels;
  return j;
}

RelationSet relation_set_from_json(const json& j) {
  if (!j.is_object()) fail(errc::parse, "relation set must be an object");
  int n = j.at("n").get<int>();
  std::vector<Relation> rels;
  for (const json& rj : j.at("relations")) {
    Relation r;
    r.from = position_from_json(rj.at("from"));
    r.to = position_from_json(rj.at("to"));
    std::string kind = rj.at("rel").get<std::string>();
    if (kind == ">=")
      r.kind = RelKind::ge;
    else if (kind == ">")
      r.kind = RelKind::gt;
    else
      fail(errc::parse, "'rel' must be \">=\" or \">\"");
    rels.push_back(r);
  }
  return RelationSet(n, std::move(rels));
}

json formal_vector_to_json(const FormalVector& v) {
  json j = json::array();
  for (const auto& [t, c] : v.terms()) {
    json term;
    term["coeff"] = rat_str(c);
    term["tableau"] = tableau_to_json(t);
    j.push_back(term);
  }
  return j;
}

FormalVector formal_vector_from_json(const json& j) {
  if (!j.is_array()) fail(errc::parse, "formal vector must be an array");
  FormalVector v;
  for (const json& term : j)
    v.add(tableau_from_json(term.at("tableau")), parse_rat(term.at("coeff").get<std::string>()));
  return v;
}

json fingerprint_to_json(const Fingerprint& f) {
  json j;
  json gamma = json::object();
  for (const auto& [mk, v] : f.gamma())
    gamma[std::to_string(mk.first) + "," + std::to_string(mk.second)] = rat_str(v);
  j["gamma"] = gamma;
  json rows = json::array();
  for (const auto& row : f.row_multisets()) {
    json rj = json::array();
    for (const Entry& e : row) rj.push_back(entry_to_json(e));
    rows.push_back(rj);
  }
  j["row_multisets"] = rows;
  json sing = json::array();
  for (int m : f.singular_rows()) sing.push_back(m);
  j["singular_rows"] = sing;
  return j;
}

json check_failure_to_json(const CheckFailure& f) {
  json j;
  j["relation"] = f.relation_id;
  j["tableau"] = tableau_to_json(f.tableau);
  j["defect"] = formal_vector_to_json(f.defect);
  return j;
}

json report_to_json(const VerificationReport& r) {
  json j;
  j["spec"] = r.spec;
  j["radius"] = r.radius;
  j["checks_run"] = r.checks_run;
  j["tableaux_checked"] = r.tableaux_checked;
  j["passed"] = r.passed;
  json fails = json::array();
  for (const CheckFailure& f : r.failures) fails.push_back(check_failure_to_json(f));
  j["failures"] = fails;
  return j;
}

json gg_verdict_to_json(const GGVerdict& v) {
  json j;
  j["verdict"] = v.is_module ? "Module" : "NotModule";
  j["lp_condition"] = v.lp;
  j["admissible"] = v.admissible;
  j["verification_passed"] = v.verification_passed;
  j["top_row_widened"] = v.top_row_widened;
  json top = json::array();
  for (const Int& x : v.top_row) top.push_back(static_cast<long long>(x));
  j["top_row"] = top;
  if (v.realization) j["realization"] = tableau_to_json(*v.realization);
  if (v.witness) j["witness"] = check_failure_to_json(*v.witness);
  return j;
}

json tableau_module_report_to_json(const TableauModuleReport& r) {
  json j;
  j["noncritical"] = r.noncritical;
  j["relations_hold"] = r.relations_ok;
  j["multiplicity_one"] = r.multiplicity_one;
  j["gamma_by_formula"] = r.gamma_ok;
  j["all_conditions"] = r.all();
  json rf = json::array();
  for (const CheckFailure& f : r.relation_failures) rf.push_back(check_failure_to_json(f));
  j["relation_failures"] = rf;
  json gf = json::array();
  for (const auto& [mk, desc] : r.gamma_failures) {
    json g;
    g["m"] = mk.first;
    g["k"] = mk.second;
    g["detail"] = desc;
    gf.push_back(g);
  }
  j["gamma_failures"] = gf;
  return j;
}

namespace {

std::vector<Int> top_row_from_json(const json& j) {
  std::vector<Int> top;
  for (const json& x : j) top.push_back(int_from_json(x));
  return top;
}

IndexFamily family_from_json(const json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const json& p : j) {
    if (!p.is_array() || p.size() != 2) fail(errc::parse, "family entries must be pairs");
    pairs.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  return IndexFamily::make(std::move(pairs));
}

json handle_command(const json& req, int& exit_code) {
  const std::string verb = req.at("verb").get<std::string>();
  const std::uint64_t seed = req.value("rng_seed", 0ULL);
  const int radius = req.value("radius", 2);
  const int assignments = req.value("anchor_assignments", 3);
  json resp;
  resp["verb"] = verb;
  resp["rng_seed"] = seed;

  if (verb == "check-standard") {
    Tableau t = tableau_from_json(req.at("tableau"));
    bool ok = is_standard(t);
    resp["standard"] = ok;
    exit_code = ok ? 0 : 1;
  } else if (verb == "check-noncritical") {
    if (req.contains("tableau")) {
      bool ok = is_noncritical_tableau(tableau_from_json(req.at("tableau")));
      resp["noncritical"] = ok;
      exit_code = ok ? 0 : 1;
    } else {
      bool ok = is_noncritical_set(relation_set_from_json(req.at("relations")));
      resp["noncritical"] = ok;
      exit_code = ok ? 0 : 1;
    }
  } else if (verb == "decompose") {
    RelationSet c = relation_set_from_json(req.at("relations"));
    json comps = json::array();
    for (const RelationSet& comp : decompose(c)) comps.push_back(relation_set_to_json(comp));
    resp["components"] = comps;
  } else if (verb == "reduce") {
    RelationSet c = relation_set_from_json(req.at("relations"));
    resp["reduced"] = relation_set_to_json(reduce(c));
  } else if (verb == "check-admissible") {
    RelationSet c = relation_set_from_json(req.at("relations"));
    bool sat = is_satisfiable(c);
    resp["satisfiable"] = sat;
    bool adm = false;
    if (sat) {
      resp["noncritical"] = is_noncritical_set(c);
      resp["pre_admissible"] = is_pre_admissible(c);
      adm = is_admissible(c);
    }
    resp["admissible"] = adm;
    json crosses = json::array();
    for (const Cross& x : detect_crosses(c)) crosses.push_back({x.k, x.i, x.s, x.j, x.t});
    resp["crosses"] = crosses;
    exit_code = adm ? 0 : 1;
  } else if (verb == "sample-realization") {
    RelationSet c = relation_set_from_json(req.at("relations"));
    Int gap = req.contains("gap") ? int_from_json(req.at("gap")) : Int(2);
    Tableau t = sample_realization(c, gap, seed);
    resp["tableau"] = tableau_to_json(t);
    resp["is_realization"] = is_realization(t, c);
  } else if (verb == "enumerate-basis") {
    RelationSet c = relation_set_from_json(req.at("relations"));
    SpecBasis b(c, tableau_from_json(req.at("seed")));
    std::vector<Tableau> ball = enumerate_ball(b, radius);
    resp["count"] = ball.size();
    json arr = json::array();
    for (const Tableau& t : ball) arr.push_back(tableau_to_json(t));
    resp["tableaux"] = arr;
  } else if (verb == "apply") {
    RelationSet c = relation_set_from_json(req.at("relations"));
    SpecBasis b(c, tableau_from_json(req.at("seed")));
    FormalVector v;
    if (req.contains("vector"))
      v = formal_vector_from_json(req.at("vector"));
    else if (req.contains("tableau"))
      v = FormalVector::unit(tableau_from_json(req.at("tableau")));
    else
      v = FormalVector::unit(b.seed());
    const json& op = req.at("op");
    if (op.is_object()) {
      v = apply_Eij(b, op.at("i").get<int>(), op.at("j").get<int>(), v);
    } else if (op.is_array()) {
      GeneratorWord w;
      for (const json& factor : op)
        w.factors.push_back({factor.at(0).get<int>(), factor.at(1).get<int>()});
      v = apply_word(b, w, v);
    } else {
      fail(errc::parse, "'op' must be {i,j} or a word [[i,j],...]");
    }
    resp["result"] = formal_vector_to_json(v);
  } else if (verb == "verify-module") {
    RelationSet c = relation_set_from_json(req.at("relations"));
    Tableau seed_tab = tableau_from_json(req.at("seed"));
    bool passed = true;
    json reports = json::array();
    for (int a = 0; a < assignments; ++a) {
      SpecBasis b(c, reassign_anchors(seed_tab, a));
      VerificationReport rep = check_defining_relations(b, radius);
      passed = passed && rep.passed;
      reports.push_back(report_to_json(rep));
    }
    resp["passed"] = passed;
    resp["anchor_assignments"] = assignments;
    resp["reports"] = reports;
    exit_code = passed ? 0 : 1;
  } else if (verb == "gamma") {
    Tableau t = tableau_from_json(req.at("tableau"));
    std::vector<std::pair<int, int>> mks;
    if (req.contains("m")) {
      mks.push_back({req.at("m").get<int>(), req.at("k").get<int>()});
    } else {
      for (int m = 1; m <= t.n(); ++m)
        for (int k = 1; k <= m; ++k) mks.push_back({m, k});
    }
    json values = json::object();
    for (auto [m, k] : mks) {
      try {
        values[std::to_string(m) + "," + std::to_string(k)] = rat_str(gamma_value(m, k, t));
      } catch (const error& e) {
        if (e.code() != errc::singular_row) throw;
        values[std::to_string(m) + "," + std::to_string(k)] = "singular";
      }
    }
    resp["gamma"] = values;
    if (req.contains("relations") && req.contains("seed")) {
      RelationSet c = relation_set_from_json(req.at("relations"));
      SpecBasis b(c, tableau_from_json(req.at("seed")));
      bool ok = true;
      json defects = json::array();
      for (auto [m, k] : mks) {
        GammaCheck gc = check_gamma_action(b, t, m, k);
        if (!gc.ok) {
          ok = false;
          json d;
          d["m"] = m;
          d["k"] = k;
          d["defect"] = formal_vector_to_json(gc.defect);
          defects.push_back(d);
        }
      }
      resp["action_matches_formula"] = ok;
      resp["defects"] = defects;
      exit_code = ok ? 0 : 1;
    }
  } else if (verb == "fingerprint") {
    resp["fingerprint"] = fingerprint_to_json(fingerprint(tableau_from_json(req.at("tableau"))));
  } else if (verb == "multiplicity") {
    RelationSet c = relation_set_from_json(req.at("relations"));
    SpecBasis b(c, tableau_from_json(req.at("seed")));
    bool ok = multiplicity_one_check(b, radius);
    resp["multiplicity_one"] = ok;
    exit_code = ok ? 0 : 1;
  } else if (verb == "irreducible") {
    RelationSet c = relation_set_from_json(req.at("relations"));
    Tableau t = tableau_from_json(req.at("seed"));
    bool ok = is_irreducible(c, t);
    resp["irreducible"] = ok;
    exit_code = ok ? 0 : 1;
  } else if (verb == "frz") {
    FrzResult r = frz_check(tableau_from_json(req.at("tableau")));
    switch (r.status) {
      case FrzResult::Status::found:
        resp["status"] = "found";
        resp["set"] = relation_set_to_json(*r.set);
        exit_code = 0;
        break;
      case FrzResult::Status::ambiguous: {
        resp["status"] = "ambiguous";
        json cands = json::array();
        for (const RelationSet& cand : r.candidates) cands.push_back(relation_set_to_json(cand));
        resp["candidates"] = cands;
        exit_code = 1;
        break;
      }
      case FrzResult::Status::none:
        resp["status"] = "none";
        exit_code = 1;
        break;
    }
  } else if (verb == "gg-check") {
    int n = req.at("n").get<int>();
    IndexFamily fam = family_from_json(req.at("family"));
    if (fam.n() != n) fail(errc::parse, "family length does not match n");
    GGVerdict v = theorem1_check(fam, top_row_from_json(req.at("top_row")), radius, seed);
    resp.update(gg_verdict_to_json(v));
    exit_code = v.is_module ? 0 : 1;
  } else if (verb == "gg-sweep") {
    int n = req.at("n").get<int>();
    std::vector<Int> top = top_row_from_json(req.at("top_row"));
    bool agree = true;
    json verdicts = json::array();
    for (const IndexFamily& fam : enumerate_families(n)) {
      GGVerdict v = theorem1_check(fam, top, radius, seed);
      json vj = gg_verdict_to_json(v);
      json fj = json::array();
      for (auto [a, b] : fam.pairs) fj.push_back({a, b});
      vj["family"] = fj;
      bool consistent = (v.is_module == v.lp) && (v.lp == v.admissible) &&
                        (v.is_module ? v.verification_passed : v.witness.has_value());
      vj["consistent"] = consistent;
      agree = agree && consistent;
      verdicts.push_back(vj);
    }
    resp["families"] = verdicts;
    resp["three_way_agreement"] = agree;
    exit_code = agree ? 0 : 1;
  } else if (verb == "rr-explore") {
    int n = req.at("n").get<int>();
    size_t limit = req.value("limit", 500);
    std::vector<RelationSet> sets = rr_reachable(n, limit);
    bool all_adm = true;
    json arr = json::array();
    for (const RelationSet& s : sets) {
      bool adm = is_admissible(s);
      all_adm = all_adm && adm;
      json sj;
      sj["set"] = relation_set_to_json(s);
      sj["admissible"] = adm;
      arr.push_back(sj);
    }
    resp["count"] = sets.size();
    resp["sets"] = arr;
    resp["all_admissible"] = all_adm;
    exit_code = all_adm ? 0 : 1;
  } else {
    fail(errc::parse, "unknown verb '" + verb + "'");
  }
  return resp;
}

}  // namespace

json run_command(const json& request, int& exit_code) {
  exit_code = 0;
  try {
    return handle_command(request, exit_code);
  } catch (const error& e) {
    exit_code = 2;
    json resp;
    resp["error"] = {{"code", errc_name(e.code())}, {"message", e.what()}};
    return resp;
  } catch (const json::exception& e) {
    exit_code = 2;
    json resp;
    resp["error"] = {{"code", "ParseError"}, {"message", e.what()}};
    return resp;
  }
}

}  // namespace gt
