#include "cremona/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cremona/formal.hpp"
#include "cremona/grouplab.hpp"
#include "cremona/parser.hpp"
#include "json.hpp"

namespace cremona {

namespace {

JonqMap need_jonq(const ParsedMap& m) {
  if (auto* j = std::get_if<JonqMap>(&m)) return *j;
  if (auto* b = std::get_if<MobiusK>(&m)) return JonqMap::base_only(*b);
  fail(errc::not_jonquieres, "this command needs a map in Jonquieres form (eta(x), fiber in y)");
}

CremonaMap need_cremona(const ParsedMap& m) {
  if (auto* c = std::get_if<CremonaMap>(&m)) return *c;
  return jonq_to_cremona(need_jonq(m));
}

MobiusK need_mobius(const ParsedMap& m) {
  if (auto* b = std::get_if<MobiusK>(&m)) return *b;
  if (auto* j = std::get_if<JonqMap>(&m)) {
    const PolyMat& mat = j->mat();
    if (mat.b.is_zero() && mat.c.is_zero() && mat.a == mat.d) return j->base();
  }
  fail(errc::spec_mismatch, "expected a Mobius map in x alone");
}

Poly need_poly(const std::string& text, const FieldSpec& s) {
  RatFunc r = parse_ratfunc(text, s);
  if (auto p = r.as_poly()) return *p;
  fail(errc::spec_mismatch, "'" + text + "' must be a polynomial in x");
}

std::string yesno(bool b) { return b ? "true" : "false"; }

std::string p1_str(const P1Point& p) { return p.to_string(); }

} // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic for plane Cremona and Jonquieres maps"};
  app.name("cremona");
  app.fallthrough();
  app.require_subcommand(1);

  std::string field = "Q";
  unsigned long n_max = 16;
  long order = 8;
  long window = 4;
  long bound = 12;
  bool csv = false;
  bool json = false;
  auto* field_opt =
      app.add_option("--field", field, "coefficient field: Q, Qzeta:n, or Fp:p")->capture_default_str();
  app.add_option("--n-max", n_max, "iterates for degree sequences")->capture_default_str();
  app.add_option("--order", order, "truncation order for formal computations")->capture_default_str();
  app.add_option("--window", window, "half-width of the degree-profile grid")->capture_default_str();
  app.add_option("--bound", bound, "exponent bound for pair relations and powers")->capture_default_str();
  app.add_flag("--csv", csv, "machine output: bare CSV where applicable");
  app.add_flag("--json", json, "machine output: JSON");

  std::string map_a, map_b, arg_eta, arg_r;
  std::string f_alpha, f_a, f_b, f_c, f_d;
  std::string ex_name, ex_alpha = "2", ex_beta = "3";
  unsigned long ex_k = 2, ex_q = 2, ex_depth = 2;
  std::vector<std::string> ex_fracs;

  auto* c_classify = app.add_subcommand("classify", "growth type of a plane map");
  c_classify->add_option("map", map_a, "map text")->required();
  auto* c_delta = app.add_subcommand("delta", "Delta invariant of a fiberwise map");
  c_delta->add_option("map", map_a, "map text")->required();
  auto* c_elliptic = app.add_subcommand("elliptic", "bounded-degree verdict with method note");
  c_elliptic->add_option("map", map_a, "map text")->required();
  auto* c_tele = app.add_subcommand("telescope", "split R as r S / (S o eta)");
  c_tele->add_option("eta", arg_eta, "base Mobius map in x")->required();
  c_tele->add_option("R", arg_r, "multiplier in K(x)")->required();
  auto* c_diag = app.add_subcommand("diag", "eigenstructure of the fiber matrix over K(x)");
  c_diag->add_option("map", map_a, "map text")->required();
  auto* c_inv = app.add_subcommand("involution", "fixed curve of a fiberwise involution");
  c_inv->add_option("map", map_a, "map text")->required();
  auto* c_formal = app.add_subcommand("formal", "diagonalize a local model by formal series");
  c_formal->add_option("alpha", f_alpha, "base multiplier")->required();
  c_formal->add_option("A", f_a, "fiber entry A, A(0) != 0")->required();
  c_formal->add_option("B", f_b, "fiber entry B, B(0) = 0")->required();
  c_formal->add_option("C", f_c, "fiber entry C, C(0) = 0")->required();
  c_formal->add_option("D", f_d, "fiber entry D, D(0) = 0")->required();
  auto* c_persist = app.add_subcommand("persist", "degenerate fibers and persistence report");
  c_persist->add_option("map", map_a, "map text")->required();
  auto* c_cent = app.add_subcommand("cent-test", "centralizer membership against a normal form");
  c_cent->add_option("form", map_a, "map already in elliptic normal form")->required();
  c_cent->add_option("candidate", map_b, "candidate centralizer element")->required();
  auto* c_pair = app.add_subcommand("pair", "classify a commuting pair");
  c_pair->add_option("f", map_a, "first map")->required();
  c_pair->add_option("g", map_b, "second map")->required();
  auto* c_profile = app.add_subcommand("profile", "degree grid of f^i g^j");
  c_profile->add_option("f", map_a, "first map")->required();
  c_profile->add_option("g", map_b, "second map")->required();
  auto* c_ex = app.add_subcommand("examples", "constructions with verified identities");
  c_ex->add_option("name", ex_name, "centb | deserti | torsion-mult | torsion-add")
      ->required()
      ->check(CLI::IsMember({"centb", "deserti", "torsion-mult", "torsion-add"}));
  c_ex->add_option("--k", ex_k, "order of the root of unity (centb)")->capture_default_str();
  c_ex->add_option("--alpha", ex_alpha, "base multiplier")->capture_default_str();
  c_ex->add_option("--beta", ex_beta, "fiber parameter (deserti)")->capture_default_str();
  c_ex->add_option("--q", ex_q, "root exponent (torsion towers)")->capture_default_str();
  c_ex->add_option("--depth", ex_depth, "tower depth (torsion towers)")->capture_default_str();
  c_ex->add_option("--R", ex_fracs, "fraction choices R_1, R_2, ... (torsion towers)");

  c_classify->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    CremonaMap m = need_cremona(parse_map(map_a, s));
    DegreeSequence seq = degree_sequence(m, n_max);
    GrowthClassification g = classify_growth(seq);
    if (json) {
      nlohmann::json j{{"type", growth_name(g.type)}, {"note", g.note},
                       {"degrees", seq.degrees},      {"truncated", seq.truncated}};
      out << j.dump(2) << "\n";
    } else {
      out << growth_name(g.type) << " (" << g.note << ")\n";
    }
  });

  c_delta->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    RatFunc d = delta(need_jonq(parse_map(map_a, s)));
    if (json)
      out << nlohmann::json{{"delta", d.to_string()}}.dump(2) << "\n";
    else
      out << d.to_string() << "\n";
  });

  c_elliptic->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    EllipticVerdict v = is_elliptic(need_jonq(parse_map(map_a, s)));
    if (json) {
      nlohmann::json j{{"elliptic", v.elliptic}, {"exact", v.exact}, {"method", v.method}};
      out << j.dump(2) << "\n";
    } else {
      out << "elliptic: " << yesno(v.elliptic) << (v.exact ? " (exact)" : " (heuristic)") << "\n";
      out << "method: " << v.method << "\n";
    }
  });

  c_tele->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    MobiusK eta = need_mobius(parse_map(arg_eta, s));
    RatFunc R = parse_ratfunc(arg_r, s);
    TelescopeDecomposition t = telescope_split(eta, R);
    if (json) {
      nlohmann::json j{
          {"r", t.r.to_string()}, {"S", t.S.to_string()}, {"certified", t.certified}};
      out << j.dump(2) << "\n";
    } else {
      out << "r = " << t.r.to_string() << "\n";
      out << "S = " << t.S.to_string() << "\n";
      out << "certified: " << yesno(t.certified) << "\n";
    }
  });

  c_diag->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    Diagonalization d = diagonalize_over_kx(need_jonq(parse_map(map_a, s)));
    const char* kind = d.kind == Diagonalization::Kind::split      ? "split"
                       : d.kind == Diagonalization::Kind::non_split ? "non-split"
                                                                     : "scalar";
    if (json) {
      nlohmann::json j{{"kind", kind},
                       {"e1", d.e1.to_string()},
                       {"e2", d.e2.to_string()},
                       {"conjugator", d.conj.to_string()}};
      out << j.dump(2) << "\n";
    } else {
      out << "kind: " << kind << "\n";
      out << "e1 = " << d.e1.to_string() << "\n";
      out << "e2 = " << d.e2.to_string() << "\n";
      out << "conjugator: " << d.conj.to_string() << "\n";
    }
  });

  c_inv->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    InvolutionCurve c = involution_curve(need_jonq(parse_map(map_a, s)));
    if (json) {
      nlohmann::json j{{"a", c.a.to_string()}, {"curve", c.curve.to_string()}};
      out << j.dump(2) << "\n";
    } else {
      out << "a = " << c.a.to_string() << "\n";
      out << "curve: y^2 = " << c.curve.to_string() << "\n";
    }
  });

  c_formal->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    LocalModel m = LocalModel::make(parse_scalar(f_alpha, s), need_poly(f_a, s),
                                    need_poly(f_b, s), need_poly(f_c, s), need_poly(f_d, s),
                                    order);
    FormalConjugation c = solve_efgh(m);
    if (json) {
      nlohmann::json j{{"beta", c.beta.to_string()},   {"valuation", c.beta.val},
                       {"E", c.E.to_string()},         {"F", c.F.to_string()},
                       {"G", c.G.to_string()},         {"H", c.H.to_string()},
                       {"residual_order", c.residual_order}};
      out << j.dump(2) << "\n";
    } else {
      out << c.to_string();
    }
  });

  c_persist->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    JonqMap f = need_jonq(parse_map(map_a, s));
    FiberReport rep = fiber_events(f);
    Report summary = centralizer_persistence_report(f);
    if (json) {
      nlohmann::json ev = nlohmann::json::array();
      for (auto& e : rep.events)
        ev.push_back({{"base", p1_str(e.base)},
                      {"kernel", p1_str(e.kernel_dir)},
                      {"multiplicity", e.multiplicity},
                      {"persistent", e.persistent}});
      nlohmann::json un = nlohmann::json::array();
      for (auto& p : rep.unresolved) un.push_back(p.to_string());
      nlohmann::json j{{"events", ev},
                       {"unresolved", un},
                       {"base_infinite_order", rep.base_infinite_order},
                       {"report", nlohmann::json::parse(summary.json())}};
      out << j.dump(2) << "\n";
    } else {
      for (auto& e : rep.events)
        out << "event: x = " << p1_str(e.base) << ", kernel y = " << p1_str(e.kernel_dir)
            << ", multiplicity " << e.multiplicity << ", "
            << (e.persistent ? "persistent" : "not persistent") << "\n";
      for (auto& p : rep.unresolved) out << "unresolved det factor: " << p.to_string() << "\n";
      out << summary.text();
    }
  });

  c_cent->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    EllipticNormalForm form = elliptic_normal_form_recognize(need_jonq(parse_map(map_a, s)));
    MembershipVerdict v = cent_membership(form, need_jonq(parse_map(map_b, s)));
    if (json) {
      nlohmann::json j{
          {"form", form.to_string()}, {"member", v.member}, {"clause", v.matched}};
      out << j.dump(2) << "\n";
    } else {
      out << "form: " << form.to_string() << "\n";
      out << "member: " << yesno(v.member) << "\n";
      out << "clause: " << v.matched << "\n";
    }
  });

  c_pair->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    PairClassification c =
        classify_pair(need_jonq(parse_map(map_a, s)), need_jonq(parse_map(map_b, s)), bound);
    if (json)
      out << c.report().json() << "\n";
    else
      out << c.to_string();
  });

  c_profile->callback([&] {
    FieldSpec s = FieldSpec::parse(field);
    DegreeProfile p =
        degree_profile(need_jonq(parse_map(map_a, s)), need_jonq(parse_map(map_b, s)), window);
    if (json) {
      nlohmann::json cells = nlohmann::json::array();
      for (long i = -p.window; i <= p.window; ++i)
        for (long j = -p.window; j <= p.window; ++j)
          cells.push_back({{"i", i}, {"j", j}, {"degree", p.at(i, j)}});
      nlohmann::json j{{"window", p.window}, {"fit", p.fit}, {"cells", cells}};
      out << j.dump(2) << "\n";
    } else {
      out << p.to_csv();
      if (!csv) out << "fit: " << p.fit << "\n";
    }
  });

  c_ex->callback([&] {
    // pick a field large enough for the requested roots of unity unless the
    // user chose one explicitly
    std::string fld = field;
    if (field_opt->count() == 0) {
      if (ex_name == "centb" && ex_k > 2) fld = "Qzeta:" + std::to_string(ex_k);
      if (ex_name == "torsion-mult" || ex_name == "torsion-add") {
        unsigned long qd = 1;
        for (unsigned long i = 0; i < ex_depth; ++i) qd *= ex_q;
        if (qd > 2) fld = "Qzeta:" + std::to_string(qd);
      }
    }
    FieldSpec s = FieldSpec::parse(fld);
    nlohmann::json j{{"name", ex_name}, {"field", s.to_string()}};
    if (ex_name == "centb") {
      auto [fm, gm] = example_centb(ex_k, parse_scalar(ex_alpha, s));
      j["f"] = fm.to_string();
      j["g"] = gm.to_string();
      j["commutes"] = true;
      if (!json)
        out << "f = " << fm.to_string() << "\ng = " << gm.to_string()
            << "\ncommutes: verified\n";
    } else if (ex_name == "deserti") {
      JonqMap fm = example_deserti(parse_scalar(ex_alpha, s), parse_scalar(ex_beta, s));
      FiberReport rep = fiber_events(fm);
      j["f"] = fm.to_string();
      nlohmann::json ev = nlohmann::json::array();
      for (auto& e : rep.events)
        ev.push_back({{"base", p1_str(e.base)}, {"persistent", e.persistent}});
      j["events"] = ev;
      if (!json) {
        out << "f = " << fm.to_string() << "\n";
        for (auto& e : rep.events)
          out << "event: x = " << p1_str(e.base) << ", "
              << (e.persistent ? "persistent" : "not persistent") << "\n";
      }
    } else {
      bool mult = ex_name == "torsion-mult";
      std::vector<RatFunc> rs;
      for (auto& t : ex_fracs) rs.push_back(parse_ratfunc(t, s));
      unsigned long need = ex_depth == 0 ? 0 : ex_depth - 1;
      while (rs.size() < need) rs.push_back(parse_ratfunc(mult ? "x + 1" : "1/x", s));
      auto tower = mult ? example_torsion_multiplicative(s, ex_q, ex_depth, rs)
                        : example_torsion_additive(s, ex_q, ex_depth, rs);
      nlohmann::json maps = nlohmann::json::array();
      for (std::size_t i = 0; i < tower.size(); ++i) {
        maps.push_back(tower[i].to_string());
        if (!json) out << "f" << i + 1 << " = " << tower[i].to_string() << "\n";
      }
      j["maps"] = maps;
      j["identities"] = "f_{i+1}^q = f_i verified";
      if (!json) out << "tower identities f_{i+1}^q = f_i: verified\n";
    }
    if (json) out << j.dump(2) << "\n";
  });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const parse_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const calc_error& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 0;
}

} // namespace cremona
