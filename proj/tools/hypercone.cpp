// hypercone: exact order-theoretic and cone-duality computations at the
// command line. Subcommands map one-to-one onto the library modules; every
// run with a fixed seed produces byte-identical reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "hypercone/acceptance.hpp"
#include "hypercone/chrono.hpp"
#include "hypercone/completion_check.hpp"
#include "hypercone/homext.hpp"
#include "hypercone/hypernorm.hpp"
#include "hypercone/lorentz.hpp"
#include "hypercone/matrixdual.hpp"
#include "hypercone/mcp.hpp"
#include "hypercone/polygon.hpp"

using namespace hypercone;

namespace {

json load_json(const std::string& arg) {
  // inline JSON or a path to a file holding it
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{' || arg[0] == '"'))
    return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open " + arg);
  json j;
  in >> j;
  return j;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  out << text;
}

LpTag parse_tag(const std::string& s) {
  if (s == "-inf" || s == "-infinity") return LpTag::minus_inf();
  if (s == "0+") return LpTag::zero_plus();
  if (s == "0-") return LpTag::zero_minus();
  return LpTag::of(rat_from_json(json(s)));
}

ConeVec parse_vec(const json& j) {
  ConeVec v;
  for (const auto& x : j) v.push_back(ext_from_json(x));
  return v;
}

DiscreteCone parse_cone(const json& maybe_mu, size_t n) {
  if (maybe_mu.is_null()) return DiscreteCone::ones((int)n);  // counting measure
  DiscreteCone c;
  for (const auto& x : maybe_mu) c.mu.push_back(rat_from_json(x));
  if (c.mu.size() != n) throw std::invalid_argument("weight count mismatch");
  return c;
}

FinitePoset parse_finite_poset(const json& j) {
  int n = j.contains("elements") ? (int)j["elements"].size() : j.at("n").get<int>();
  std::vector<std::pair<int, int>> rel;
  for (const auto& pair : j.at("leq")) rel.push_back({pair[0].get<int>(), pair[1].get<int>()});
  return FinitePoset(n, std::move(rel), true);
}

PosetPtr parse_catalog(const std::string& name) {
  if (name == "omega_chain") return omega_chain();
  if (name == "notip") return notip_poset();
  if (name == "doppiafreccia") return doppiafreccia();
  if (name == "alphafreccia1") return alphafreccia(1);
  if (name == "alphafreccia2") return alphafreccia(2);
  if (name == "alphafreccia3") return alphafreccia(3);
  if (name == "example6") return example6_poset();
  if (name == "two_caps") return two_caps();
  if (name == "two_chains") return two_chains();
  if (name == "glued_chains") return glued_chains();
  if (name == "four_branches") return four_branches();
  if (name == "finite_subsets") return finite_subsets();
  if (name == "seq_window") return seq_window_finite();
  if (name == "causal_plane") return minkowski_window();
  if (name.rfind("chain", 0) == 0) return finite_chain_sym(std::stoi(name.substr(5)));
  throw std::invalid_argument("unknown catalog poset " + name);
}

int wrapped(const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact order-theoretic and cone-duality computations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path, format = "human";
  uint64_t seed = 7;
  int budget = 64;
  double tol = 1e-9;
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "json | csv | human");
  app.add_option("--seed", seed, "deterministic seed");
  app.add_option("--budget", budget, "chain/sample budget");
  app.add_option("--tol", tol, "floating tolerance where one applies");

  // complete -------------------------------------------------------------
  auto* complete = app.add_subcommand("complete", "directed completion of a poset");
  std::string complete_in;
  bool enhanced = false;
  complete->add_option("--in", complete_in, "finite poset JSON or catalog name")->required();
  complete->add_flag("--enhanced", enhanced, "add a bottom when the minimum is missing");
  complete->callback([&]() {
    std::exit(wrapped([&]() {
      json out;
      bool looks_like_json = !complete_in.empty() &&
                             (complete_in[0] == '{' || complete_in.find(".json") != std::string::npos);
      PosetPtr p;
      if (looks_like_json) {
        json j = load_json(complete_in);
        if (j.is_object() && j.contains("leq")) {
          // a finite order is already directed complete
          FinitePoset fp = parse_finite_poset(j);
          out["kind"] = "finite";
          out["already_complete"] = true;
          out["needs_bottom"] = !fp.minimum().has_value();
          emit(out_path, out.dump(2) + "\n");
          return 0;
        }
        if (j.is_object() && j.contains("branches")) {
          // the attachment-free fragment of the branch format
          if (j.contains("attach") && !j["attach"].empty())
            throw UnsupportedPresentation("attachment tables beyond the built-in shapes");
          std::vector<long long> lengths;
          for (const auto& b : j["branches"]) {
            if (b.is_object() && b.contains("length"))
              lengths.push_back(b["length"].is_string() ? -1 : b["length"].get<long long>());
            else if (b.is_string())
              lengths.push_back(-1);  // "omega"
            else
              lengths.push_back(b.get<long long>());
          }
          p = chain_bundle(lengths);
        } else {
          throw std::invalid_argument("poset JSON needs leq or branches fields");
        }
      } else {
        p = parse_catalog(complete_in);
      }
      auto cp = directed_completion_branch(p, enhanced);
      auto claim = claim_from_completion(p, cp);
      auto repc = check_completion_claim(claim, budget);
      out["kind"] = "branch";
      out["completion"] = cp.bar->name();
      out["recognition_consistent"] = repc.consistent;
      out["counterexample"] = repc.counterexample;
      out["chains_checked"] = repc.chains_checked;
      emit(out_path, out.dump(2) + "\n");
      return repc.consistent ? 0 : 1;
    }));
  });

  // dm ---------------------------------------------------------------------
  auto* dm = app.add_subcommand("dm", "Dedekind-MacNeille completion of a finite poset");
  std::string dm_in;
  dm->add_option("--in", dm_in)->required();
  dm->callback([&]() {
    std::exit(wrapped([&]() {
      FinitePoset p = parse_finite_poset(load_json(dm_in));
      auto d = dm_completion(p);
      json cuts = json::array();
      for (const auto& cut : d.cuts) cuts.push_back(cut.elements());
      json out{{"cuts", cuts}, {"embedding", d.embed}, {"count", d.cuts.size()}};
      emit(out_path, out.dump(2) + "\n");
      return 0;
    }));
  });

  // check-mcp ----------------------------------------------------------------
  auto* mcp = app.add_subcommand("check-mcp", "monotone-convergence audit of a functional");
  std::string mcp_map, mcp_catalog, lam = "0", eta = "1";
  mcp->add_option("--map", mcp_map, "weighted functional JSON: {mu, w, support}");
  mcp->add_option("--catalog", mcp_catalog, "catalog cone id a..f");
  mcp->add_option("--lam", lam);
  mcp->add_option("--eta", eta);
  mcp->callback([&]() {
    std::exit(wrapped([&]() {
      json out;
      if (!mcp_catalog.empty()) {
        auto q = catalog_cone_query(mcp_catalog[0], ext_from_json(json(lam)),
                                    ext_from_json(json(eta)), budget);
        out["has_mcp"] = q.has_mcp;
        out["is_cone_element_functional"] = q.is_cone_element_functional;
        out["note"] = q.note;
        if (!q.has_mcp) {
          out["witness_chain"] = q.witness_label;
          out["value_at_sup"] = ext_to_json(q.witness_sup_value);
          out["chain_value_bound"] = ext_to_json(q.witness_bound);
        }
        emit(out_path, out.dump(2) + "\n");
        return q.has_mcp ? 0 : 1;
      }
      json j = load_json(mcp_map);
      WeightedFunctionalSpec spec;
      for (const auto& x : j.at("mu")) spec.mu.push_back(rat_from_json(x));
      for (const auto& x : j.at("w")) spec.w.push_back(ext_from_json(x));
      for (const auto& x : j.at("support")) spec.support.push_back(x.get<bool>());
      const int n = (int)spec.mu.size();
      std::vector<ValueChain<ConeVec>> chains;
      for (int i = 0; i < n; ++i) {
        ValueChain<ConeVec> ramp;
        ramp.label = "ramp" + std::to_string(i);
        ramp.at = [n, i](long long k) {
          ConeVec v(n, ExtNonneg(Rat(0)));
          v[i] = ExtNonneg(Rat(k));
          return v;
        };
        ramp.sup = ConeVec(n, ExtNonneg(Rat(0)));
        ramp.sup[i] = ExtNonneg::inf();
        if (!spec.support[i]) ramp.value_bound = ExtNonneg::inf();
        chains.push_back(ramp);
      }
      auto T = [&](const ConeVec& v) { return weighted_eval(spec, v); };
      auto verdict = check_mcp<ConeVec>(cv_leq, chains, T, budget);
      out["pass"] = verdict.pass;
      out["budget_limited"] = verdict.budget_limited;
      if (!verdict.pass) out["witness"] = verdict.witness;
      emit(out_path, out.dump(2) + "\n");
      return verdict.pass ? 0 : 1;
    }));
  });

  // project --------------------------------------------------------------------
  auto* project = app.add_subcommand("project", "greatest monotone minorant of a finite map");
  std::string project_in;
  project->add_option("--map", project_in, "{source, lattice, values}")->required();
  project->callback([&]() {
    std::exit(wrapped([&]() {
      json j = load_json(project_in);
      FinitePoset src = parse_finite_poset(j.at("source"));
      FinitePoset lat = parse_finite_poset(j.at("lattice"));
      std::vector<int> T = j.at("values").get<std::vector<int>>();
      auto pr = pr_project_finite(src, lat, T);
      json out{{"projection", pr}, {"fixed_point", pr == T}};
      emit(out_path, out.dump(2) + "\n");
      return 0;
    }));
  });

  // cone-suite -------------------------------------------------------------------
  auto* cone_suite = app.add_subcommand("cone-suite", "lattice-law and wedge-axiom sampling");
  int cs_n = 4;
  long long cs_cases = 1000;
  cone_suite->add_option("--n", cs_n);
  cone_suite->add_option("--cases", cs_cases);
  cone_suite->callback([&]() {
    std::exit(wrapped([&]() {
      SuiteReport r;
      r.seed = seed;
      auto laws = lattice_law_suite(cs_n, cs_cases, seed);
      r.add("cone.lattice_laws", laws.failures == 0, laws.first_failure, laws.cases);
      std::string why;
      bool wa = wedge_axioms_hold(cs_n, (int)std::min<long long>(cs_cases, 2000), seed, &why);
      r.add("cone.wedge_axioms", wa, why, std::min<long long>(cs_cases, 2000));
      emit(out_path, r.render(format));
      return r.all_pass() ? 0 : 1;
    }));
  });

  // rk ---------------------------------------------------------------------------
  auto* rk = app.add_subcommand("rk", "Riesz-Kantorovich join/meet with witnesses");
  std::string rk_f1, rk_f2, rk_v, rk_mu;
  rk->add_option("--f1", rk_f1)->required();
  rk->add_option("--f2", rk_f2)->required();
  rk->add_option("--v", rk_v)->required();
  rk->add_option("--mu", rk_mu);
  rk->callback([&]() {
    std::exit(wrapped([&]() {
      ConeVec f1 = parse_vec(load_json(rk_f1)), f2 = parse_vec(load_json(rk_f2)),
              v = parse_vec(load_json(rk_v));
      DiscreteCone cone = parse_cone(rk_mu.empty() ? json() : load_json(rk_mu), v.size());
      auto r = rk_join_meet(cone, DualVector{f1}, DualVector{f2}, v);
      json out{{"join", ext_to_json(r.join_value)},
               {"meet", ext_to_json(r.meet_value)},
               {"join_split", {cv_str(r.join_v1), cv_str(r.join_v2)}},
               {"meet_split", {cv_str(r.meet_v1), cv_str(r.meet_v2)}}};
      emit(out_path, out.dump(2) + "\n");
      return 0;
    }));
  });

  // extend --------------------------------------------------------------------------
  auto* extend = app.add_subcommand("extend", "extend a partial functional over the cone");
  std::string ext_spec;
  extend->add_option("--spec", ext_spec)->required();
  extend->callback([&]() {
    std::exit(wrapped([&]() {
      json j = load_json(ext_spec);
      ExtensionProblem p;
      for (const auto& g : j.at("gens")) {
        std::vector<Rat> gen;
        for (const auto& x : g) gen.push_back(rat_from_json(x));
        p.gens.push_back(gen);
      }
      p.dim = (int)p.gens.at(0).size();
      for (const auto& x : j.at("values")) p.values.push_back(ext_from_json(x));
      DiscreteCone cone = parse_cone(j.contains("mu") ? j["mu"] : json(), p.dim);
      if (j.contains("phi")) p.phi_coeff = parse_vec(j["phi"]);
      if (j.contains("psi")) p.psi_coeff = parse_vec(j["psi"]);
      std::vector<int> order;
      if (j.contains("order")) order = j["order"].get<std::vector<int>>();
      else
        for (int i = 0; i < p.dim; ++i) order.push_back(i);
      auto r = extend_all(cone, p, order, seed);
      json fv = json::array();
      for (const auto& x : r.dual.f) fv.push_back(ext_to_json(x));
      json out{{"dual", fv}, {"bounds_hold", r.bounds_hold},
               {"extends_up_to_eps", r.extends_up_to_eps}};
      emit(out_path, out.dump(2) + "\n");
      return r.bounds_hold ? 0 : 1;
    }));
  });

  // hahn-banach -----------------------------------------------------------------------
  auto* hb = app.add_subcommand("hahn-banach", "classical extension through the future cone");
  std::string hb_p, hb_t;
  hb->add_option("--p", hb_p, "{forms: [[...]]}")->required();
  hb->add_option("--t", hb_t, "{basis: [[...]], values: [...]}")->required();
  hb->callback([&]() {
    std::exit(wrapped([&]() {
      json pj = load_json(hb_p), tj = load_json(hb_t);
      PolyhedralSublinear p;
      for (const auto& f : pj.at("forms")) {
        std::vector<Rat> form;
        for (const auto& x : f) form.push_back(rat_from_json(x));
        p.forms.push_back(form);
      }
      std::vector<std::vector<Rat>> basis;
      for (const auto& b : tj.at("basis")) {
        std::vector<Rat> v;
        for (const auto& x : b) v.push_back(rat_from_json(x));
        basis.push_back(v);
      }
      std::vector<Rat> values;
      for (const auto& x : tj.at("values")) values.push_back(rat_from_json(x));
      auto r = hahn_banach(p, basis, values);
      json coeffs = json::array();
      for (const auto& c : r.t_hat) coeffs.push_back(rat_to_json(c));
      json out{{"t_hat", coeffs}, {"extends", r.extends}, {"below_p", r.below_p}};
      emit(out_path, out.dump(2) + "\n");
      return (r.extends && r.below_p) ? 0 : 1;
    }));
  });

  // norm / norm-dual ---------------------------------------------------------------------
  auto* norm = app.add_subcommand("norm", "L^p norm of a vector, p in [-inf, 1] or 0+/0-");
  std::string norm_p = "1", norm_f, norm_mu;
  bool normalize = false;
  norm->add_option("--p", norm_p)->required();
  norm->add_option("--f", norm_f)->required();
  norm->add_option("--mu", norm_mu);
  norm->add_flag("--normalize", normalize, "rescale weights to a probability for 0+/0-");
  norm->callback([&]() {
    std::exit(wrapped([&]() {
      ConeVec f = parse_vec(load_json(norm_f));
      DiscreteCone cone = parse_cone(norm_mu.empty() ? json() : load_json(norm_mu), f.size());
      if (normalize) {
        Rat total(0);
        for (const Rat& m : cone.mu) total += m;
        for (Rat& m : cone.mu) m /= total;
      }
      LpTag tag = parse_tag(norm_p);
      auto exact = lp_norm_exact(cone, f, tag);
      json out;
      out["p"] = tag.str();
      if (exact) out["value"] = ext_to_json(*exact);
      out["value_float"] = lp_norm(cone, f, tag);
      out["exact"] = exact.has_value();
      emit(out_path, out.dump(2) + "\n");
      return 0;
    }));
  });

  auto* nd = app.add_subcommand("norm-dual", "attaining dual vector and pairing");
  std::string nd_p = "1", nd_f, nd_mu;
  nd->add_option("--p", nd_p)->required();
  nd->add_option("--f", nd_f)->required();
  nd->add_option("--mu", nd_mu);
  nd->add_flag("--normalize", normalize);
  nd->callback([&]() {
    std::exit(wrapped([&]() {
      ConeVec f = parse_vec(load_json(nd_f));
      DiscreteCone cone = parse_cone(nd_mu.empty() ? json() : load_json(nd_mu), f.size());
      if (normalize) {
        Rat total(0);
        for (const Rat& m : cone.mu) total += m;
        for (Rat& m : cone.mu) m /= total;
      }
      auto att = dual_attain(cone, f, parse_tag(nd_p));
      json out{{"pairing", att.pairing}, {"g_norm", att.gq_norm}, {"f_norm", att.f_norm},
               {"g", att.g}};
      if (att.pairing_exact) out["pairing_exact"] = ext_to_json(*att.pairing_exact);
      emit(out_path, out.dump(2) + "\n");
      return 0;
    }));
  });

  // matrix-dual -----------------------------------------------------------------------------
  auto* md = app.add_subcommand("matrix-dual", "spectral p-norm duality on a PSD matrix");
  std::string md_p = "-1", md_a;
  md->add_option("--p", md_p)->required();
  md->add_option("--a", md_a, "row-major matrix JSON")->required();
  md->callback([&]() {
    std::exit(wrapped([&]() {
      json j = load_json(md_a);
      int d = (int)j.size();
      SymMatrix a(d);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) a(r, c) = j[r][c].get<double>();
      double p = md_p == "-inf" ? -std::numeric_limits<double>::infinity() : std::stod(md_p);
      auto att = matrix_dual_attain(a, p);
      json bstar = json::array();
      for (int r = 0; r < d; ++r) {
        json row = json::array();
        for (int c = 0; c < d; ++c) row.push_back(att.b_star(r, c));
        bstar.push_back(row);
      }
      json out{{"norm", att.a_norm}, {"pairing", att.pairing}, {"gap", att.gap},
               {"b_star", bstar}};
      emit(out_path, out.dump(2) + "\n");
      return att.gap <= 1e-8 ? 0 : 1;
    }));
  });

  // lorentz ---------------------------------------------------------------------------------
  auto* lor = app.add_subcommand("lorentz", "triangle-norm duality and the causal classifier");
  auto* lor_dual = lor->add_subcommand("dual", "dual triangle norm at a point");
  std::string lor_p = "2", lor_point = "1,0";
  lor_dual->add_option("--p", lor_p);
  lor_dual->add_option("--point", lor_point, "t,x");
  lor_dual->callback([&]() {
    std::exit(wrapped([&]() {
      auto comma = lor_point.find(',');
      double t = std::stod(lor_point.substr(0, comma));
      double x = std::stod(lor_point.substr(comma + 1));
      double p = lor_p == "inf" ? std::numeric_limits<double>::infinity() : std::stod(lor_p);
      json out{{"dual", tri_dual(TriangleNorm::lp(p), t, x)},
               {"norm", tri_norm(TriangleNorm::lp(p), t, x)}};
      emit(out_path, out.dump(2) + "\n");
      return 0;
    }));
  });
  auto* lor_cls = lor->add_subcommand("classify", "classify a monotone causal sequence");
  std::string ray_in;
  lor_cls->add_option("--ray", ray_in)->required();
  lor_cls->callback([&]() {
    std::exit(wrapped([&]() {
      json j = load_json(ray_in);
      RaySequence r;
      std::string fam = j.at("family").get<std::string>();
      r.family = fam == "constant"  ? RaySequence::kConstant
                 : fam == "timelike" ? RaySequence::kTimelike
                 : fam == "null"     ? RaySequence::kNull
                                     : RaySequence::kCauchyTail;
      r.base.t = rat_from_json(j.at("base_t"));
      for (const auto& x : j.at("base_v")) r.base.v.push_back(rat_from_json(x));
      for (const auto& x : j.at("dir")) r.direction.push_back(rat_from_json(x));
      r.speed = rat_from_json(j.at("speed"));
      auto v = classify_directed(r, tol, budget);
      json out;
      switch (v.kind) {
        case ClassifyVerdict::kPoint: {
          json pv = json::array();
          for (const auto& x : v.point.v) pv.push_back(rat_to_json(x));
          out = {{"verdict", "point"}, {"t", rat_to_json(v.point.t)}, {"v", pv}};
          break;
        }
        case ClassifyVerdict::kTimeInfinity: out = {{"verdict", "time_infinity"}}; break;
        case ClassifyVerdict::kNullInfinity: {
          json w = json::array();
          for (const auto& x : v.w) w.push_back(rat_to_json(x));
          out = {{"verdict", "null_infinity"}, {"c", rat_to_json(v.c)}, {"w", w}};
          break;
        }
        default: out = {{"verdict", "inconclusive"}, {"note", v.note}};
      }
      emit(out_path, out.dump(2) + "\n");
      return v.kind == ClassifyVerdict::kInconclusive ? 1 : 0;
    }));
  });

  // baire-shrink -----------------------------------------------------------------------------
  auto* baire = app.add_subcommand("baire-shrink", "iterated diamond shrink certificates");
  std::string baire_spec;
  int iters = 10;
  baire->add_option("--spec", baire_spec)->required();
  baire->add_option("--iters", iters);
  baire->callback([&]() {
    std::exit(wrapped([&]() {
      json j = load_json(baire_spec);
      BasicOpenSpec spec;
      for (const auto& v : j.at("lower")) spec.lower.push_back(parse_vec(v));
      for (const auto& v : j.at("upper")) spec.upper.push_back(parse_vec(v));
      size_t n = spec.lower.empty() ? spec.upper.at(0).size() : spec.lower[0].size();
      ChronInstance inst{DiscreteCone::uniform((int)n),
                         j.contains("p") ? parse_tag(j["p"].dump()) : LpTag::of(Rat(1))};
      auto it = iterate_shrink(inst, spec, iters);
      bool all = it.point_in_all;
      for (const auto& s : it.steps) all = all && s.certified;
      json out{{"iterations", it.steps.size()},
               {"certified", all},
               {"common_point", cv_str(it.common_point)}};
      emit(out_path, out.dump(2) + "\n");
      return all ? 0 : 1;
    }));
  });

  // bm ----------------------------------------------------------------------------------------
  auto* bm = app.add_subcommand("bm", "exact Brunn-Minkowski audit of two convex polygons");
  std::string bm_a, bm_b;
  bm->add_option("--a", bm_a)->required();
  bm->add_option("--b", bm_b)->required();
  bm->callback([&]() {
    std::exit(wrapped([&]() {
      auto parse_poly = [](const json& j) {
        std::vector<QPoint> pts;
        for (const auto& p : j) pts.push_back({rat_from_json(p[0]), rat_from_json(p[1])});
        return ConvexPolygon::hull_of(std::move(pts));
      };
      auto a = parse_poly(load_json(bm_a)), b = parse_poly(load_json(bm_b));
      auto v = bm_audit(a, b);
      json out{{"holds", v.holds}, {"equality", v.equality},
               {"sum_area2", rat_to_json(v.sum_area2)}, {"a_area2", rat_to_json(v.a_area2)},
               {"b_area2", rat_to_json(v.b_area2)}};
      emit(out_path, out.dump(2) + "\n");
      return v.holds ? 0 : 1;
    }));
  });

  // suite ---------------------------------------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "run the verification suite");
  bool all = false, quick = false;
  suite->add_flag("--all", all, "every criterion (also the default)");
  suite->add_flag("--quick", quick, "trimmed sample counts");
  suite->callback([&]() {
    std::exit(wrapped([&]() {
      SuiteReport r = run_acceptance_suite(seed, quick);
      emit(out_path, r.render(format));
      return r.all_pass() ? 0 : 1;
    }));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}
