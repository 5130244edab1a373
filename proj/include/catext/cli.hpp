#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catext/cone.hpp"
#include "catext/json_io.hpp"
#include "catext/pipeline.hpp"
#include "catext/winding.hpp"

namespace catext {

namespace detail {

// outcome of one verb before report assembly
struct VerbResult {
  Report findings;
  Json result = Json::object();
  Json inputs = Json::object();
};

inline FiniteGroup group_from_flag(const std::string& s) {
  if (s.rfind("cyclic:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(s.substr(7));
    } catch (const std::exception&) {
      bad_schema(s, "cyclic group spec must look like cyclic:4");
    }
    if (n < 1) bad_schema(s, "cyclic order must be positive");
    return cyclic_group(n);
  }
  if (s == "s3") return symmetric_group_3();
  return finite_group_from_json(load_json_file(s), s);
}

inline FgAbelianGroup coeff_from_flag(const std::string& s) {
  if (s == "Z") return free_abelian(1);
  if (s.rfind("Z:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(s.substr(2));
    } catch (const std::exception&) {
      bad_schema(s, "coefficient spec must look like Z or Z:4");
    }
    if (n < 2) bad_schema(s, "torsion coefficient modulus must be at least 2");
    return FgAbelianGroup{0, {Int(n)}};
  }
  return abelian_from_json(load_json_file(s), s);
}

inline ChartedLieGroup charted_from_flag(const std::string& s) {
  try {
    return charted_builtin(s);
  } catch (const std::invalid_argument& e) {
    bad_schema(s, e.what());
  }
}

inline Json vec_to_json(const Vec& v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

inline Json invariants_to_json(const FgAbelianGroup& g) {
  Json arr = Json::array();
  for (const auto& d : g.torsion) arr.push_back(d.convert_to<long long>());
  return arr;
}

inline std::string render_text(const Json& rep) {
  std::string s = "catext " + rep.at("command").get<std::string>() + ": " +
                  rep.at("status").get<std::string>() + "\n";
  for (const auto& f : rep.at("findings")) {
    s += "  [" + f.at("severity").get<std::string>() + "] " + f.at("check").get<std::string>() +
         " at " + f.at("witness").get<std::string>();
    if (f.contains("value")) s += " value=" + Json(f.at("value")).dump();
    if (f.contains("tolerance")) s += " tolerance=" + Json(f.at("tolerance")).dump();
    s += "\n";
  }
  if (rep.contains("reason")) s += "  reason: " + rep.at("reason").get<std::string>() + "\n";
  if (rep.contains("result")) s += "  result: " + rep.at("result").dump() + "\n";
  return s;
}

}  // namespace detail

// Single entry point used by both the binary and the tests: parses the
// argument vector, runs one verb, writes the report to `out` (and the
// JSON file named by --output when given). Returns the process exit code:
// 0 pass, 1 failed checks, 2 refused or invalid input.
inline int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"verification toolkit for group cocycles, categorical extensions, and charted "
               "Lie groups"};
  app.name("catext");
  app.require_subcommand(1);

  std::string output_path, format = "json";
  app.add_option("--output", output_path, "write the JSON report to this file");
  app.add_option("--format", format, "report format on stdout")
      ->check(CLI::IsMember({"json", "text"}));

  std::function<detail::VerbResult()> run;
  std::string verb;

  auto sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  // ---- exact verbs ----
  {
    auto* c = sub("cohomology", "group cohomology of a finite group with trivial action");
    auto group = std::make_shared<std::string>();
    auto coeff = std::make_shared<std::string>();
    auto degree = std::make_shared<int>(2);
    c->add_option("--group", *group, "finite group: cyclic:N, s3, or a JSON file")->required();
    c->add_option("--coeff", *coeff, "coefficients: Z, Z:N, or a JSON file")->required();
    c->add_option("--degree", *degree, "cohomological degree")->required();
    c->callback([&, group, coeff, degree] {
      verb = "cohomology";
      run = [group, coeff, degree] {
        detail::VerbResult vr;
        vr.inputs = {{"group", *group}, {"coeff", *coeff}, {"degree", *degree}};
        CohomologyResult h = cohomology_group(detail::group_from_flag(*group),
                                              detail::coeff_from_flag(*coeff), *degree);
        vr.result = {{"degree", h.degree},
                     {"rank", h.group.rank},
                     {"torsion", detail::invariants_to_json(h.group)}};
        return vr;
      };
    });
  }
  {
    auto* c = sub("cone-h2", "classes of compatible pairs over the cone of a coefficient map");
    auto group = std::make_shared<std::string>();
    auto tau = std::make_shared<std::string>();
    c->add_option("--group", *group, "finite base group")->required();
    c->add_option("--tau", *tau, "JSON file with the coefficient map")->required();
    c->callback([&, group, tau] {
      verb = "cone-h2";
      run = [group, tau] {
        detail::VerbResult vr;
        vr.inputs = {{"group", *group}, {"tau", *tau}};
        ConeClasses cc = cone_h2(detail::group_from_flag(*group),
                                 hom_from_json(load_json_file(*tau), *tau));
        Json sizes = Json::array();
        for (long long s : cc.class_sizes) sizes.push_back(s);
        vr.result = {{"valid_pairs", cc.valid_pairs},
                     {"classes", static_cast<long long>(cc.representatives.size())},
                     {"class_sizes", sizes}};
        return vr;
      };
    });
  }
  {
    auto* c = sub("check-2group", "run every 2-group axiom sweep on a table file");
    auto input = std::make_shared<std::string>();
    c->add_option("--input", *input, "JSON file with the 2-group tables")->required();
    c->callback([&, input] {
      verb = "check-2group";
      run = [input] {
        detail::VerbResult vr;
        vr.inputs = {{"input", *input}};
        TwoGroup t = two_group_from_json(load_json_file(*input), *input);
        vr.findings = verify_2group(t);
        vr.result = {{"objects", t.n_obj}, {"morphisms", t.n_mor}};
        return vr;
      };
    });
  }
  {
    auto* c = sub("verify-cocycle", "check the shape and identities of a generalized cocycle");
    auto input = std::make_shared<std::string>();
    c->add_option("--input", *input, "JSON file with tau, f, theta")->required();
    c->callback([&, input] {
      verb = "verify-cocycle";
      run = [input] {
        detail::VerbResult vr;
        vr.inputs = {{"input", *input}};
        GeneralizedCocycle gc = generalized_cocycle_from_json(load_json_file(*input), *input);
        vr.findings = verify_generalized_cocycle(gc);
        vr.result = {{"base_order", gc.base().order}};
        return vr;
      };
    });
  }
  {
    auto* c = sub("build-extension", "build the categorical central extension of a cocycle");
    auto cocycle = std::make_shared<std::string>();
    auto emit = std::make_shared<std::string>();
    c->add_option("--cocycle", *cocycle, "JSON file with tau, f, theta")->required();
    c->add_option("--emit", *emit, "write the total 2-group tables to this file");
    c->callback([&, cocycle, emit] {
      verb = "build-extension";
      run = [cocycle, emit] {
        detail::VerbResult vr;
        vr.inputs = {{"cocycle", *cocycle}};
        GeneralizedCocycle gc = generalized_cocycle_from_json(load_json_file(*cocycle), *cocycle);
        CentralExtensionSeq seq = extension_from_cocycle(gc);
        vr.findings.merge(verify_2group(seq.total));
        vr.findings.merge(verify_central_extension(seq));
        vr.result = {{"total_objects", seq.total.n_obj},
                     {"total_morphisms", seq.total.n_mor},
                     {"z_objects", seq.z_part.n_obj},
                     {"base_order", seq.base.order}};
        if (!emit->empty()) {
          std::ofstream f(*emit);
          if (!f) detail::bad_schema(*emit, "cannot open file for writing");
          f << two_group_to_json(seq.total).dump(2) << "\n";
          vr.inputs["emit"] = *emit;
        }
        return vr;
      };
    });
  }
  {
    auto* c = sub("band", "skeleton and band of the extension built from a cocycle");
    auto cocycle = std::make_shared<std::string>();
    c->add_option("--cocycle", *cocycle, "JSON file with tau, f, theta")->required();
    c->callback([&, cocycle] {
      verb = "band";
      run = [cocycle] {
        detail::VerbResult vr;
        vr.inputs = {{"cocycle", *cocycle}};
        GeneralizedCocycle gc = generalized_cocycle_from_json(load_json_file(*cocycle), *cocycle);
        CentralExtensionSeq seq = extension_from_cocycle(gc);
        SkeletonAndBand sab = skeleton_and_band(seq);
        vr.findings.merge(sab.report);
        vr.result = {{"band_order", sab.band.order},
                     {"skeleton_invariants", detail::invariants_to_json(sab.skel_z)}};
        if (is_abelian(sab.band)) {
          Json inv = Json::array();
          for (int d : abelian_invariants(sab.band)) inv.push_back(d);
          vr.result["band_invariants"] = inv;
        }
        return vr;
      };
    });
  }

  // ---- numeric verbs ----
  {
    auto* c = sub("integrate", "pair integral of a left-invariant 2-form over the chart triangle");
    auto group = std::make_shared<std::string>();
    auto omega = std::make_shared<std::string>();
    auto pair = std::make_shared<std::string>();
    auto qo = std::make_shared<int>(10);
    c->add_option("--group", *group, "builtin charted group name")->required();
    c->add_option("--omega", *omega, "JSON m x n x n structure-constant array")->required();
    c->add_option("--pair", *pair, "JSON file {g, h} in chart coordinates")->required();
    c->add_option("--quad-order", *qo, "triangle quadrature order");
    c->callback([&, group, omega, pair, qo] {
      verb = "integrate";
      run = [group, omega, pair, qo] {
        detail::VerbResult vr;
        vr.inputs = {{"group", *group}, {"omega", *omega}, {"pair", *pair}};
        ChartedLieGroup g = detail::charted_from_flag(*group);
        LieAlgebraCocycle om = omega_from_json(load_json_file(*omega), *omega);
        Json pj = load_json_file(*pair);
        Vec eg = g.chart_inv(vec_from_json(detail::field(pj, "g", *pair), g.dim, *pair));
        Vec eh = g.chart_inv(vec_from_json(detail::field(pj, "h", *pair), g.dim, *pair));
        Vec value = pair_integral(g, om, eg, eh, *qo);
        Vec doubled = pair_integral(g, om, eg, eh, 2 * *qo);
        vr.result = {{"value", detail::vec_to_json(value)},
                     {"tolerance_estimate", vec_max_abs(vec_sub(value, doubled))},
                     {"quad_order", *qo},
                     {"fd_step", detail::kTangentStep}};
        return vr;
      };
    });
  }
  {
    auto* c = sub("defect", "group-differential defect of the pair integral at a triple");
    auto group = std::make_shared<std::string>();
    auto omega = std::make_shared<std::string>();
    auto triple = std::make_shared<std::string>();
    auto qo = std::make_shared<int>(10);
    auto tol = std::make_shared<double>(1e-6);
    c->add_option("--group", *group, "builtin charted group name")->required();
    c->add_option("--omega", *omega, "JSON m x n x n structure-constant array")->required();
    c->add_option("--triple", *triple, "JSON file {g, h, k} in chart coordinates")->required();
    c->add_option("--quad-order", *qo, "triangle quadrature order");
    c->add_option("--tolerance", *tol, "largest accepted defect");
    c->callback([&, group, omega, triple, qo, tol] {
      verb = "defect";
      run = [group, omega, triple, qo, tol] {
        detail::VerbResult vr;
        vr.inputs = {{"group", *group}, {"omega", *omega}, {"triple", *triple}, {"tolerance", *tol}};
        ChartedLieGroup g = detail::charted_from_flag(*group);
        LieAlgebraCocycle om = omega_from_json(load_json_file(*omega), *omega);
        Json tj = load_json_file(*triple);
        Vec eg = g.chart_inv(vec_from_json(detail::field(tj, "g", *triple), g.dim, *triple));
        Vec eh = g.chart_inv(vec_from_json(detail::field(tj, "h", *triple), g.dim, *triple));
        Vec ek = g.chart_inv(vec_from_json(detail::field(tj, "k", *triple), g.dim, *triple));
        Vec value = triple_defect(g, om, eg, eh, ek, *qo);
        Vec doubled = triple_defect(g, om, eg, eh, ek, 2 * *qo);
        double worst = vec_max_abs(value);
        if (worst > *tol) vr.findings.fail_num("cocycle.defect", "(g,h,k)", worst, *tol);
        vr.result = {{"value", detail::vec_to_json(value)},
                     {"max_abs", worst},
                     {"tolerance_estimate", vec_max_abs(vec_sub(value, doubled))},
                     {"quad_order", *qo},
                     {"fd_step", detail::kTangentStep}};
        return vr;
      };
    });
  }
  {
    auto* c = sub("derive-lf", "differentiate the pair integral back to an algebra cocycle");
    auto group = std::make_shared<std::string>();
    auto omega = std::make_shared<std::string>();
    auto pair = std::make_shared<std::string>();
    auto qo = std::make_shared<int>(10);
    auto step = std::make_shared<double>(1e-3);
    c->add_option("--group", *group, "builtin charted group name")->required();
    c->add_option("--omega", *omega, "JSON m x n x n structure-constant array")->required();
    c->add_option("--pair", *pair, "JSON file {g, h} with algebra vectors")->required();
    c->add_option("--quad-order", *qo, "triangle quadrature order");
    c->add_option("--fd-step", *step, "difference half-width");
    c->callback([&, group, omega, pair, qo, step] {
      verb = "derive-lf";
      run = [group, omega, pair, qo, step] {
        detail::VerbResult vr;
        vr.inputs = {{"group", *group}, {"omega", *omega}, {"pair", *pair}};
        ChartedLieGroup g = detail::charted_from_flag(*group);
        SmoothGeneralizedCocycle fw{g, omega_from_json(load_json_file(*omega), *omega), *qo};
        Json pj = load_json_file(*pair);
        Vec x = vec_from_json(detail::field(pj, "g", *pair), g.dim, *pair);
        Vec y = vec_from_json(detail::field(pj, "h", *pair), g.dim, *pair);
        Vec value = derived_algebra_cocycle(fw, x, y, *step);
        Vec halved = derived_algebra_cocycle(fw, x, y, *step / 2.0);
        vr.result = {{"value", detail::vec_to_json(value)},
                     {"tolerance_estimate", vec_max_abs(vec_sub(value, halved))},
                     {"quad_order", *qo},
                     {"fd_step", *step}};
        return vr;
      };
    });
  }
  {
    auto* c = sub("derive-bracket", "bracket table from the chart product, against the builtin");
    auto group = std::make_shared<std::string>();
    auto step = std::make_shared<double>(1e-3);
    auto tol = std::make_shared<double>(1e-6);
    c->add_option("--group", *group, "builtin charted group name")->required();
    c->add_option("--fd-step", *step, "difference half-width");
    c->add_option("--tolerance", *tol, "largest accepted deviation from the builtin bracket");
    c->callback([&, group, step, tol] {
      verb = "derive-bracket";
      run = [group, step, tol] {
        detail::VerbResult vr;
        vr.inputs = {{"group", *group}, {"tolerance", *tol}};
        ChartedLieGroup g = detail::charted_from_flag(*group);
        BracketTable derived = derived_bracket(chart_product(g), g.dim, *step);
        BracketTable halved = derived_bracket(chart_product(g), g.dim, *step / 2.0);
        BracketTable builtin(g.dim, std::vector<Vec>(g.dim));
        for (int i = 0; i < g.dim; ++i)
          for (int j = 0; j < g.dim; ++j) {
            Vec ei(g.dim, 0.0), ej(g.dim, 0.0);
            ei[i] = 1.0, ej[j] = 1.0;
            builtin[i][j] = g.bracket(ei, ej);
          }
        // builtin is [i][j] -> vector while the derived table is [k][i][j]
        double worst = 0.0;
        for (int k = 0; k < g.dim; ++k)
          for (int i = 0; i < g.dim; ++i)
            for (int j = 0; j < g.dim; ++j)
              worst = std::max(worst, std::abs(derived[k][i][j] - builtin[i][j][k]));
        if (worst > *tol) vr.findings.fail_num("bracket.mismatch", "()", worst, *tol);
        Json table = Json::array();
        for (const auto& plane : derived) {
          Json rows = Json::array();
          for (const auto& row : plane) rows.push_back(detail::vec_to_json(row));
          table.push_back(rows);
        }
        vr.result = {{"table", table},
                     {"max_deviation", worst},
                     {"tolerance_estimate", bracket_table_distance(derived, halved)},
                     {"quad_order", Json()},
                     {"fd_step", *step}};
        return vr;
      };
    });
  }
  {
    auto* c = sub("covering", "winding cocycle checks for the covering of the circle");
    auto samples = std::make_shared<int>(1000);
    auto grid = std::make_shared<int>(0);
    auto tol = std::make_shared<double>(1e-6);
    c->add_option("--samples", *samples, "random pairs for the homomorphism sweep");
    c->add_option("--grid", *grid, "also check the triple identity on this many roots of unity");
    c->add_option("--tolerance", *tol, "largest accepted homomorphism deviation");
    c->callback([&, samples, grid, tol] {
      verb = "covering";
      run = [samples, grid, tol] {
        detail::VerbResult vr;
        vr.inputs = {{"samples", *samples}, {"grid", *grid}, {"tolerance", *tol}};
        CoveringCheckResult cov = covering_group_check(*samples);
        if (cov.max_hom_deviation > *tol)
          vr.findings.fail_num("covering.not-a-homomorphism", "()", cov.max_hom_deviation, *tol);
        vr.result = {{"samples", cov.samples},
                     {"max_hom_deviation", cov.max_hom_deviation},
                     {"quad_order", Json()},
                     {"fd_step", Json()},
                     {"tolerance_estimate", Json()}};
        if (*grid > 0) {
          long long worst = winding_triple_defect_max(*grid);
          if (worst != 0)
            vr.findings.fail_num("winding.triple-defect", "()", static_cast<double>(worst), 0.0);
          vr.result["grid_defect"] = worst;
        }
        return vr;
      };
    });
  }
  {
    auto* c = sub("pipeline", "end-to-end reconstruction pipelines");
    auto target = std::make_shared<std::string>();
    auto qo = std::make_shared<int>(10);
    auto step = std::make_shared<double>(1e-3);
    auto tol = std::make_shared<double>(1e-6);
    c->add_option("target", *target, "pipeline name")
        ->required()
        ->check(CLI::IsMember({"heisenberg"}));
    c->add_option("--quad-order", *qo, "triangle quadrature order");
    c->add_option("--fd-step", *step, "difference half-width");
    c->add_option("--tolerance", *tol, "largest accepted structure-constant deviation");
    c->callback([&, target, qo, step, tol] {
      verb = "pipeline";
      run = [target, qo, step, tol] {
        detail::VerbResult vr;
        vr.inputs = {{"target", *target}, {"tolerance", *tol}};
        PipelineResult pr = heisenberg_reconstruction(*qo, *step);
        PipelineResult halved = heisenberg_reconstruction(*qo, *step / 2.0);
        if (pr.max_deviation > *tol)
          vr.findings.fail_num("pipeline.bracket-deviation", "()", pr.max_deviation, *tol);
        vr.result = {{"target", *target},
                     {"max_deviation", pr.max_deviation},
                     {"tolerance_estimate", std::abs(pr.max_deviation - halved.max_deviation)},
                     {"quad_order", pr.quad_order},
                     {"fd_step", pr.fd_step}};
        return vr;
      };
    });
  }
  {
    auto* c = sub("exp-check", "naturality of the exponential along a fixed homomorphism");
    auto hom = std::make_shared<std::string>();
    auto samples = std::make_shared<int>(50);
    auto tol = std::make_shared<double>(1e-6);
    c->add_option("--hom", *hom, "homomorphism name")
        ->required()
        ->check(CLI::IsMember({"su2:u2", "u2:circle", "su2:su2"}));
    c->add_option("--samples", *samples, "random algebra samples");
    c->add_option("--tolerance", *tol, "largest accepted deviation");
    c->callback([&, hom, samples, tol] {
      verb = "exp-check";
      run = [hom, samples, tol] {
        detail::VerbResult vr;
        vr.inputs = {{"hom", *hom}, {"samples", *samples}, {"tolerance", *tol}};
        double dev = 0.0;
        auto identity_map = [](const Vec& v) { return v; };
        if (*hom == "su2:u2") {
          auto pad = [](const Vec& x) { return Vec{x[0], x[1], x[2], 0.0}; };
          dev = exp_naturality_check(charted_su2(), charted_u2(), identity_map, pad, *samples);
        } else if (*hom == "u2:circle") {
          auto det_map = [](const Vec& v) {
            double re = (v[0] * v[6] - v[1] * v[7]) - (v[2] * v[4] - v[3] * v[5]);
            double im = (v[0] * v[7] + v[1] * v[6]) - (v[2] * v[5] + v[3] * v[4]);
            return Vec{re, im};
          };
          auto trace_part = [](const Vec& x) { return Vec{x[3]}; };
          dev = exp_naturality_check(charted_u2(), charted_circle(), det_map, trace_part,
                                     *samples, 0.8);
        } else {
          dev = exp_naturality_check(charted_su2(), charted_su2(), identity_map, identity_map,
                                     *samples);
        }
        if (dev > *tol) vr.findings.fail_num("exp.naturality", "(" + *hom + ")", dev, *tol);
        vr.result = {{"hom", *hom},
                     {"deviation", dev},
                     {"quad_order", Json()},
                     {"fd_step", Json()},
                     {"tolerance_estimate", Json()}};
        return vr;
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "catext: " << e.what() << "\n";
    return 2;
  }

  Json rep{{"command", verb}};
  int code = 0;
  try {
    detail::VerbResult vr = run();
    vr.findings.sort();
    bool ok = vr.findings.passed();
    code = ok ? 0 : 1;
    rep["status"] = ok ? "pass" : "fail";
    rep["findings"] = findings_to_json(vr.findings);
    rep["result"] = vr.result;
    rep["provenance"] = Json{{"inputs", vr.inputs}};
  } catch (const Refusal& r) {
    code = 2;
    rep["status"] = "refused";
    rep["reason"] = r.what();
    rep["findings"] = findings_to_json(r.report);
  } catch (const std::exception& e) {
    code = 2;
    rep["status"] = "refused";
    rep["reason"] = e.what();
    rep["findings"] = Json::array();
  }

  if (!output_path.empty()) {
    std::ofstream f(output_path);
    if (f)
      f << rep.dump(2) << "\n";
    else
      err << "catext: cannot write " << output_path << "\n";
  }
  if (format == "text")
    out << detail::render_text(rep);
  else
    out << rep.dump(2) << "\n";
  return code;
}

}  // namespace catext
