#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "char1/congruence.hpp"
#include "char1/convex.hpp"
#include "char1/error.hpp"
#include "char1/laws.hpp"
#include "char1/paf.hpp"
#include "char1/semifield.hpp"
#include "char1/spectrum.hpp"
#include "char1/valuation.hpp"

namespace char1::cli {

namespace {

const Json& req(const Json& j, const char* key) {
  if (!j.is_object()) throw invariant_error("request must be a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw invariant_error(std::string("request is missing '") + key + "'");
  return *it;
}

bool flag(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) return false;
  if (!it->is_boolean()) throw invariant_error(std::string("'") + key + "' must be a boolean");
  return it->get<bool>();
}

Polygon unit_of(const Json& j) {
  return j.contains("E") ? polygon_from_json(j["E"]) : Polygon::unit_square();
}

Paf f_of(const Json& j) { return paf_from_json(req(j, "f")); }

using Handler = std::function<std::string(const Command&)>;

std::string line(const Json& j) { return j.dump() + "\n"; }

std::string paf_eval(const Command& c) {
  return line({{"value", to_json(f_of(c.input).eval(rat_from_json(req(c.input, "t"))))}});
}

std::string paf_oplus(const Command& c) {
  return line({{"result", to_json(oplus(f_of(c.input), paf_from_json(req(c.input, "g"))))}});
}

std::string paf_norm(const Command& c) {
  const Paf f = f_of(c.input);
  if (flag(c.input, "weighted")) {
    const WeightedNorms w = weighted_norms(f);
    return line({{"r", to_json(w.r)}, {"F", to_json(w.lipschitz)}});
  }
  return line({{"r", to_json(r_norm_const(f))}});
}

std::string paf_clamp(const Command& c) {
  return line({{"result", to_json(clamp(f_of(c.input), rat_from_json(req(c.input, "c"))))}});
}

std::string paf_plot(const Command& c) {
  std::string out = "t,value\n";
  for (const auto& [t, v] : plot_rows(f_of(c.input), c.samples)) out += to_string(t) + "," + to_string(v) + "\n";
  return out;
}

std::pair<Polygon, Polygon> two_polygons(const Json& j) {
  return {polygon_from_json(req(j, "A")), polygon_from_json(req(j, "B"))};
}

std::string poly_minkowski(const Command& c) {
  const auto [a, b] = two_polygons(c.input);
  return line({{"result", to_json(minkowski(a, b))}});
}

std::string poly_hull_union(const Command& c) {
  const auto [a, b] = two_polygons(c.input);
  return line({{"result", to_json(hull_union(a, b))}});
}

std::string poly_support(const Command& c) {
  const Polygon a = polygon_from_json(req(c.input, "A"));
  return line({{"value", to_json(support(a, direction_from_json(req(c.input, "psi"))))}});
}

std::string poly_rnorm(const Command& c) {
  const Polygon a = polygon_from_json(req(c.input, "A"));
  if (c.euclidean) return line({{"r", euclidean_r(a)}, {"approximate", true}});
  return line({{"r", to_json(r_norm_body(a, unit_of(c.input)))}});
}

std::string poly_polar(const Command& c) {
  return line({{"result", to_json(polar(polygon_from_json(req(c.input, "E"))))}});
}

std::string spec_attain(const Command& c) {
  const Json& in = c.input;
  Attainment at{PointEval{0}, 0, false};
  Rat r;
  if (in.contains("f")) {
    const Paf f = f_of(in);
    at = attain_norm(f);
    r = r_norm_const(f);
  } else if (in.contains("A")) {
    const Polygon a = polygon_from_json(in["A"]);
    const Polygon e = unit_of(in);
    at = attain_norm(a, e);
    r = r_norm_body(a, e);
  } else {
    const FracBody x = frac_from_json(req(in, "X"));
    const Polygon e = unit_of(in);
    at = attain_norm(x, e);
    r = r_norm_frac(x, e);
  }
  return line({{"character", to_json(at.phi)}, {"value", to_json(at.value)}, {"r", to_json(r)},
                {"degenerate", at.degenerate}});
}

std::string spec_classify(const Command& c) {
  const Classification k = classify(f_of(c.input));
  return line({{"nonneg", k.nonneg},
               {"regular", k.regular},
               {"absorbing", k.absorbing},
               {"epsilon", k.epsilon ? to_json(*k.epsilon) : Json(nullptr)}});
}

std::string cong_qnorm(const Command& c) {
  return line({{"qnorm", to_json(quotient_norm(f_of(c.input), closed_set_from_json(req(c.input, "K"))))}});
}

std::string cong_minrep(const Command& c) {
  const Paf rep = min_representative(f_of(c.input), closed_set_from_json(req(c.input, "K")));
  return line({{"result", to_json(rep)}, {"r", to_json(r_norm_const(rep))}});
}

std::string cong_zariski(const Command& c) {
  const RestrictionCongruence r1(closed_set_from_json(req(c.input, "K1")));
  const RestrictionCongruence r2(closed_set_from_json(req(c.input, "K2")));
  return line({{"join", to_json(zariski_V(join(r1, r2)))},
               {"meet", to_json(zariski_V(meet(r1, r2)))},
               {"laws", zariski_laws(r1, r2)}});
}

std::string val_kink(const Command& c) {
  return line({{"kink", to_json(kink(f_of(c.input), rat_from_json(req(c.input, "x"))))}});
}

std::string val_convexity(const Command& c) {
  return line({{"convex", convexity_criterion(f_of(c.input))}});
}

AffinePiece piece_from(const Json& j) { return {rat_from_json(req(j, "a")), rat_from_json(req(j, "b"))}; }

std::string val_circle_check(const Command& c) {
  const Json& in = c.input;
  if (in.contains("s0")) {
    const KDefinedReport rep =
        k_defined_check(quad_from_json(in["s0"]), piece_from(req(in, "left")), piece_from(req(in, "right")));
    return line({{"rational_point", rep.rational_point}, {"kink", to_json(rep.kink)}, {"holds", rep.holds}});
  }
  const CircleData data = circle_data_from_json(req(in, "section"));
  const bool valid = circle_section_valid(data);
  bool constant = false;
  if (valid) constant = CircleSection(data).is_constant();
  return line({{"valid", valid}, {"constant", constant}});
}

// Carries the report out of the handler when some law failed.
struct laws_failed {
  std::string report;
};

Json report_json(const SuiteResult& res) {
  Json laws = Json::array();
  for (const LawResult& l : res.laws) {
    Json e{{"law", l.law}, {"cases", l.cases}, {"failures", l.failures}};
    if (!l.passed()) e["first_counterexample"] = l.first_counterexample;
    laws.push_back(e);
  }
  return {{"suite", res.suite},
          {"seed", res.seed},
          {"passed", res.passed()},
          {"cases", res.total_cases()},
          {"failures", res.total_failures()},
          {"laws", laws}};
}

std::string laws_run(const Command& c) {
  if (c.suite.empty()) throw invariant_error("laws-run needs a suite name");
  const SuiteResult res = run_suite(c.suite, c.seed, c.cases);
  if (!res.passed()) throw laws_failed{line(report_json(res))};
  return line(report_json(res));
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"paf-eval", paf_eval},
      {"paf-oplus", paf_oplus},
      {"paf-norm", paf_norm},
      {"paf-clamp", paf_clamp},
      {"paf-plot", paf_plot},
      {"poly-minkowski", poly_minkowski},
      {"poly-hull-union", poly_hull_union},
      {"poly-support", poly_support},
      {"poly-rnorm", poly_rnorm},
      {"poly-polar", poly_polar},
      {"spec-attain", spec_attain},
      {"spec-classify", spec_classify},
      {"cong-qnorm", cong_qnorm},
      {"cong-minrep", cong_minrep},
      {"cong-zariski", cong_zariski},
      {"val-kink", val_kink},
      {"val-convexity", val_convexity},
      {"val-circle-check", val_circle_check},
      {"laws-run", laws_run},
  };
  return h;
}

}  // namespace

Outcome run(const Command& cmd) {
  const auto it = handlers().find(cmd.verb);
  if (it == handlers().end()) return {kSchema, {}, "unknown verb '" + cmd.verb + "'"};
  try {
    return {kOk, it->second(cmd), {}};
  } catch (const laws_failed& f) {
    return {kLawsFailed, f.report, "law suite '" + cmd.suite + "' has failures"};
  } catch (const precondition_error& e) {
    return {kPrecondition, {}, std::string("precondition violated: ") + e.what()};
  } catch (const no_exact_norm& e) {
    return {kPrecondition, {}, std::string("precondition violated: ") + e.what()};
  } catch (const invariant_error& e) {
    return {kSchema, {}, std::string("invalid input: ") + e.what()};
  } catch (const Json::exception& e) {
    return {kSchema, {}, std::string("invalid input: ") + e.what()};
  }
}

int cli_main(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact characteristic-one semifields: PAFs, convex polygons, spectra, congruences, valuations"};
  Command cmd;
  std::string input_path;
  std::string output_path;
  std::size_t cases = 0;
  app.add_option("verb", cmd.verb, "Operation to run")->required();
  app.add_option("suite", cmd.suite, "Law suite name (laws-run)");
  app.add_option("--input", input_path, "Request JSON file (default: stdin)");
  app.add_option("--output", output_path, "Result file (default: stdout)");
  app.add_option("--seed", cmd.seed, "Seed for laws-run (CHAR1_SEED overrides)");
  app.add_option("--cases", cases, "Case count for laws-run");
  app.add_option("--samples", cmd.samples, "Sample count for paf-plot");
  app.add_flag("--euclidean", cmd.euclidean, "Floating-point euclidean mode for poly-rnorm");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSchema;
  }
  if (app.count("--cases") > 0) cmd.cases = cases;
  if (const char* env = std::getenv("CHAR1_SEED")) {
    try {
      cmd.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "invalid input: CHAR1_SEED must be a nonnegative integer\n";
      return kSchema;
    }
  }

  if (handlers().count(cmd.verb) == 0) {
    err << "invalid input: unknown verb '" << cmd.verb << "'\n";
    return kSchema;
  }
  if (cmd.verb != "laws-run") {
    std::stringstream buf;
    if (input_path.empty()) {
      buf << in.rdbuf();
    } else {
      std::ifstream file(input_path);
      if (!file) {
        err << "invalid input: cannot read " << input_path << "\n";
        return kSchema;
      }
      buf << file.rdbuf();
    }
    try {
      cmd.input = parse_json(buf.str());
    } catch (const invariant_error& e) {
      err << "invalid input: " << e.what() << "\n";
      return kSchema;
    }
  }

  const Outcome o = run(cmd);
  if (!o.error.empty()) err << o.error << "\n";
  if (output_path.empty()) {
    out << o.output;
  } else {
    std::ofstream file(output_path);
    if (!file) {
      err << "cannot write " << output_path << "\n";
      return kSchema;
    }
    file << o.output;
  }
  return o.status;
}

}  // namespace char1::cli
