#include "quadric/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "quadric/error.hpp"
#include "quadric/parser.hpp"

namespace quadric::cli {

namespace {

void require_arity(const Command& c, std::size_t n) {
  if (c.inputs.size() != n) {
    throw ParseError(c.verb + " expects " + std::to_string(n) + " input(s), got " +
                         std::to_string(c.inputs.size()),
                     0, {std::to_string(n) + " inputs"});
  }
}

Autom autom_input(const Command& c, Json& echo) {
  if (c.sigma) {
    if (!c.inputs.empty()) throw ParseError("--sigma excludes positional inputs", 0, {"no inputs"});
    echo.push_back("sigma_" + std::to_string(*c.sigma));
    return sigma_n(*c.sigma);
  }
  require_arity(c, 1);
  Autom F = parse_autom(c.inputs[0]);
  echo.push_back(F.to_string());
  return F;
}

Polynomial poly_input(const Command& c, std::size_t k, Json& echo) {
  Polynomial p = parse_polynomial(c.inputs[k]);
  echo.push_back(p.to_string());
  return p;
}

Json leading_json(const Autom& F) {
  Json lead = Json::array();
  for (const auto& f : F.coords()) lead.push_back(leading_class(f).to_string());
  return lead;
}

Json dispatch(const Command& c, Json& echo, int& exit_code) {
  const std::string& v = c.verb;
  if (v == "deg") {
    require_arity(c, 1);
    const Polynomial p = poly_input(c, 0, echo);
    return Json{{"deg", to_json(deg_class(nf_coord(p)))}, {"weighted_degree", to_json(weighted_degree(p))}};
  }
  if (v == "nf") {
    require_arity(c, 1);
    const Polynomial p = poly_input(c, 0, echo);
    if (c.graded) return Json{{"nf", nf_graded(p).to_string()}, {"modulus", "q"}};
    return Json{{"nf", nf_coord(p).to_string()}, {"modulus", "q-1"}};
  }
  if (v == "lead") {
    require_arity(c, 1);
    const CoordClass f = nf_coord(poly_input(c, 0, echo));
    return Json{{"lead", leading_class(f).to_string()}, {"deg", to_json(deg_class(f))}};
  }
  if (v == "compose" || v == "verify") {
    require_arity(c, 2);
    const Autom F = parse_autom(c.inputs[0]);
    const Autom G = parse_autom(c.inputs[1]);
    echo.push_back(F.to_string());
    echo.push_back(G.to_string());
    if (v == "compose") return Json{{"result", to_json(compose(F, G))}};
    return Json{{"inverse", verify_automorphism(F, G)}};
  }
  if (v == "parachute") {
    require_arity(c, 2);
    const CoordClass f1 = nf_coord(poly_input(c, 0, echo));
    const CoordClass f2 = nf_coord(poly_input(c, 1, echo));
    return to_json(parachute(f1, f2));
  }
  if (v == "pjac") {
    CoordClass j;
    if (c.k) {
      require_arity(c, 2);
      const CoordClass f1 = nf_coord(poly_input(c, 0, echo));
      const CoordClass f2 = nf_coord(poly_input(c, 1, echo));
      j = pseudo_jacobian_k(*c.k, f1, f2);
    } else {
      require_arity(c, 3);
      const CoordClass f1 = nf_coord(poly_input(c, 0, echo));
      const CoordClass f2 = nf_coord(poly_input(c, 1, echo));
      const CoordClass f3 = nf_coord(poly_input(c, 2, echo));
      j = pseudo_jacobian(f1, f2, f3);
    }
    return Json{{"pjac", j.to_string()}, {"deg", to_json(deg_class(j))}};
  }
  if (v == "relation") {
    require_arity(c, 2);
    const CoordClass f1 = nf_coord(poly_input(c, 0, echo));
    const CoordClass f2 = nf_coord(poly_input(c, 1, echo));
    return Json{{"relation", to_json(find_leading_relation(f1, f2))}};
  }
  if (v == "reduce-step") {
    const Autom F = autom_input(c, echo);
    const ElementarySearch s = find_elementary_reduction(F, c.budget);
    if (s.verdict == Verdict::Inconclusive) exit_code = kInconclusive;
    return to_json(s);
  }
  if (v == "decompose") {
    const Autom F = autom_input(c, echo);
    const DecompositionResult r = decompose_tame(F, c.budget);
    if (r.status == DecompositionStatus::Inconclusive) exit_code = kInconclusive;
    return to_json(r);
  }
  if (v == "wild-check") {
    const Autom F = autom_input(c, echo);
    const WildCheck w = certify_wild(F, c.budget);
    Json j{{"verdict", wild_verdict_name(w.verdict)}};
    if (w.detail.certificate) j["certificate"] = to_json(*w.detail.certificate);
    if (w.verdict == WildVerdict::Tame) j["decomposition"] = to_json(w.detail.decomposition());
    if (w.verdict == WildVerdict::Inconclusive) {
      j["detail"] = to_json(w.detail);
      exit_code = kInconclusive;
    }
    return j;
  }
  if (v == "sigma") {
    unsigned n = 0;
    if (c.sigma) {
      if (!c.inputs.empty()) throw ParseError("--sigma excludes positional inputs", 0, {"no inputs"});
      n = *c.sigma;
    } else {
      require_arity(c, 1);
      const Polynomial p = parse_polynomial(c.inputs[0]);
      if (!p.is_constant() || !p.constant_term().is_real() || p.constant_term().re() < 1 ||
          p.constant_term().re().get_den() != 1) {
        throw ParseError("sigma expects a positive integer", 0, {"positive integer"});
      }
      n = static_cast<unsigned>(p.constant_term().re().get_num().get_ui());
    }
    echo.push_back(static_cast<std::int64_t>(n));
    const Autom s = sigma_n(n);
    return Json{{"sigma", to_json(s)}, {"leading", leading_json(s)}, {"inverse", to_json(sigma_n_inverse(n))}};
  }
  throw ParseError("unknown verb '" + v + "'", 0, verbs());
}

std::string type_name(const Error& e) {
  if (dynamic_cast<const ZeroInput*>(&e)) return "ZeroInput";
  if (dynamic_cast<const DependentInputs*>(&e)) return "DependentInputs";
  if (dynamic_cast<const InvariantError*>(&e)) return "InvariantError";
  if (dynamic_cast<const ConstructionError*>(&e)) return "ConstructionError";
  if (dynamic_cast<const NotAnAutomorphism*>(&e)) return "NotAnAutomorphism";
  if (dynamic_cast<const InternalError*>(&e)) return "InternalError";
  return "Error";
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"deg",       "nf",       "lead",        "compose",   "verify",     "parachute",
                                          "pjac",      "relation", "reduce-step", "decompose", "wild-check", "sigma"};
  return v;
}

Json Report::to_json(const SearchBudget& budget, bool with_timing) const {
  Json j{{"verb", verb},
         {"inputs", inputs},
         {"budget", {{"max_ged_sum", budget.max_ged_sum}, {"max_cancellation_rounds", budget.max_cancellation_rounds}}},
         {"result", result},
         {"exit_code", exit_code}};
  if (with_timing) j["timing_ms"] = timing_ms;
  return j;
}

Report run(const Command& command) {
  Report r;
  r.verb = command.verb;
  const auto start = std::chrono::steady_clock::now();
  try {
    command.budget.validate();
    r.result = dispatch(command, r.inputs, r.exit_code);
  } catch (const ParseError& e) {
    r.exit_code = kParseError;
    r.result = Json{{"error", {{"type", "ParseError"}, {"message", e.what()}, {"position", e.position()},
                               {"expected", e.expected()}}}};
  } catch (const Error& e) {
    r.exit_code = kDomainError;
    r.result = Json{{"error", {{"type", type_name(e)}, {"message", e.what()}}}};
  }
  if (r.exit_code == kParseError || r.exit_code == kDomainError) {
    r.inputs = Json::array();
    if (command.sigma) r.inputs.push_back("sigma_" + std::to_string(*command.sigma));
    for (const auto& in : command.inputs) r.inputs.push_back(in);
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

void render(std::ostringstream& os, const std::string& prefix, const Json& j) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(os, prefix.empty() ? k : prefix + "." + k, v);
  } else if (j.is_array() && !j.empty() && j[0].is_object()) {
    for (std::size_t k = 0; k < j.size(); ++k) render(os, prefix + "[" + std::to_string(k) + "]", j[k]);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << report.verb;
  for (const auto& in : report.inputs) os << ' ' << (in.is_string() ? in.get<std::string>() : in.dump());
  os << '\n';
  render(os, "", report.result);
  return os.str();
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree, reduction and wildness computations for automorphisms of the quadric x1*x4 - x2*x3 = 1"};
  app.require_subcommand(1);
  app.fallthrough();

  Command cmd;
  std::string file;
  app.add_flag("--json", cmd.json, "Print the full JSON report");
  app.add_flag("--timing", cmd.timing, "Include timing_ms in the JSON report");
  app.add_option("--max-ged-sum", cmd.budget.max_ged_sum, "Cap on the ged sum of candidate P when unbounded");
  app.add_option("--max-rounds", cmd.budget.max_cancellation_rounds, "Cap on cancelled weight levels");
  app.add_option("--file", file, "Read additional inputs from a file, one per line");

  const std::vector<std::pair<std::string, std::string>> descriptions{
      {"deg", "degree of a class in the coordinate ring"},
      {"nf", "normal form modulo q - 1 (or q with --graded)"},
      {"lead", "leading class and degree"},
      {"compose", "F o G of two automorphisms"},
      {"verify", "check that G is the inverse of F"},
      {"parachute", "parachute of two classes"},
      {"pjac", "pseudo-Jacobian j(f1, f2, f3), or j_k(f1, f2) with --k"},
      {"relation", "binomial relation between leading classes"},
      {"reduce-step", "search an elementary reduction"},
      {"decompose", "reduce to an orthogonal element"},
      {"wild-check", "certify wildness"},
      {"sigma", "the automorphism sigma_n"},
  };
  for (const auto& [name, help] : descriptions) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("inputs", cmd.inputs, "Expressions: polynomials, tame words or (f1, f2, f3, f4)");
    if (name == "nf") sub->add_flag("--graded", cmd.graded, "Reduce modulo q");
    if (name == "pjac") sub->add_option("--k", cmd.k, "Index k in 1..4")->check(CLI::Range(1, 4));
    if (name == "decompose" || name == "wild-check" || name == "reduce-step" || name == "sigma") {
      sub->add_option("--sigma", cmd.sigma, "Use sigma_n")->check(CLI::PositiveNumber);
    }
    sub->callback([&cmd, n = name] { cmd.verb = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      err << "cannot read " << file << '\n';
      return kParseError;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) cmd.inputs.push_back(line);
    }
  }

  const Report report = run(cmd);
  if (cmd.json) {
    out << report.to_json(cmd.budget, cmd.timing).dump(2) << '\n';
  } else if (report.result.contains("error")) {
    err << "error: " << report.result["error"]["message"].get<std::string>() << '\n';
  } else {
    out << render_text(report);
  }
  return report.exit_code;
}

}  // namespace quadric::cli
