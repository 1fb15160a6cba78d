#include "quadric/report.hpp"

namespace quadric {

namespace {

Json prefixed(const char* key, const std::string& value, const Json& rest) {
  Json j{{key, value}};
  j.update(rest);
  return j;
}

}  // namespace

Json to_json(const Tri& t) { return Json::array({t[0], t[1], t[2]}); }

Json to_json(const TriDegree& d) {
  if (d.is_minus_infinity()) return "-inf";
  return to_json(d.value());
}

Json to_json(const ParachuteReport& r) {
  Json jk = Json::array();
  for (const auto& d : r.jk_degrees) jk.push_back(to_json(d));
  return Json{{"d1", to_json(r.d1)}, {"d2", to_json(r.d2)}, {"jk", jk}, {"nabla", to_json(r.nabla)}};
}

Json to_json(const std::optional<LeadingRelation>& r) {
  if (!r) return nullptr;
  return Json{{"s1", r->s1}, {"s2", r->s2}, {"lambda", r->lambda.to_string()}, {"H", r->polynomial().to_string()}};
}

Json to_json(const Obstruction& o) {
  Json j{{"kind", obstruction_name(o.kind)}, {"proof", o.is_proof()}};
  if (o.system) {
    Json gens = Json::array();
    for (const auto& g : o.system->generators) gens.push_back(Json::array({g.e[0], g.e[1], g.e[2], g.e[3]}));
    const auto& t = o.system->target;
    j["system"] = Json{{"target", Json::array({t[0], t[1], t[2], t[3]})}, {"generators", gens}};
  }
  if (!o.detail.empty()) j["detail"] = o.detail;
  return j;
}

Json to_json(const CoordinateReduction& r) {
  Json j{{"verdict", verdict_name(r.verdict)}, {"deg_before", to_json(r.deg_before)}};
  if (r.verdict == Verdict::Found) {
    j["P"] = r.p->to_string();
    j["deg_after"] = to_json(r.deg_after);
  } else {
    j["obstruction"] = to_json(r.obstruction);
  }
  j["unknowns"] = r.unknowns;
  j["rounds"] = r.rounds;
  return j;
}

Json to_json(const ElementarySearch& s) {
  Json attempts = Json::array();
  for (const auto& a : s.attempts) {
    attempts.push_back(prefixed("family", family_name(a.family), to_json(a.result)));
  }
  Json j{{"verdict", verdict_name(s.verdict)}};
  if (s.letter) j["letter"] = s.letter->to_string();
  j["attempts"] = std::move(attempts);
  return j;
}

Json to_json(const ReductionStep& s) {
  return Json{{"letter", s.letter.to_string()}, {"deg_before", to_json(s.deg_before)},
              {"deg_after", to_json(s.deg_after)}};
}

Json to_json(const Decomposition& d) {
  Json steps = Json::array();
  for (const auto& s : d.steps) steps.push_back(to_json(s));
  return Json{{"steps", steps}, {"terminal", d.terminal.to_string()}, {"replay", d.replay_word().to_string()}};
}

Json to_json(const WildCertificate& c) {
  Json families = Json::array();
  for (const auto& f : c.families) {
    families.push_back(prefixed("family", family_name(f.family), to_json(f.obstruction)));
  }
  return Json{{"conclusive", c.is_conclusive()}, {"degree", to_json(c.degree)}, {"families", families}};
}

Json to_json(const DecompositionResult& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(to_json(s));
  switch (r.status) {
    case DecompositionStatus::Done:
      return prefixed("status", "done", to_json(r.decomposition()));
    case DecompositionStatus::Stuck:
      return Json{{"status", "stuck"}, {"steps", steps}, {"certificate", to_json(*r.certificate)}};
    case DecompositionStatus::Inconclusive: {
      Json open = Json::array();
      for (const auto& a : r.open_attempts) {
        open.push_back(prefixed("family", family_name(a.family), to_json(a.result)));
      }
      return Json{{"status", "inconclusive"}, {"steps", steps}, {"open_attempts", open}};
    }
  }
  return nullptr;
}

Json to_json(const Autom& F) {
  Json coords = Json::array();
  for (const auto& c : F.coords()) coords.push_back(c.to_string());
  return Json{{"coordinates", coords}, {"degree", to_json(degree_aut(F))}};
}

}  // namespace quadric
