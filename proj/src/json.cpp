#include "symbez/json.hpp"

namespace symbez {

using nlohmann::json;

namespace {

json exact_coords(const std::vector<Cyclo12>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.to_string());
  return a;
}

}  // namespace

json to_json(const Obstruction& o) {
  json j{{"kind", o.kind_name()}, {"point", o.point.to_string()}, {"description", o.to_string()}};
  if (o.singular_index >= 0) j["singular_input"] = o.singular_index;
  if (!o.line.empty()) j["tangent_line"] = exact_coords(o.line);
  json jac = json::array();
  for (const auto& row : o.jacobian) jac.push_back(exact_coords(row));
  j["jacobian"] = std::move(jac);
  j["jacobian_rank"] = o.jacobian_rank;
  j["repeated_coordinates"] = o.repeated_coordinates;
  return j;
}

json to_json(const IntersectionPoint& p) {
  json coords = json::array();
  for (const auto& c : p.numeric.coords()) {
    const auto z = c.to_complex();
    coords.push_back({z.real(), z.imag()});
  }
  return {{"coords", std::move(coords)},
          {"exact", p.exact ? json(p.exact->to_string()) : json(nullptr)},
          {"stabilizer", p.stabilizer},
          {"orbit_id", p.orbit_id},
          {"multiplicity", p.multiplicity},
          {"residual", p.residual},
          {"jacobian_score", p.jacobian_score},
          {"is_real", p.is_real}};
}

json to_json(const IntersectionReport& r) {
  json points = json::array();
  for (const auto& p : r.points) points.push_back(to_json(p));
  json inputs = json::array();
  for (const auto& f : r.inputs) inputs.push_back(f.to_string());
  return {{"space", r.dimension == 2 ? "P2" : "P3"},
          {"degrees", r.degrees},
          {"inputs", std::move(inputs)},
          {"bezout", r.bezout_count},
          {"transverse", r.transverse},
          {"transversality", transversality_name(r.transversality)},
          {"obstruction", r.obstruction ? to_json(*r.obstruction) : json(nullptr)},
          {"orbit_type", r.orbit_type.to_string()},
          {"real_count", r.real_count},
          {"complete", r.complete},
          {"precision_bits", r.precision_bits},
          {"points", std::move(points)}};
}

json to_json(const TrialOutcome& t) {
  return {{"index", t.index},
          {"seed", t.seed},
          {"inputs", t.inputs},
          {"status", t.status},
          {"orbit_type", t.orbit_type},
          {"real_count", t.real_count},
          {"obstruction", t.obstruction.empty() ? json(nullptr) : json(t.obstruction)},
          {"counted", t.counted},
          {"ok", t.ok},
          {"real_ok", t.real_ok ? json(*t.real_ok) : json(nullptr)},
          {"note", t.note}};
}

json to_json(const VerificationRun& run) {
  json trials = json::array();
  for (const auto& t : run.trials) trials.push_back(to_json(t));
  return {{"theorem", run.theorem},
          {"params",
           {{"space", run.dimension == 2 ? "P2" : "P3"},
            {"degrees", run.degrees},
            {"trials", run.trials_requested},
            {"seed", run.seed},
            {"precision_bits", run.precision_bits}}},
          {"trials", std::move(trials)},
          {"verdict", verdict_name(run.verdict)},
          {"passed", run.passed},
          {"failed", run.failed},
          {"rejected", run.rejected},
          {"vacuous", run.vacuous},
          {"summary", run.summary}};
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

}  // namespace symbez
