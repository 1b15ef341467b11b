#include "bihole/json_io.hpp"

namespace bihole {

using nlohmann::json;

namespace {

json vertex_json(VertexRef v) {
  return json::array({v.side == Side::Left ? "L" : "R", v.index});
}

}  // namespace

json to_json(const Rational& r) {
  return {{"num", r.numerator()}, {"den", r.denominator()}, {"approx", r.to_double()}};
}

json to_json(const BoundReport& report) {
  json out = {
      {"n", report.n},
      {"d", report.d},
      {"caro_wei_sum", to_json(report.caro_wei_sum)},
      {"floor_bound", report.floor_bound},
      {"strengthened", to_json(report.strengthened)},
      {"ceil_strengthened", report.ceil_strengthened()},
      {"average_degree_bound", to_json(report.average_degree_bound)},
  };
  if (report.log_reference) {
    const LogReference& lr = *report.log_reference;
    out["log_reference"] = {
        {"eps", to_json(lr.eps)},
        {"value", to_json(lr.value)},
        {"size_hypothesis_holds", lr.size_hypothesis},
        {"min_average_degree", "unspecified"},
    };
  }
  return out;
}

json to_json(const BiholeWitness& w) {
  return {{"left", w.left}, {"right", w.right}, {"size", w.size()}};
}

json to_json(const DegenerateWitness& w) {
  json order = json::array();
  for (const VertexRef v : w.elimination_order) order.push_back(vertex_json(v));
  return {{"left", w.left}, {"right", w.right}, {"size", w.size()}, {"elimination_order", order}};
}

json to_json(const PeelStep& step) {
  json out = {{"kind", to_string(step.kind)}};
  if (step.kind == StepKind::LowDegreeEdgeDeletion) {
    out["v"] = vertex_json(step.v);
  } else {
    out["a"] = step.a;
    out["b"] = step.b;
  }
  out["max_degree_left"] = step.max_degree_left;
  out["max_degree_right"] = step.max_degree_right;
  if (step.kind == StepKind::LowDegreeEdgeDeletion) {
    out["degree_v"] = step.degree_first;
  } else {
    out["degree_a"] = step.degree_first;
    out["degree_b"] = step.degree_second.value_or(0);
  }
  return out;
}

json to_json(const PeelTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back(to_json(s));
  json values = json::array();
  for (const auto& v : trace.values) values.push_back(to_json(v));
  return {{"d", trace.d}, {"initial", to_json(trace.initial)}, {"steps", steps},
          {"values", values}};
}

}  // namespace bihole
