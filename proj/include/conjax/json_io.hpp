#pragma once

#include <json.hpp>

#include "conjax/axis.hpp"
#include "conjax/conjecture.hpp"
#include "conjax/decompose.hpp"
#include "conjax/h2.hpp"
#include "conjax/runs.hpp"
#include "conjax/tripod.hpp"
#include "conjax/word.hpp"

namespace conjax {

using ojson = nlohmann::ordered_json;

inline ojson json_of(const ReducedWord& w) { return to_string(w); }
inline ojson json_of(const CyclicWord& w) { return to_string(w); }

inline ojson json_of(const Axis& a) {
  return ojson{{"conjugator", to_string(a.conjugator)}, {"core", to_string(a.core)}};
}

inline ojson json_of(const IntersectionResult& r) {
  ojson j;
  switch (r.kind) {
    case IntersectionKind::Empty: j["kind"] = "empty"; break;
    case IntersectionKind::Vertex: j["kind"] = "vertex"; break;
    case IntersectionKind::Segment: j["kind"] = "segment"; break;
    case IntersectionKind::SameLine: j["kind"] = "line"; break;
  }
  if (r.kind == IntersectionKind::Vertex) j["start"] = to_string(r.vertex->address);
  if (r.kind == IntersectionKind::Segment) {
    j["start"] = to_string(r.segment->start.address);
    j["label"] = to_string(r.segment->label);
  }
  return j;
}

inline const char* meet_name(MeetKind m) {
  switch (m) {
    case MeetKind::Disjoint: return "disjoint";
    case MeetKind::Point: return "point";
    default: return "segment";
  }
}

inline ojson json_of(const TripodReport& r) {
  ojson j;
  j["word"] = to_string(r.W);
  j["g1"] = to_string(r.g1);
  j["g2"] = to_string(r.g2);
  j["w1"] = to_string(r.w1);
  j["w2"] = to_string(r.w2);
  j["u"] = to_string(r.U);
  j["v_label"] = to_string(r.V);
  j["u_interval"] = ojson{{"lo", r.u_lo}, {"hi", r.u_hi}};
  j["v_interval"] = ojson{{"lo", r.v_lo}, {"hi", r.v_hi}};
  j["meet"] = meet_name(r.meet);
  if (r.meet == MeetKind::Segment) j["meet_label"] = to_string(r.meet_label);
  j["covers"] = r.covers;
  if (r.union_label) j["union_label"] = to_string(*r.union_label);
  j["excess"] = r.excess;
  return j;
}

inline ojson json_of(const MatchRun& r) {
  return ojson{
      {"shift", r.shift}, {"lo", r.lo}, {"hi", r.hi}, {"label", to_string(r.label)}};
}

inline ojson json_of(const Decomposition& d) {
  return ojson{{"B", to_string(d.B)}, {"C", to_string(d.C)}, {"k", d.k}, {"I", to_string(d.I)}};
}

inline const char* cover_status_name(CoverDecomposeStatus s) {
  switch (s) {
    case CoverDecomposeStatus::Ok: return "ok";
    case CoverDecomposeStatus::Inconclusive: return "inconclusive";
    case CoverDecomposeStatus::Degenerate: return "degenerate";
    default: return "no_occurrence";
  }
}

inline ojson json_of(const CoverDecomposeOutcome& o) {
  ojson j;
  j["status"] = cover_status_name(o.status);
  if (o.decomposition) {
    ojson d = json_of(*o.decomposition);
    for (auto& [key, val] : d.items()) j[key] = val;
    j["shift"] = o.shift;
    j["via_period"] = o.via_period;
    ReducedWord t = remark_terminal(*o.decomposition);
    j["T"] = to_string(t);
    j["t_equals_b"] = t == o.decomposition->B;
  } else if (!o.message.empty()) {
    j["message"] = o.message;
  }
  return j;
}

inline ojson json_of(const ConjectureWitness& w) {
  return ojson{{"D", to_string(w.D)}, {"C", to_string(w.C)}, {"k", w.k}, {"r", w.r}, {"s", w.s}};
}

inline ojson json_of(const ConjectureResult& r) {
  ojson j;
  if (r.witness) {
    j["status"] = "witness";
    ojson w = json_of(*r.witness);
    for (auto& [key, val] : w.items()) j[key] = val;
  } else {
    j["status"] = r.near_miss ? "near_miss" : "none";
  }
  return j;
}

inline ojson json_of(const IdealPoint& p) {
  if (p.infinite) return "inf";
  return p.value;
}

inline ojson json_of(const GeodesicH2& g) {
  return ojson{{"e1", json_of(g.e1)}, {"e2", json_of(g.e2)}};
}

inline ojson json_of(const PointH2& p) { return ojson{{"re", p.re}, {"im", p.im}}; }

inline ojson json_of(const Lift& l) {
  return ojson{{"conjugator", to_string(l.conjugator)}, {"geodesic", json_of(l.geodesic)}};
}

inline ojson json_of(const TriangleReport& t) {
  ojson j;
  j["lifts"] = t.lift_index;
  j["vertices"] = ojson::array({json_of(t.vertices[0]), json_of(t.vertices[1]),
                                json_of(t.vertices[2])});
  j["edge_lengths"] = t.edge_lengths;
  j["gamma_length"] = t.gamma_length;
  j["max_edge_ratio"] = t.max_edge_ratio;
  return j;
}

inline ojson json_of(const TriangleScan& s) {
  ojson j;
  j["gamma_length"] = s.gamma_length;
  j["lifts"] = ojson::array();
  for (const Lift& l : s.lifts) j["lifts"].push_back(json_of(l));
  j["triangles"] = ojson::array();
  for (const TriangleReport& t : s.triangles) j["triangles"].push_back(json_of(t));
  j["violations"] = s.violations;
  j["degenerate"] = s.degenerate;
  return j;
}

}  // namespace conjax
