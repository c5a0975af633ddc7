#include "foldcob/circle_diagram.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace foldcob::circle {

std::string to_string(BoundaryMode m) { return m == BoundaryMode::Closed ? "CLOSED" : "WITH_BOUNDARY"; }

std::optional<BoundaryMode> parse_boundary_mode(std::string_view text) {
  if (text == "CLOSED") return BoundaryMode::Closed;
  if (text == "WITH_BOUNDARY") return BoundaryMode::WithBoundary;
  return std::nullopt;
}

std::string to_string(EventClass c) {
  switch (c) {
    case EventClass::I0: return "I0";
    case EventClass::I1: return "I1";
    case EventClass::I2: return "I2";
    case EventClass::Ia: return "Ia";
  }
  return "?";
}

std::optional<EventClass> parse_event_class(std::string_view text) {
  for (EventClass c : {EventClass::I0, EventClass::I1, EventClass::I2, EventClass::Ia})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

ViolationList validate_diagram(const CircleFiberDiagram& d) {
  ViolationList out;
  const std::size_t n = d.events.size();
  if (d.arcs.size() != std::max<std::size_t>(n, 1)) {
    out.push_back({"shape", "a diagram with " + std::to_string(n) + " events needs " +
                                std::to_string(std::max<std::size_t>(n, 1)) + " arcs, found " +
                                std::to_string(d.arcs.size())});
    return out;
  }
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    const ArcState& a = d.arcs[i];
    if (a.circles < 0 || a.arcs < 0) out.push_back({"negative count", "arc " + std::to_string(i)});
    if (d.mode == BoundaryMode::Closed && a.arcs != 0)
      out.push_back({"arcs in closed diagram", "arc " + std::to_string(i) + " has " + std::to_string(a.arcs) +
                                                   " fiber arcs"});
  }
  long flips = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Event& e = d.events[i];
    const ArcState& lo = d.before(i);
    const ArcState& hi = d.after(i);
    const std::string where = "event " + std::to_string(i) + " (" + to_string(e.cls) + ")";
    if (e.components < 1) out.push_back({"components", where + " has no components"});
    switch (e.cls) {
      case EventClass::I0:
      case EventClass::I1:
        if (lo.arcs != hi.arcs || (hi.circles - lo.circles != 1 && lo.circles - hi.circles != 1))
          out.push_back({"transition", where + " must change the circle count by one and keep the arcs"});
        break;
      case EventClass::I2:
        if (d.mode != BoundaryMode::Closed) out.push_back({"I2 with boundary", where + " needs a closed diagram"});
        if (lo != hi) out.push_back({"transition", where + " must not change the fiber"});
        break;
      case EventClass::Ia:
        if (d.mode == BoundaryMode::Closed) out.push_back({"Ia in closed diagram", where + " needs fiber arcs"});
        if (hi.total() - lo.total() != 1 && lo.total() - hi.total() != 1)
          out.push_back({"transition", where + " must change the component count by one"});
        break;
    }
    if ((lo.total() - hi.total()) % 2 != 0) ++flips;
  }
  if (flips % 2 != 0) out.push_back({"parity", "odd number of parity-changing events"});
  return out;
}

void require_valid(const CircleFiberDiagram& d) {
  if (auto v = validate_diagram(d); !v.empty()) throw InputError(v.front().code + ": " + v.front().message);
}

int event_sign(const CircleFiberDiagram& d, std::size_t i) {
  const long below = d.before(i).total() % 2;
  const long above = d.after(i).total() % 2;
  if (below == 0 && above == 1) return 1;
  if (below == 1 && above == 0) return -1;
  return 0;
}

DiagramCounts algebraic_counts(const CircleFiberDiagram& d) {
  require_valid(d);
  DiagramCounts c;
  for (std::size_t i = 0; i < d.events.size(); ++i) {
    const Event& e = d.events[i];
    const bool odd = e.components % 2 == 1;
    const int s = event_sign(d, i);
    switch (e.cls) {
      case EventClass::I0: (odd ? c.I0o : c.I0e) += s; break;
      case EventClass::I1: (odd ? c.I1o : c.I1e) += s; break;
      case EventClass::Ia: (odd ? c.Iao : c.Iae) += s; break;
      case EventClass::I2: c.I2 += 1; break;
    }
  }
  return c;
}

namespace {

CuspReport report(long cusps, long cross) {
  CuspReport r{cusps, cross, cusps == cross, {}};
  if (!r.consistent)
    r.diagnostic = "diagram not realizable: cusp count " + std::to_string(cusps) +
                   " disagrees with the cross-check value " + std::to_string(cross);
  return r;
}

}  // namespace

CuspReport cusp_count_closed(const CircleFiberDiagram& d) {
  if (d.mode != BoundaryMode::Closed) throw std::invalid_argument("cusp_count_closed needs a CLOSED diagram");
  const DiagramCounts c = algebraic_counts(d);
  return report(-c.I0o + c.I0e, -c.I1o + c.I1e);
}

CuspReport cusp_count_boundary(const CircleFiberDiagram& d) {
  if (d.mode != BoundaryMode::WithBoundary)
    throw std::invalid_argument("cusp_count_boundary needs a WITH_BOUNDARY diagram");
  const DiagramCounts c = algebraic_counts(d);
  return report(-c.I0o + c.I0e, -c.Iao + c.Iae - c.I1o + c.I1e);
}

CuspReport cusp_count(const CircleFiberDiagram& d) {
  return d.mode == BoundaryMode::Closed ? cusp_count_closed(d) : cusp_count_boundary(d);
}

CircleFiberDiagram reverse(const CircleFiberDiagram& d) {
  CircleFiberDiagram r;
  r.mode = d.mode;
  const std::size_t n = d.events.size();
  if (n == 0) {
    r.arcs = d.arcs;
    return r;
  }
  r.arcs.clear();
  for (std::size_t j = 0; j < n; ++j) {
    r.arcs.push_back(d.arcs[(n - j) % n]);
    r.events.push_back(d.events[n - 1 - j]);
  }
  return r;
}

CircleFiberDiagram disjoint_union(const CircleFiberDiagram& d1, const CircleFiberDiagram& d2) {
  CircleFiberDiagram r;
  r.mode = d1.mode == BoundaryMode::WithBoundary || d2.mode == BoundaryMode::WithBoundary
               ? BoundaryMode::WithBoundary
               : BoundaryMode::Closed;
  const ArcState base1 = d1.arcs.front();
  const ArcState base2 = d2.arcs.front();
  r.arcs.clear();
  auto run = [&r](const CircleFiberDiagram& d, const ArcState& other) {
    for (std::size_t i = 0; i < d.events.size(); ++i) {
      r.arcs.push_back({d.arcs[i].circles + other.circles, d.arcs[i].arcs + other.arcs});
      r.events.push_back({d.events[i].cls, d.events[i].components + other.total()});
    }
  };
  run(d1, base2);
  run(d2, base1);
  if (r.events.empty()) r.arcs.push_back({base1.circles + base2.circles, base1.arcs + base2.arcs});
  return r;
}

CircleFiberDiagram from_reeb(const reeb::ReebGraph& g) {
  reeb::require_valid(g);
  std::map<reeb::VertexId, const reeb::Value*> value;
  for (const auto& v : g.vertices) value[v.id] = &v.value;

  std::vector<const reeb::ReebVertex*> order;
  for (const auto& v : g.vertices) order.push_back(&v);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->value < b->value; });

  CircleFiberDiagram d;
  d.mode = BoundaryMode::Closed;
  for (const reeb::ReebVertex* v : order) {
    long strictly = 0, above = 0;
    for (const auto& [a, b] : g.edges) {
      const reeb::Value& lo = std::min(*value[a], *value[b]);
      const reeb::Value& hi = std::max(*value[a], *value[b]);
      if (lo < v->value && v->value < hi) ++strictly;
      if (lo <= v->value && v->value < hi) ++above;
    }
    const EventClass cls = v->kind == reeb::VertexKind::Saddle ? EventClass::I1
                           : v->kind == reeb::VertexKind::Deg2 ? EventClass::I2
                                                               : EventClass::I0;
    d.events.push_back({cls, strictly + 1});
    d.arcs.push_back({above, 0});
  }
  // The level above the maximum wraps around to the silent arc below the minimum.
  if (!d.events.empty()) d.arcs.pop_back();
  return d;
}

CircleFiberDiagram random_paired_diagram(std::uint64_t seed, std::size_t pairs, BoundaryMode mode) {
  std::mt19937_64 rng(seed);
  CircleFiberDiagram d;
  d.mode = mode;
  d.arcs = {ArcState{static_cast<long>(rng() % 3), mode == BoundaryMode::Closed ? 0 : 1 + static_cast<long>(rng() % 2)}};

  struct Pair {
    EventClass cls;
    ArcState middle;
    long first_components;
    long second_components;
  };
  for (std::size_t k = 0; k < pairs; ++k) {
    std::uniform_int_distribution<std::size_t> where(0, d.arcs.size() - 1);
    const std::size_t p = where(rng);
    const ArcState s = d.arcs[p];
    const long t = s.total();
    std::vector<Pair> options;
    options.push_back({EventClass::I0, {s.circles + 1, s.arcs}, t + 1, t + 1});
    if (s.circles >= 1) {
      options.push_back({EventClass::I0, {s.circles - 1, s.arcs}, t, t});
      options.push_back({EventClass::I1, {s.circles + 1, s.arcs}, t, t});
    }
    if (s.circles >= 2) options.push_back({EventClass::I1, {s.circles - 1, s.arcs}, t - 1, t - 1});
    if (mode == BoundaryMode::Closed && t >= 1) options.push_back({EventClass::I2, s, t, t});
    if (mode == BoundaryMode::WithBoundary && s.arcs >= 1) {
      options.push_back({EventClass::Ia, {s.circles, s.arcs + 1}, t, t});
      if (s.circles >= 1) options.push_back({EventClass::Ia, {s.circles - 1, s.arcs}, t - 1, t - 1});
    }
    std::uniform_int_distribution<std::size_t> choose(0, options.size() - 1);
    const Pair& pick = options[choose(rng)];
    const auto pos = static_cast<std::ptrdiff_t>(p);
    if (d.events.empty()) {
      d.arcs.push_back(pick.middle);
    } else {
      d.arcs.insert(d.arcs.begin() + pos + 1, {pick.middle, s});
    }
    d.events.insert(d.events.begin() + pos,
                    {Event{pick.cls, pick.first_components}, Event{pick.cls, pick.second_components}});
  }
  return d;
}

}  // namespace foldcob::circle
