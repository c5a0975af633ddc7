#include "foldcob/reeb_graph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace foldcob::reeb {

std::size_t ReebGraph::count(VertexKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(vertices.begin(), vertices.end(), [kind](const ReebVertex& v) { return v.kind == kind; }));
}

const ReebVertex& ReebGraph::vertex(VertexId id) const {
  for (const auto& v : vertices)
    if (v.id == id) return v;
  throw std::out_of_range("no vertex with id " + std::to_string(id));
}

bool is_oriented(Category c) noexcept { return c == Category::Oriented || c == Category::SimpleOriented; }

std::string to_string(Category c) {
  switch (c) {
    case Category::Oriented: return "oriented";
    case Category::Unoriented: return "unoriented";
    case Category::SimpleOriented: return "simple_oriented";
    case Category::SimpleUnoriented: return "simple_unoriented";
  }
  return "?";
}

std::optional<Category> parse_category(std::string_view text) {
  for (Category c : {Category::Oriented, Category::Unoriented, Category::SimpleOriented, Category::SimpleUnoriented})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::string admissible_moves(Category c) {
  switch (c) {
    case Category::Oriented: return "abcdefg";
    case Category::Unoriented: return "abcdefghijk";
    case Category::SimpleOriented: return "abcd";
    case Category::SimpleUnoriented: return "abcdhi";
  }
  return "";
}

std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Min: return "MIN";
    case VertexKind::Max: return "MAX";
    case VertexKind::Saddle: return "SADDLE";
    case VertexKind::Deg2: return "DEG2";
  }
  return "?";
}

std::optional<VertexKind> parse_vertex_kind(std::string_view text) {
  for (VertexKind k : {VertexKind::Min, VertexKind::Max, VertexKind::Saddle, VertexKind::Deg2})
    if (to_string(k) == text) return k;
  return std::nullopt;
}

namespace {

struct Neighbourhood {
  long up = 0;
  long down = 0;
};

std::string vname(const ReebVertex& v) { return to_string(v.kind) + " " + std::to_string(v.id); }

}  // namespace

ViolationList validate_reeb(const ReebGraph& g) {
  ViolationList out;
  std::map<VertexId, const ReebVertex*> by_id;
  for (const auto& v : g.vertices)
    if (!by_id.emplace(v.id, &v).second) out.push_back({"duplicate vertex id", "id " + std::to_string(v.id)});

  std::map<Value, VertexId> by_value;
  for (const auto& v : g.vertices)
    if (auto [it, fresh] = by_value.emplace(v.value, v.id); !fresh)
      out.push_back({"duplicate value", "vertices " + std::to_string(it->second) + " and " + std::to_string(v.id) +
                                            " share value " + v.value.get_str()});

  std::map<VertexId, Neighbourhood> nb;
  for (const auto& [a, b] : g.edges) {
    auto ia = by_id.find(a), ib = by_id.find(b);
    if (ia == by_id.end() || ib == by_id.end()) {
      out.push_back({"unknown vertex", "edge [" + std::to_string(a) + "," + std::to_string(b) + "]"});
      continue;
    }
    if (a == b) {
      out.push_back({"self loop", "at vertex " + std::to_string(a)});
      continue;
    }
    const Value& va = ia->second->value;
    const Value& vb = ib->second->value;
    if (va == vb) {
      out.push_back({"flat edge", "edge [" + std::to_string(a) + "," + std::to_string(b) + "] joins equal values"});
      continue;
    }
    if (va < vb) {
      nb[a].up++;
      nb[b].down++;
    } else {
      nb[a].down++;
      nb[b].up++;
    }
  }

  for (const auto& v : g.vertices) {
    const Neighbourhood n = nb[v.id];
    const long degree = n.up + n.down;
    switch (v.kind) {
      case VertexKind::Min:
        if (degree != 1) out.push_back({"min degree", vname(v) + " has degree " + std::to_string(degree)});
        else if (n.up != 1) out.push_back({"min orientation", vname(v) + " has a lower neighbour"});
        break;
      case VertexKind::Max:
        if (degree != 1) out.push_back({"max degree", vname(v) + " has degree " + std::to_string(degree)});
        else if (n.down != 1) out.push_back({"max orientation", vname(v) + " has a higher neighbour"});
        break;
      case VertexKind::Saddle:
        if (degree != 3) out.push_back({"saddle degree", vname(v) + " has degree " + std::to_string(degree)});
        else if (n.up == 0 || n.down == 0)
          out.push_back({"saddle shape", vname(v) + " needs neighbours on both sides"});
        break;
      case VertexKind::Deg2:
        if (degree != 2) out.push_back({"deg2 degree", vname(v) + " has degree " + std::to_string(degree)});
        else if (n.up != 1) out.push_back({"deg2 shape", vname(v) + " needs one higher and one lower neighbour"});
        if (g.orientable)
          out.push_back({"nonorientable vertex in orientable category", vname(v) + " in an orientable graph"});
        break;
    }
  }
  return out;
}

void require_valid(const ReebGraph& g) {
  if (auto v = validate_reeb(g); !v.empty()) throw InputError(v.front().code + ": " + v.front().message);
}

void require_category(const ReebGraph& g, Category c) {
  if (is_oriented(c) && !g.orientable)
    throw InputError("category mismatch: " + to_string(c) + " needs an orientable graph");
}

FiberProfile fiber_profile(const ReebGraph& g) {
  require_valid(g);
  std::map<VertexId, const ReebVertex*> by_id;
  for (const auto& v : g.vertices) by_id[v.id] = &v;

  std::vector<const ReebVertex*> order;
  for (const auto& v : g.vertices) order.push_back(&v);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->value < b->value; });

  FiberProfile p;
  for (const ReebVertex* v : order) {
    long crossing = 0, up = 0, down = 0;
    for (const auto& [a, b] : g.edges) {
      const Value& va = by_id[a]->value;
      const Value& vb = by_id[b]->value;
      const Value& lo = va < vb ? va : vb;
      const Value& hi = va < vb ? vb : va;
      if (lo < v->value && v->value < hi) ++crossing;
      if (a == v->id || b == v->id) (hi == v->value ? down : up)++;
    }
    const long below = crossing + down;
    const long above = crossing + up;
    FiberEvent e;
    e.value = v->value;
    e.components = crossing + 1;
    e.parity = e.components % 2 ? EventParity::Odd : EventParity::Even;
    e.cls = v->kind == VertexKind::Saddle ? FiberEventClass::I1
            : v->kind == VertexKind::Deg2 ? FiberEventClass::I2
                                          : FiberEventClass::I0;
    if (below % 2 == 0 && above % 2 == 1) e.sign = 1;
    else if (below % 2 == 1 && above % 2 == 0) e.sign = -1;

    const bool odd = e.parity == EventParity::Odd;
    switch (e.cls) {
      case FiberEventClass::I0: (odd ? p.counts.I0o : p.counts.I0e) += e.sign; break;
      case FiberEventClass::I1: (odd ? p.counts.I1o : p.counts.I1e) += e.sign; break;
      case FiberEventClass::I2: p.counts.I2 += 1; break;
    }
    p.events.push_back(std::move(e));
  }
  return p;
}

int saddle_sign(const ReebGraph& g, VertexId saddle) {
  const ReebVertex& s = g.vertex(saddle);
  if (s.kind != VertexKind::Saddle) throw std::invalid_argument("vertex " + std::to_string(saddle) + " is no saddle");
  int up = 0;
  for (const auto& [a, b] : g.edges) {
    if (a != saddle && b != saddle) continue;
    if (g.vertex(a == saddle ? b : a).value > s.value) ++up;
  }
  return up == 2 ? 1 : -1;
}

InvariantVector invariants(const ReebGraph& g, Category c) {
  require_valid(g);
  require_category(g, c);
  InvariantVector iv;
  iv.category = c;
  iv.z = static_cast<long>(g.count(VertexKind::Max)) - static_cast<long>(g.count(VertexKind::Min));
  iv.w = is_oriented(c) ? 0 : static_cast<int>(g.count(VertexKind::Deg2) % 2);

  long signs = 0;
  for (const auto& v : g.vertices)
    if (v.kind == VertexKind::Saddle) signs += saddle_sign(g, v.id);
  if (signs != iv.z) throw std::logic_error("saddle signs do not add up to #MAX - #MIN");
  const AlgebraicCounts counts = fiber_profile(g).counts;
  if (-counts.I0o + counts.I0e != iv.z) throw std::logic_error("fiber counts disagree with #MAX - #MIN");
  return iv;
}

long euler_characteristic(const ReebGraph& g) {
  return static_cast<long>(g.count(VertexKind::Min) + g.count(VertexKind::Max)) -
         static_cast<long>(g.count(VertexKind::Saddle) + g.count(VertexKind::Deg2));
}

ReebGraph disjoint_union(const ReebGraph& g1, const ReebGraph& g2) {
  ReebGraph out;
  out.orientable = g1.orientable && g2.orientable;
  Value shift = 0;
  if (!g1.empty() && !g2.empty()) {
    auto cmp = [](const ReebVertex& a, const ReebVertex& b) { return a.value < b.value; };
    shift = std::max_element(g1.vertices.begin(), g1.vertices.end(), cmp)->value -
            std::min_element(g2.vertices.begin(), g2.vertices.end(), cmp)->value + 1;
  }
  VertexId next = 0;
  auto add = [&](const ReebGraph& g, const Value& offset) {
    std::map<VertexId, VertexId> ids;
    for (const auto& v : g.vertices) {
      ids[v.id] = next;
      out.vertices.push_back({next++, Value(v.value + offset), v.kind});
    }
    for (const auto& [a, b] : g.edges) out.edges.emplace_back(ids.at(a), ids.at(b));
  };
  add(g1, Value(0));
  add(g2, shift);
  return out;
}

ReebGraph negate(const ReebGraph& g) {
  ReebGraph out = g;
  for (auto& v : out.vertices) {
    v.value = -v.value;
    if (v.kind == VertexKind::Min) v.kind = VertexKind::Max;
    else if (v.kind == VertexKind::Max) v.kind = VertexKind::Min;
  }
  return out;
}

ReebGraph random_reeb(std::uint64_t seed, std::size_t size, bool orientable) {
  enum class Step { Birth, Death, Split, Merge, Deg2 };
  std::mt19937_64 rng(seed);
  ReebGraph g;
  g.orientable = orientable;
  std::vector<VertexId> strands;  // lower endpoint of every open edge
  VertexId next = 0;
  long level = 0;

  auto place = [&](VertexKind kind) {
    const long denom = 2 + static_cast<long>(rng() % 5);
    g.vertices.push_back({next, Value(level * denom + 1, denom), kind});
    ++level;
    return next++;
  };
  auto take = [&]() {
    std::uniform_int_distribution<std::size_t> pick(0, strands.size() - 1);
    const std::size_t i = pick(rng);
    const VertexId v = strands[i];
    strands.erase(strands.begin() + static_cast<std::ptrdiff_t>(i));
    return v;
  };

  for (std::size_t k = 0; k < size; ++k) {
    std::vector<Step> options{Step::Birth};
    if (!strands.empty()) {
      options.push_back(Step::Death);
      options.push_back(Step::Split);
      if (!orientable) options.push_back(Step::Deg2);
    }
    if (strands.size() >= 2) options.push_back(Step::Merge);
    std::uniform_int_distribution<std::size_t> choose(0, options.size() - 1);
    switch (options[choose(rng)]) {
      case Step::Birth: strands.push_back(place(VertexKind::Min)); break;
      case Step::Death: {
        const VertexId lower = take();
        g.edges.emplace_back(lower, place(VertexKind::Max));
        break;
      }
      case Step::Split: {
        const VertexId lower = take();
        const VertexId s = place(VertexKind::Saddle);
        g.edges.emplace_back(lower, s);
        strands.push_back(s);
        strands.push_back(s);
        break;
      }
      case Step::Merge: {
        const VertexId a = take();
        const VertexId b = take();
        const VertexId s = place(VertexKind::Saddle);
        g.edges.emplace_back(a, s);
        g.edges.emplace_back(b, s);
        strands.push_back(s);
        break;
      }
      case Step::Deg2: {
        const VertexId lower = take();
        const VertexId d = place(VertexKind::Deg2);
        g.edges.emplace_back(lower, d);
        strands.push_back(d);
        break;
      }
    }
  }
  while (!strands.empty()) {
    const VertexId lower = take();
    g.edges.emplace_back(lower, place(VertexKind::Max));
  }
  return g;
}

ReebGraph named_graph(std::string_view name) {
  ReebGraph g;
  auto chain = [&g](std::initializer_list<VertexKind> kinds) {
    VertexId id = 0;
    for (VertexKind k : kinds) {
      g.vertices.push_back({id, Value(id), k});
      if (id > 0) g.edges.emplace_back(id - 1, id);
      ++id;
    }
  };
  if (name == "sphere") {
    chain({VertexKind::Min, VertexKind::Max});
  } else if (name == "torus") {
    chain({VertexKind::Min, VertexKind::Saddle, VertexKind::Saddle, VertexKind::Max});
    g.edges.emplace_back(1, 2);
  } else if (name == "projective_plane") {
    g.orientable = false;
    chain({VertexKind::Min, VertexKind::Deg2, VertexKind::Max});
  } else if (name == "klein_bottle") {
    g.orientable = false;
    chain({VertexKind::Min, VertexKind::Deg2, VertexKind::Deg2, VertexKind::Max});
  } else {
    throw std::invalid_argument("unknown named graph " + std::string(name));
  }
  return g;
}

}  // namespace foldcob::reeb
