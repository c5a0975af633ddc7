#include "foldcob/normal_form.hpp"

#include <stdexcept>

namespace foldcob::reeb {

PieceMultiset decompose(const ReebGraph& g) {
  require_valid(g);
  PieceMultiset p;
  p.n1 = static_cast<long>(g.count(VertexKind::Min) + g.count(VertexKind::Max));
  p.n4 = static_cast<long>(g.count(VertexKind::Deg2));
  for (const auto& v : g.vertices)
    if (v.kind == VertexKind::Saddle) (saddle_sign(g, v.id) > 0 ? p.n2 : p.n3)++;
  return p;
}

InvariantVector invariants(const PieceMultiset& p, Category c) {
  return {p.n2 - p.n3, is_oriented(c) ? 0 : static_cast<int>(p.n4 % 2), c};
}

std::string to_string(MoveKind m) {
  switch (m) {
    case MoveKind::CancelPair: return "CANCEL_PAIR";
    case MoveKind::CancelRP2: return "CANCEL_RP2";
    case MoveKind::DeleteSphere: return "DELETE_SPHERE";
  }
  return "?";
}

PieceMultiset apply_move(const PieceMultiset& p, MoveKind m, Category c) {
  PieceMultiset q = p;
  switch (m) {
    case MoveKind::CancelPair:
      if (p.n2 < 1 || p.n3 < 1) throw std::domain_error("CANCEL_PAIR needs pieces of types (2) and (3)");
      q.n2--, q.n3--, q.n1++;
      break;
    case MoveKind::CancelRP2:
      if (is_oriented(c)) throw std::invalid_argument("CANCEL_RP2 is not available in the " + to_string(c) + " category");
      if (p.n4 < 2) throw std::domain_error("CANCEL_RP2 needs two pieces of type (4)");
      q.n4 -= 2, q.n1++;
      break;
    case MoveKind::DeleteSphere:
      if (p.n1 < 1) throw std::domain_error("DELETE_SPHERE needs a piece of type (1)");
      q.n1--;
      break;
  }
  return q;
}

ReebGraph canonical_graph(long z, int w) {
  ReebGraph g;
  g.orientable = w == 0;
  VertexId next = 0;
  long level = 0;
  auto piece = [&](std::initializer_list<VertexKind> kinds, std::initializer_list<std::pair<int, int>> edges) {
    const VertexId base = next;
    for (VertexKind k : kinds) g.vertices.push_back({next++, Value(level++), k});
    for (auto [a, b] : edges) g.edges.emplace_back(base + a, base + b);
  };
  for (long i = 0; i < (z < 0 ? -z : z); ++i) {
    if (z > 0)
      piece({VertexKind::Min, VertexKind::Saddle, VertexKind::Max, VertexKind::Max}, {{0, 1}, {1, 2}, {1, 3}});
    else
      piece({VertexKind::Min, VertexKind::Min, VertexKind::Saddle, VertexKind::Max}, {{0, 2}, {1, 2}, {2, 3}});
  }
  if (w != 0) piece({VertexKind::Min, VertexKind::Deg2, VertexKind::Max}, {{0, 1}, {1, 2}});
  return g;
}

NormalForm reduce_to_normal_form(const ReebGraph& g, Category c) {
  require_valid(g);
  require_category(g, c);
  NormalForm out;
  out.start = decompose(g);
  PieceMultiset p = out.start;
  auto step = [&](MoveKind m) {
    p = apply_move(p, m, c);
    out.trace.push_back({m, p});
  };
  while (p.n2 > 0 && p.n3 > 0) step(MoveKind::CancelPair);
  if (!is_oriented(c))
    while (p.n4 >= 2) step(MoveKind::CancelRP2);
  while (p.n1 > 0) step(MoveKind::DeleteSphere);
  out.nf = invariants(p, c);
  if (out.nf != invariants(g, c)) throw std::logic_error("reduction changed the invariants");
  out.canonical = canonical_graph(out.nf.z, out.nf.w);
  return out;
}

bool cobordant(const ReebGraph& g1, const ReebGraph& g2, Category c) {
  return invariants(g1, c) == invariants(g2, c);
}

}  // namespace foldcob::reeb
