#include "foldcob/json_io.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <sstream>

namespace foldcob::io {

using algebra::Integer;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const algebra::IntVector& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(to_json(x));
  return arr;
}

Json to_json(const algebra::IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

Json complex_to_json(const algebra::MixedComplex& cx) {
  Json j;
  j["id"] = cx.id;
  j["direction"] = algebra::to_string(cx.direction);
  Json degrees = Json::array();
  Json gens = Json::array();
  for (std::size_t k = 0; k < cx.num_degrees(); ++k) {
    degrees.push_back(cx.size(k));
    for (const auto& g : cx.generators[k]) {
      Json e;
      e["name"] = g.name;
      e["parity"] = algebra::to_string(g.parity);
      e["ring"] = algebra::to_string(g.ring);
      gens.push_back(std::move(e));
    }
  }
  j["degrees"] = std::move(degrees);
  j["generators"] = std::move(gens);
  Json diffs = Json::array();
  for (const auto& d : cx.diffs) diffs.push_back(to_json(d));
  j["differentials"] = std::move(diffs);
  return j;
}

Json group_to_json(const algebra::AbelianGroupPresentation& g, bool with_basis) {
  Json j;
  j["free_rank"] = g.free_rank;
  j["torsion"] = to_json(g.torsion);
  if (with_basis) {
    Json basis = Json::array();
    for (const auto& c : g.basis_cycles) basis.push_back(to_json(c));
    j["basis_cycles"] = std::move(basis);
  }
  return j;
}

Json induced_map_to_json(const algebra::InducedMap& m) {
  Json j;
  j["domain"] = group_to_json(m.domain);
  j["codomain"] = group_to_json(m.codomain);
  j["matrix"] = to_json(m.matrix);
  j["injective"] = m.report.injective;
  j["surjective"] = m.report.surjective;
  j["isomorphism"] = m.report.isomorphism;
  j["image"] = group_to_json(m.report.image);
  return j;
}

Json identities_to_json(const fibers::CountingIdentities& ids) {
  auto form = [&ids](const fibers::CountingIdentity& c) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < ids.codim1.size(); ++i)
      if (c.f[i] != 0) terms.push_back(Json{{"coeff", to_json(c.f[i])}, {"class", ids.codim1[i].label()}, {"of", "f"}});
    for (std::size_t i = 0; i < ids.codim2.size(); ++i)
      if (c.F[i] != 0) terms.push_back(Json{{"coeff", to_json(c.F[i])}, {"class", ids.codim2[i].label()}, {"of", "F"}});
    Json j;
    j["text"] = ids.render(c);
    j["terms"] = std::move(terms);
    return j;
  };
  Json j;
  j["id"] = fibers::to_string(ids.id);
  Json per = Json::array(), elim = Json::array();
  for (const auto& c : ids.per_class) per.push_back(form(c));
  for (const auto& c : ids.eliminated) elim.push_back(form(c));
  j["identities"] = std::move(per);
  j["eliminated"] = std::move(elim);
  return j;
}

std::string value_to_string(const reeb::Value& v) {
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

reeb::Value parse_value(const Json& j) {
  if (j.is_number_integer()) return reeb::Value(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) throw InputError("vertex value must be a string \"p/q\" or an integer");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  auto check = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i >= part.size()) throw InputError("malformed value \"" + s + "\"");
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw InputError("malformed value \"" + s + "\"");
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  check(num, true);
  check(den, false);
  Integer n(num[0] == '+' ? num.substr(1) : num), d(den);
  if (d == 0) throw InputError("zero denominator in \"" + s + "\"");
  reeb::Value v(n, d);
  v.canonicalize();
  return v;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long as_count(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return static_cast<long>(j.get<long long>());
}

}  // namespace

reeb::ReebGraph reeb_from_json(const Json& j) {
  reeb::ReebGraph g;
  const Json& orientable = field(j, "orientable");
  if (!orientable.is_boolean()) throw InputError("\"orientable\" must be a boolean");
  g.orientable = orientable.get<bool>();
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) throw InputError("\"vertices\" must be an array");
  for (const Json& v : vertices) {
    reeb::ReebVertex rv;
    rv.id = as_count(field(v, "id"), "vertex id");
    rv.value = parse_value(field(v, "value"));
    const Json& kind = field(v, "kind");
    auto k = kind.is_string() ? reeb::parse_vertex_kind(kind.get<std::string>()) : std::nullopt;
    if (!k) throw InputError("unknown vertex kind " + kind.dump());
    rv.kind = *k;
    g.vertices.push_back(std::move(rv));
  }
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw InputError("\"edges\" must be an array");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair of vertex ids");
    g.edges.emplace_back(as_count(e[0], "edge endpoint"), as_count(e[1], "edge endpoint"));
  }
  return g;
}

Json reeb_to_json(const reeb::ReebGraph& g) {
  std::vector<const reeb::ReebVertex*> order;
  for (const auto& v : g.vertices) order.push_back(&v);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->value < b->value; });
  Json j;
  j["orientable"] = g.orientable;
  Json vs = Json::array();
  for (const auto* v : order)
    vs.push_back(Json{{"id", v->id}, {"value", value_to_string(v->value)}, {"kind", reeb::to_string(v->kind)}});
  j["vertices"] = std::move(vs);
  Json es = Json::array();
  for (const auto& [a, b] : g.edges) es.push_back(Json::array({a, b}));
  j["edges"] = std::move(es);
  return j;
}

Json invariants_to_json(const reeb::InvariantVector& iv) {
  Json j;
  j["z"] = iv.z;
  if (!reeb::is_oriented(iv.category)) j["w"] = iv.w;
  return j;
}

Json normal_form_to_json(const reeb::NormalForm& nf) {
  auto pieces = [](const reeb::PieceMultiset& p) { return Json::array({p.n1, p.n2, p.n3, p.n4}); };
  Json j;
  j["nf"] = invariants_to_json(nf.nf);
  j["pieces"] = pieces(nf.start);
  Json trace = Json::array();
  for (const auto& m : nf.trace) trace.push_back(Json{{"move", reeb::to_string(m.kind)}, {"pieces", pieces(m.after)}});
  j["trace"] = std::move(trace);
  j["canonical"] = reeb_to_json(nf.canonical);
  return j;
}

circle::CircleFiberDiagram diagram_from_json(const Json& j) {
  circle::CircleFiberDiagram d;
  const Json& mode = field(j, "mode");
  auto m = mode.is_string() ? circle::parse_boundary_mode(mode.get<std::string>()) : std::nullopt;
  if (!m) throw InputError("unknown diagram mode " + mode.dump());
  d.mode = *m;
  const Json& cells = field(j, "cells");
  if (!cells.is_array() || cells.empty()) throw InputError("\"cells\" must be a non-empty array");
  d.arcs.clear();
  bool expect_arc = true;
  for (const Json& c : cells) {
    if (c.is_object() && c.contains("arc")) {
      if (!expect_arc) throw InputError("two arcs in a row in \"cells\"");
      const Json& a = c.at("arc");
      circle::ArcState s;
      s.circles = as_count(field(a, "circles"), "circles");
      s.arcs = a.contains("arcs") ? as_count(a.at("arcs"), "arcs") : 0;
      d.arcs.push_back(s);
    } else if (c.is_object() && c.contains("event")) {
      if (expect_arc) throw InputError("cells must alternate, starting with an arc");
      const Json& e = c.at("event");
      const Json& cls = field(e, "class");
      auto k = cls.is_string() ? circle::parse_event_class(cls.get<std::string>()) : std::nullopt;
      if (!k) throw InputError("unknown event class " + cls.dump());
      d.events.push_back({*k, as_count(field(e, "components"), "components")});
    } else {
      throw InputError("each cell must be {\"arc\": ...} or {\"event\": ...}");
    }
    expect_arc = !expect_arc;
  }
  // A closing arc repeated at the end is the first arc seen again.
  if (d.arcs.size() == d.events.size() + 1 && d.arcs.size() > 1) {
    if (d.arcs.back() != d.arcs.front()) throw InputError("closing arc differs from the first arc");
    d.arcs.pop_back();
  }
  return d;
}

Json diagram_to_json(const circle::CircleFiberDiagram& d) {
  Json j;
  j["mode"] = circle::to_string(d.mode);
  Json cells = Json::array();
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    cells.push_back(Json{{"arc", Json{{"circles", d.arcs[i].circles}, {"arcs", d.arcs[i].arcs}}}});
    if (i < d.events.size())
      cells.push_back(Json{{"event", Json{{"class", circle::to_string(d.events[i].cls)},
                                          {"components", d.events[i].components}}}});
  }
  j["cells"] = std::move(cells);
  return j;
}

}  // namespace foldcob::io
