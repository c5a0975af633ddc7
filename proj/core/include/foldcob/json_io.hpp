#pragma once

#include "foldcob/circle_diagram.hpp"
#include "foldcob/complex.hpp"
#include "foldcob/homology.hpp"
#include "foldcob/identities.hpp"
#include "foldcob/normal_form.hpp"
#include "foldcob/reeb_graph.hpp"

#include <json.hpp>

#include <string>

namespace foldcob::io {

using Json = nlohmann::ordered_json;

/// Parses text, raising InputError on malformed JSON.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

/// Machine-sized integers become JSON numbers, anything larger a decimal string.
Json to_json(const algebra::Integer& x);
Json to_json(const algebra::IntVector& v);
Json to_json(const algebra::IntMatrix& m);

Json complex_to_json(const algebra::MixedComplex& cx);
Json group_to_json(const algebra::AbelianGroupPresentation& g, bool with_basis = false);
Json induced_map_to_json(const algebra::InducedMap& m);
Json identities_to_json(const fibers::CountingIdentities& ids);

std::string value_to_string(const reeb::Value& v);
reeb::Value parse_value(const Json& j);

reeb::ReebGraph reeb_from_json(const Json& j);
/// Vertices listed in increasing value.
Json reeb_to_json(const reeb::ReebGraph& g);
Json invariants_to_json(const reeb::InvariantVector& iv);
Json normal_form_to_json(const reeb::NormalForm& nf);

circle::CircleFiberDiagram diagram_from_json(const Json& j);
Json diagram_to_json(const circle::CircleFiberDiagram& d);

}  // namespace foldcob::io
