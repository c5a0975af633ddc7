#pragma once

#include "foldcob/error.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace foldcob::reeb {

using Value = mpq_class;
using VertexId = std::int64_t;

enum class VertexKind { Min, Max, Saddle, Deg2 };

struct ReebVertex {
  VertexId id = 0;
  Value value;
  VertexKind kind = VertexKind::Min;
  friend bool operator==(const ReebVertex&, const ReebVertex&) = default;
};

/// Reeb graph of a stable Morse function on a closed surface. Parallel edges are allowed.
struct ReebGraph {
  bool orientable = true;
  std::vector<ReebVertex> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;

  bool empty() const noexcept { return vertices.empty(); }
  std::size_t count(VertexKind kind) const;
  const ReebVertex& vertex(VertexId id) const;
  friend bool operator==(const ReebGraph&, const ReebGraph&) = default;
};

enum class Category { Oriented, Unoriented, SimpleOriented, SimpleUnoriented };

bool is_oriented(Category c) noexcept;
std::string to_string(Category c);
std::optional<Category> parse_category(std::string_view text);
/// Admissible local moves of the category, as letters "a".."k".
std::string admissible_moves(Category c);

std::string to_string(VertexKind k);
std::optional<VertexKind> parse_vertex_kind(std::string_view text);

ViolationList validate_reeb(const ReebGraph& g);

/// Throws InputError with the first violation, if any.
void require_valid(const ReebGraph& g);
/// Throws InputError when an oriented category receives a nonorientable graph.
void require_category(const ReebGraph& g, Category c);

enum class FiberEventClass { I0, I1, I2 };
enum class EventParity { Odd, Even };

struct FiberEvent {
  Value value;
  FiberEventClass cls = FiberEventClass::I0;
  EventParity parity = EventParity::Odd;
  int sign = 0;           // +1 / -1; 0 for I2
  long components = 0;    // components of the singular fiber
};

struct AlgebraicCounts {
  long I0o = 0, I0e = 0, I1o = 0, I1e = 0;
  long I2 = 0;  // unsigned number of I2 fibers
  friend bool operator==(const AlgebraicCounts&, const AlgebraicCounts&) = default;
};

struct FiberProfile {
  std::vector<FiberEvent> events;  // in increasing value
  AlgebraicCounts counts;
};

FiberProfile fiber_profile(const ReebGraph& g);

/// +1 for a saddle with two higher neighbours, -1 for two lower ones.
int saddle_sign(const ReebGraph& g, VertexId saddle);

struct InvariantVector {
  long z = 0;
  int w = 0;
  Category category = Category::Oriented;
  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

InvariantVector invariants(const ReebGraph& g, Category c);

long euler_characteristic(const ReebGraph& g);

/// Ids are renumbered 0..n-1 (g1 first). g2 is shifted above g1 so that values stay distinct.
ReebGraph disjoint_union(const ReebGraph& g1, const ReebGraph& g2);
ReebGraph negate(const ReebGraph& g);

/// Deterministic random valid graph built by a level sweep with `size` events.
ReebGraph random_reeb(std::uint64_t seed, std::size_t size, bool orientable);

/// Named test surfaces: "sphere", "torus", "projective_plane", "klein_bottle".
ReebGraph named_graph(std::string_view name);

}  // namespace foldcob::reeb
