#pragma once

#include "foldcob/error.hpp"
#include "foldcob/reeb_graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace foldcob::circle {

enum class BoundaryMode { Closed, WithBoundary };
enum class EventClass { I0, I1, I2, Ia };

struct ArcState {
  long circles = 0;
  long arcs = 0;
  long total() const noexcept { return circles + arcs; }
  friend bool operator==(const ArcState&, const ArcState&) = default;
};

struct Event {
  EventClass cls = EventClass::I0;
  long components = 1;
  friend bool operator==(const Event&, const Event&) = default;
};

/// Cyclic diagram over the counterclockwise circle: arcs[i], events[i], arcs[i+1], ...,
/// events[n-1], arcs[0]. A diagram without events has exactly one arc.
struct CircleFiberDiagram {
  BoundaryMode mode = BoundaryMode::Closed;
  std::vector<ArcState> arcs{ArcState{}};
  std::vector<Event> events;

  const ArcState& before(std::size_t i) const { return arcs[i]; }
  const ArcState& after(std::size_t i) const { return arcs[(i + 1) % arcs.size()]; }
  friend bool operator==(const CircleFiberDiagram&, const CircleFiberDiagram&) = default;
};

std::string to_string(BoundaryMode m);
std::optional<BoundaryMode> parse_boundary_mode(std::string_view text);
std::string to_string(EventClass c);
std::optional<EventClass> parse_event_class(std::string_view text);

ViolationList validate_diagram(const CircleFiberDiagram& d);
void require_valid(const CircleFiberDiagram& d);

/// Signed counts |X_p| for the codimension-1 classes and the unsigned I2 count.
struct DiagramCounts {
  long I0o = 0, I0e = 0, I1o = 0, I1e = 0, Iao = 0, Iae = 0;
  long I2 = 0;
  long I2_mod2() const noexcept { return I2 % 2; }
  friend bool operator==(const DiagramCounts&, const DiagramCounts&) = default;
};

/// +1 when the regular component parity goes even -> odd counterclockwise, -1 for odd -> even, 0 otherwise.
int event_sign(const CircleFiberDiagram& d, std::size_t i);

DiagramCounts algebraic_counts(const CircleFiberDiagram& d);

struct CuspReport {
  long cusps = 0;      // -|I0o| + |I0e|
  long cross = 0;      // the second expression
  bool consistent = false;
  std::string diagnostic;  // "diagram not realizable: ..." when inconsistent
};

/// Closed case: cross-checks against -|I1o| + |I1e|.
CuspReport cusp_count_closed(const CircleFiberDiagram& d);
/// Boundary case: cross-checks against -|Iao| + |Iae| - |I1o| + |I1e|.
CuspReport cusp_count_boundary(const CircleFiberDiagram& d);
/// Dispatches on the diagram's mode.
CuspReport cusp_count(const CircleFiberDiagram& d);

CircleFiberDiagram reverse(const CircleFiberDiagram& d);
CircleFiberDiagram disjoint_union(const CircleFiberDiagram& d1, const CircleFiberDiagram& d2);
CircleFiberDiagram from_reeb(const reeb::ReebGraph& g);

/// Valid diagram built by inserting `pairs` mutually cancelling event pairs at random positions.
CircleFiberDiagram random_paired_diagram(std::uint64_t seed, std::size_t pairs, BoundaryMode mode);

}  // namespace foldcob::circle
