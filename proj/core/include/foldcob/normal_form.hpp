#pragma once

#include "foldcob/reeb_graph.hpp"

#include <string>
#include <vector>

namespace foldcob::reeb {

/// Counts of the four elementary pieces: (1) sphere, (2) saddle with two upper
/// branches, (3) saddle with two lower branches, (4) projective plane.
struct PieceMultiset {
  long n1 = 0, n2 = 0, n3 = 0, n4 = 0;
  friend bool operator==(const PieceMultiset&, const PieceMultiset&) = default;
};

PieceMultiset decompose(const ReebGraph& g);

/// (z, w) carried by a piece multiset.
InvariantVector invariants(const PieceMultiset& p, Category c);

enum class MoveKind { CancelPair, CancelRP2, DeleteSphere };

std::string to_string(MoveKind m);

/// Applies one move. Throws std::invalid_argument when the move is not available
/// in the category, std::domain_error when the pieces it needs are missing.
PieceMultiset apply_move(const PieceMultiset& p, MoveKind m, Category c);

struct AppliedMove {
  MoveKind kind;
  PieceMultiset after;
};

struct NormalForm {
  InvariantVector nf;
  PieceMultiset start;
  std::vector<AppliedMove> trace;
  ReebGraph canonical;
};

NormalForm reduce_to_normal_form(const ReebGraph& g, Category c);

/// Graph realizing (z, w): |z| saddle pieces of the matching type, then a projective plane when w = 1.
ReebGraph canonical_graph(long z, int w);

bool cobordant(const ReebGraph& g1, const ReebGraph& g2, Category c);

}  // namespace foldcob::reeb
