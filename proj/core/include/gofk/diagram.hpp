#pragma once

// Standard genus two Heegaard diagrams as glued polygonal cell complexes.
//
// Every edge of the complex lies on at most one curve of each disk system:
// the V-side system (boundaries of D, E; letters x, y) and the W-side system
// (boundaries of D', E'; letters x', y').  Edges on neither are free.  Each
// edge appears in exactly two cell sides with opposite directions, so the
// surface is oriented by the counter-clockwise order of the sides.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gofk/manifold.hpp"
#include "gofk/words.hpp"

namespace gofk {

enum class System : std::uint8_t { V, W };

std::string_view to_string(System s);

struct Edge {
  std::string label;
  std::optional<Gen> v_letter;
  std::optional<Gen> w_letter;

  std::optional<Gen> letter(System s) const { return s == System::V ? v_letter : w_letter; }
  bool is_free() const { return !v_letter && !w_letter; }
  int letter_weight() const { return (v_letter ? 1 : 0) + (w_letter ? 1 : 0); }
};

struct Side {
  int edge = 0;
  int dir = 1;  // +1 if the edge runs counter-clockwise around the cell
};

struct Cell {
  std::vector<Side> sides;
};

// Location of one side: cell index and side index within that cell.
struct SideRef {
  int cell = 0;
  int side = 0;
  friend bool operator==(const SideRef&, const SideRef&) = default;
  friend auto operator<=>(const SideRef&, const SideRef&) = default;
};

class StandardDiagram {
 public:
  // Validates the complex; throws DomainError if it is not a closed connected
  // oriented surface of genus two.
  StandardDiagram(Manifold3 manifold, std::vector<Edge> edges, std::vector<Cell> cells);

  const Manifold3& manifold() const { return manifold_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const Side& side(SideRef r) const { return cells_[r.cell].sides[r.side]; }
  const Edge& edge_of(SideRef r) const { return edges_[side(r).edge]; }

  // The other occurrence of the same edge.
  SideRef paired(SideRef r) const;
  // Occurrences of an edge with dir +1 and dir -1.
  SideRef positive_side(int edge) const { return occurrences_[edge][0]; }
  SideRef negative_side(int edge) const { return occurrences_[edge][1]; }

  int vertex_count() const { return vertex_count_; }
  // Vertex at the start of a side (counter-clockwise).
  int start_vertex(SideRef r) const;
  int euler_characteristic() const;

  // Short tag such as "d+", "e-", "d'", "e'", "d+/d'", or "free".
  std::string carrier_tag(SideRef r) const;

 private:
  Manifold3 manifold_;
  std::vector<Edge> edges_;
  std::vector<Cell> cells_;
  std::vector<std::array<SideRef, 2>> occurrences_;
  std::vector<std::vector<int>> corner_vertex_;
  int vertex_count_ = 0;
};

// One cell per point of D' meeting D in each lens summand, glued with the
// offset q, plus one square per S^2xS^1 summand; the two genus one pieces are
// joined along a free edge.  S^3, S^2xS^1 and L(p,q) are stabilized with a
// genus one diagram of S^3.
StandardDiagram build_standard_diagram(const Manifold3& m);

}  // namespace gofk
