#include "gofk/diagram.hpp"

#include <numeric>

#include "gofk/error.hpp"

namespace gofk {

std::string_view to_string(System s) { return s == System::V ? "V" : "W"; }

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Union-find node of an edge endpoint: 2e is the tail, 2e+1 the head.
std::size_t start_node(const Side& s) { return 2 * static_cast<std::size_t>(s.edge) + (s.dir > 0 ? 0 : 1); }
std::size_t end_node(const Side& s) { return 2 * static_cast<std::size_t>(s.edge) + (s.dir > 0 ? 1 : 0); }

}  // namespace

StandardDiagram::StandardDiagram(Manifold3 manifold, std::vector<Edge> edges, std::vector<Cell> cells)
    : manifold_(std::move(manifold)), edges_(std::move(edges)), cells_(std::move(cells)) {
  const std::size_t ne = edges_.size();
  if (cells_.empty()) throw DomainError("diagram has no cells");
  std::vector<std::array<std::optional<SideRef>, 2>> occ(ne);
  for (int c = 0; c < static_cast<int>(cells_.size()); ++c) {
    if (cells_[c].sides.empty()) throw DomainError("diagram cell " + std::to_string(c) + " has no sides");
    for (int k = 0; k < static_cast<int>(cells_[c].sides.size()); ++k) {
      const Side& s = cells_[c].sides[k];
      if (s.edge < 0 || static_cast<std::size_t>(s.edge) >= ne || (s.dir != 1 && s.dir != -1))
        throw DomainError("diagram cell " + std::to_string(c) + " has a malformed side");
      auto& slot = occ[s.edge][s.dir > 0 ? 0 : 1];
      if (slot) throw DomainError("edge " + edges_[s.edge].label + " is used twice in one direction");
      slot = SideRef{c, k};
    }
  }
  occurrences_.reserve(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    if (!occ[e][0] || !occ[e][1])
      throw DomainError("edge " + edges_[e].label + " is not glued on both sides");
    occurrences_.push_back({*occ[e][0], *occ[e][1]});
  }

  UnionFind corners(2 * ne);
  UnionFind pieces(cells_.size());
  for (const auto& cell : cells_) {
    const std::size_t n = cell.sides.size();
    for (std::size_t k = 0; k < n; ++k)
      corners.unite(end_node(cell.sides[(k + n - 1) % n]), start_node(cell.sides[k]));
  }
  for (std::size_t e = 0; e < ne; ++e)
    pieces.unite(static_cast<std::size_t>(occurrences_[e][0].cell),
                 static_cast<std::size_t>(occurrences_[e][1].cell));
  for (std::size_t c = 1; c < cells_.size(); ++c)
    if (pieces.find(c) != pieces.find(0)) throw DomainError("diagram is not connected");

  std::vector<int> id(2 * ne, -1);
  corner_vertex_.resize(cells_.size());
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    for (const auto& s : cells_[c].sides) {
      const std::size_t root = corners.find(start_node(s));
      if (id[root] < 0) id[root] = vertex_count_++;
      corner_vertex_[c].push_back(id[root]);
    }
  }
  if (euler_characteristic() != -2)
    throw DomainError("diagram surface has Euler characteristic " +
                      std::to_string(euler_characteristic()) + ", expected -2");
}

SideRef StandardDiagram::paired(SideRef r) const {
  const Side& s = side(r);
  return occurrences_[s.edge][s.dir > 0 ? 1 : 0];
}

int StandardDiagram::start_vertex(SideRef r) const { return corner_vertex_[r.cell][r.side]; }

int StandardDiagram::euler_characteristic() const {
  return vertex_count_ - static_cast<int>(edges_.size()) + static_cast<int>(cells_.size());
}

std::string StandardDiagram::carrier_tag(SideRef r) const {
  const Edge& e = edge_of(r);
  auto name = [](Gen g) { return g == Gen::First ? std::string("d") : std::string("e"); };
  std::string tag;
  if (e.v_letter) tag = name(*e.v_letter) + (side(r).dir > 0 ? "+" : "-");
  if (e.w_letter) tag += (tag.empty() ? "" : "/") + name(*e.w_letter) + "'";
  return tag.empty() ? "free" : tag;
}

namespace {

struct GenusOnePiece {
  std::vector<Edge> edges;
  std::vector<Cell> cells;
};

std::string letter_name(Gen g) { return g == Gen::First ? "d" : "e"; }

// Torus cut by a meridian of each side meeting p times.  Cell i is bounded by
// arcs alpha_i (bottom), beta_{i+1} (right), alpha_{i-q} (top), beta_i (left),
// so the bottom of cell i is glued to the top of cell i+q.
GenusOnePiece lens_piece(Int p, Int q, Gen g) {
  GenusOnePiece out;
  const std::string v = letter_name(g);
  for (Int i = 0; i < p; ++i) out.edges.push_back({v + std::to_string(i), g, std::nullopt});
  for (Int i = 0; i < p; ++i) out.edges.push_back({v + "'" + std::to_string(i), std::nullopt, g});
  const int ip = static_cast<int>(p);
  for (int i = 0; i < ip; ++i) {
    const int top = static_cast<int>(mod_floor(i - q, p));
    out.cells.push_back(Cell{{{i, 1}, {ip + (i + 1) % ip, 1}, {top, -1}, {ip + i, -1}}});
  }
  return out;
}

// Torus on which both meridians are the same curve.
GenusOnePiece handle_piece(Gen g) {
  GenusOnePiece out;
  out.edges.push_back({letter_name(g), g, g});
  out.edges.push_back({"h" + letter_name(g), std::nullopt, std::nullopt});
  out.cells.push_back(Cell{{{0, 1}, {1, 1}, {0, -1}, {1, -1}}});
  return out;
}

GenusOnePiece piece_for(const Piece& piece, Gen g) {
  switch (piece.kind) {
    case Piece::Kind::S3: return lens_piece(1, 0, g);
    case Piece::Kind::S2xS1: return handle_piece(g);
    case Piece::Kind::Lens: return lens_piece(piece.p, piece.q, g);
  }
  throw DomainError("unknown piece");
}

// Joins the first cells of both pieces by a tube, cut open along a free edge.
StandardDiagram connect(const Manifold3& m, const GenusOnePiece& a, const GenusOnePiece& b) {
  std::vector<Edge> edges = a.edges;
  const int shift = static_cast<int>(a.edges.size());
  edges.insert(edges.end(), b.edges.begin(), b.edges.end());
  const int tube = static_cast<int>(edges.size());
  edges.push_back({"s", std::nullopt, std::nullopt});

  auto shifted = [&](const Cell& c) {
    Cell out = c;
    for (auto& s : out.sides) s.edge += shift;
    return out;
  };
  Cell merged = a.cells[0];
  merged.sides.push_back({tube, 1});
  const Cell b0 = shifted(b.cells[0]);
  merged.sides.insert(merged.sides.end(), b0.sides.begin(), b0.sides.end());
  merged.sides.push_back({tube, -1});

  std::vector<Cell> cells{merged};
  cells.insert(cells.end(), a.cells.begin() + 1, a.cells.end());
  for (std::size_t i = 1; i < b.cells.size(); ++i) cells.push_back(shifted(b.cells[i]));
  return StandardDiagram(m, std::move(edges), std::move(cells));
}

}  // namespace

StandardDiagram build_standard_diagram(const Manifold3& m) {
  const auto& pieces = m.pieces();
  if (pieces.size() == 2) {
    // Lens summands first so that x and x' belong to a lens space when there is one.
    const bool swap = !pieces[0].is_lens() && pieces[1].is_lens();
    const Piece& first = swap ? pieces[1] : pieces[0];
    const Piece& second = swap ? pieces[0] : pieces[1];
    return connect(m, piece_for(first, Gen::First), piece_for(second, Gen::Second));
  }
  const Piece& only = pieces[0];
  if (only.kind == Piece::Kind::S3)
    return connect(m, lens_piece(1, 0, Gen::First), lens_piece(1, 0, Gen::Second));
  return connect(m, piece_for(only, Gen::First), lens_piece(1, 0, Gen::Second));
}

}  // namespace gofk
