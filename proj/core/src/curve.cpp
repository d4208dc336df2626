#include "gofk/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gofk/error.hpp"

namespace gofk {

NormalCurve NormalCurve::reversed() const {
  std::vector<Transit> out;
  out.reserve(transits_.size());
  for (auto it = transits_.rbegin(); it != transits_.rend(); ++it) out.push_back(it->reversed());
  return NormalCurve(std::move(out));
}

namespace {

std::vector<Transit> least_rotation(const std::vector<Transit>& v) {
  const std::size_t n = v.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto cmp = v[(r + k) % n] <=> v[(best + k) % n];
      if (cmp != 0) {
        if (cmp < 0) best = r;
        break;
      }
    }
  }
  std::vector<Transit> out(v.begin() + static_cast<std::ptrdiff_t>(best), v.end());
  out.insert(out.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(best));
  return out;
}

}  // namespace

NormalCurve NormalCurve::canonical() const {
  auto fwd = least_rotation(transits_);
  auto bwd = least_rotation(reversed().transits_);
  return NormalCurve(std::min(fwd, bwd));
}

std::vector<int> edge_weights(const NormalCurve& c, const StandardDiagram& d) {
  std::vector<int> w(d.edges().size(), 0);
  for (const auto& t : c.transits()) {
    if (t.cell < 0 || static_cast<std::size_t>(t.cell) >= d.cells().size())
      throw DomainError("transit refers to missing cell " + std::to_string(t.cell));
    const auto& sides = d.cells()[t.cell].sides;
    if (t.out_side < 0 || static_cast<std::size_t>(t.out_side) >= sides.size())
      throw DomainError("transit refers to missing side " + std::to_string(t.out_side));
    ++w[sides[t.out_side].edge];
  }
  return w;
}

void validate(const NormalCurve& c, const StandardDiagram& d) {
  const auto& ts = c.transits();
  const std::size_t n = ts.size();
  if (n == 0) return;
  const auto w = edge_weights(c, d);
  auto where = [](std::size_t i) { return "transit " + std::to_string(i) + ": "; };

  std::map<SideRef, std::vector<int>> used;
  for (std::size_t i = 0; i < n; ++i) {
    const Transit& t = ts[i];
    const int nsides = static_cast<int>(d.cells()[t.cell].sides.size());
    if (t.in_side < 0 || t.in_side >= nsides) throw DomainError(where(i) + "entry side out of range");
    if (t.in_side == t.out_side) throw DomainError(where(i) + "returns to its entry side");
    const SideRef in{t.cell, t.in_side};
    const SideRef out{t.cell, t.out_side};
    const int win = w[d.side(in).edge];
    const int wout = w[d.side(out).edge];
    if (t.in_slot < 0 || t.in_slot >= win || t.out_slot < 0 || t.out_slot >= wout)
      throw DomainError(where(i) + "slot out of range");
    used[in].push_back(t.in_slot);
    used[out].push_back(t.out_slot);

    const Transit& next = ts[(i + 1) % n];
    const SideRef across = d.paired(out);
    if (next.cell != across.cell || next.in_side != across.side || next.in_slot != wout - 1 - t.out_slot)
      throw DomainError(where(i) + "exit does not match the entry of the next transit");
  }
  for (auto& [ref, slots] : used) {
    std::sort(slots.begin(), slots.end());
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (slots[k] != static_cast<int>(k))
        throw DomainError("side " + std::to_string(ref.side) + " of cell " + std::to_string(ref.cell) +
                          " has a repeated or missing slot");
  }

  // Chords in a cell are non-crossing iff their endpoints, read around the
  // boundary, nest like parentheses.
  std::vector<std::vector<std::pair<int, int>>> ends(d.cells().size());
  for (std::size_t i = 0; i < n; ++i) {
    const Transit& t = ts[i];
    const auto& sides = d.cells()[t.cell].sides;
    auto position = [&](int side, int slot) {
      int pos = slot;
      for (int k = 0; k < side; ++k) pos += w[sides[k].edge];
      return pos;
    };
    ends[t.cell].push_back({position(t.in_side, t.in_slot), static_cast<int>(i)});
    ends[t.cell].push_back({position(t.out_side, t.out_slot), static_cast<int>(i)});
  }
  for (std::size_t cell = 0; cell < ends.size(); ++cell) {
    auto& e = ends[cell];
    std::sort(e.begin(), e.end());
    std::vector<int> stack;
    for (const auto& [pos, chord] : e) {
      if (!stack.empty() && stack.back() == chord) stack.pop_back();
      else stack.push_back(chord);
    }
    if (!stack.empty()) throw DomainError("chords cross in cell " + std::to_string(cell));
  }
}

CyclicWord read_word(const NormalCurve& c, const StandardDiagram& d, System s, const ReadOptions& opts) {
  const NormalCurve path = opts.reverse ? c.reversed() : c;
  std::vector<Letter> letters;
  for (const auto& t : path.transits()) {
    const SideRef exit{t.cell, t.out_side};
    const auto gen = d.edge_of(exit).letter(s);
    if (!gen) continue;
    int sign = -d.side(exit).dir;
    if ((*gen == Gen::First && opts.flip_first) || (*gen == Gen::Second && opts.flip_second)) sign = -sign;
    letters.push_back(Letter{*gen, static_cast<std::int8_t>(sign)});
  }
  return CyclicWord(std::move(letters));
}

GofVerdict is_gof(const NormalCurve& c, const StandardDiagram& d) {
  GofVerdict v;
  v.v_word = read_word(c, d, System::V);
  v.w_word = read_word(c, d, System::W);
  v.gof = is_commutator_class(v.v_word) && is_commutator_class(v.w_word);
  return v;
}

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

struct Chord {
  int cell;
  SideRef a;
  int a_slot;
  SideRef b;
  int b_slot;
};

// Euler characteristic of each component of the diagram surface with the
// interiors of the removed edges deleted and then cut along the chords.  Each
// cell splits into disks along its chords; boundary segments of glued edges
// between consecutive chord endpoints pair up across the edge.  Boundary
// circles alternate between arcs and points and contribute nothing, so a
// component has chi = disks - glued segments + vertices off removed edges.
std::vector<int> cut_euler(const StandardDiagram& d, const std::vector<bool>& removed,
                           const std::vector<Chord>& chords) {
  // Compact slot numbering of the chord endpoints on every side.
  std::map<SideRef, std::vector<int>> slots;
  for (const auto& ch : chords) {
    slots[ch.a].push_back(ch.a_slot);
    slots[ch.b].push_back(ch.b_slot);
  }
  for (auto& [ref, v] : slots) std::sort(v.begin(), v.end());
  auto count = [&](SideRef r) {
    auto it = slots.find(r);
    return it == slots.end() ? 0 : static_cast<int>(it->second.size());
  };
  auto index = [&](SideRef r, int slot) {
    const auto& v = slots.at(r);
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), slot) - v.begin());
  };

  const std::size_t ncells = d.cells().size();
  std::vector<std::vector<int>> offset(ncells);
  std::vector<int> npoints(ncells, 0);
  for (std::size_t c = 0; c < ncells; ++c) {
    for (std::size_t k = 0; k < d.cells()[c].sides.size(); ++k) {
      offset[c].push_back(npoints[c]);
      npoints[c] += count({static_cast<int>(c), static_cast<int>(k)});
    }
  }

  // Regions are unions of gaps; gap g of a cell lies between points g and g+1.
  std::vector<std::size_t> gap_base(ncells + 1, 0);
  for (std::size_t c = 0; c < ncells; ++c) gap_base[c + 1] = gap_base[c] + std::max(npoints[c], 1);
  UnionFind regions(gap_base[ncells]);
  for (const auto& ch : chords) {
    const int n = npoints[ch.cell];
    const int p = offset[ch.cell][ch.a.side] + index(ch.a, ch.a_slot);
    const int q = offset[ch.cell][ch.b.side] + index(ch.b, ch.b_slot);
    auto gap = [&](int g) { return gap_base[ch.cell] + static_cast<std::size_t>((g % n + n) % n); };
    regions.unite(gap(p - 1), gap(q));
    regions.unite(gap(q - 1), gap(p));
  }
  auto region_of_interval = [&](SideRef r, int j) {
    const int n = npoints[r.cell];
    if (n == 0) return regions.find(gap_base[r.cell]);
    const int g = offset[r.cell][r.side] + j - 1;
    return regions.find(gap_base[r.cell] + static_cast<std::size_t>((g % n + n) % n));
  };

  UnionFind comps(gap_base[ncells]);
  std::vector<int> glued(gap_base[ncells], 0);
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    if (removed[e]) continue;
    const SideRef pos = d.positive_side(static_cast<int>(e));
    const SideRef neg = d.negative_side(static_cast<int>(e));
    const int m = count(pos);
    if (m != count(neg)) throw DomainError("cut: unmatched crossings on edge " + d.edges()[e].label);
    for (int j = 0; j <= m; ++j) {
      const auto r1 = region_of_interval(pos, j);
      comps.unite(r1, region_of_interval(neg, m - j));
      ++glued[r1];
    }
  }

  std::vector<bool> on_removed(static_cast<std::size_t>(d.vertex_count()), false);
  std::vector<std::optional<SideRef>> corner(static_cast<std::size_t>(d.vertex_count()));
  for (std::size_t c = 0; c < ncells; ++c) {
    const auto& sides = d.cells()[c].sides;
    for (std::size_t k = 0; k < sides.size(); ++k) {
      const SideRef r{static_cast<int>(c), static_cast<int>(k)};
      const SideRef next{static_cast<int>(c), static_cast<int>((k + 1) % sides.size())};
      const auto v0 = static_cast<std::size_t>(d.start_vertex(r));
      const auto v1 = static_cast<std::size_t>(d.start_vertex(next));
      if (removed[sides[k].edge]) on_removed[v0] = on_removed[v1] = true;
      if (!corner[v0]) corner[v0] = r;
    }
  }

  std::map<std::size_t, int> chi;
  for (std::size_t g = 0; g < gap_base[ncells]; ++g) {
    if (regions.find(g) != g) continue;
    chi[comps.find(g)] += 1 - glued[g];
  }
  for (std::size_t v = 0; v < on_removed.size(); ++v)
    if (!on_removed[v]) chi[comps.find(region_of_interval(*corner[v], 0))] += 1;

  std::vector<int> out;
  for (const auto& [root, x] : chi) out.push_back(x);
  return out;
}

std::vector<Chord> chords_of(const std::vector<Transit>& ts) {
  std::vector<Chord> out;
  out.reserve(ts.size());
  for (const auto& t : ts)
    out.push_back({t.cell, {t.cell, t.in_side}, t.in_slot, {t.cell, t.out_side}, t.out_slot});
  return out;
}

}  // namespace

std::vector<int> complement_euler_characteristics(const NormalCurve& c, const StandardDiagram& d) {
  return cut_euler(d, std::vector<bool>(d.edges().size(), false), chords_of(c.transits()));
}

bool is_essential(const NormalCurve& c, const StandardDiagram& d) {
  if (c.empty()) return false;
  const auto chi = complement_euler_characteristics(c, d);
  return std::none_of(chi.begin(), chi.end(), [](int x) { return x == 1; });
}

bool is_minimal(const NormalCurve& c, const StandardDiagram& d, System s) {
  const auto& ts = c.transits();
  const std::size_t n = ts.size();
  std::vector<bool> removed(d.edges().size());
  for (std::size_t e = 0; e < removed.size(); ++e) removed[e] = d.edges()[e].letter(s).has_value();

  struct Crossing {
    std::size_t after;
    Letter letter;
  };
  std::vector<Crossing> crossings;
  for (std::size_t i = 0; i < n; ++i) {
    const SideRef exit{ts[i].cell, ts[i].out_side};
    if (auto g = d.edge_of(exit).letter(s))
      crossings.push_back({i, Letter{*g, static_cast<std::int8_t>(-d.side(exit).dir)}});
  }
  const std::size_t k = crossings.size();
  if (k < 2) return true;
  for (std::size_t i = 0; i < k; ++i) {
    const Crossing& a = crossings[i];
    const Crossing& b = crossings[(i + 1) % k];
    if (!a.letter.cancels(b.letter)) continue;
    // The arc of the curve strictly between the two crossings.
    std::vector<Transit> arc;
    std::size_t t = (a.after + 1) % n;
    while (true) {
      arc.push_back(ts[t]);
      if (t == b.after) break;
      t = (t + 1) % n;
    }
    const auto chi = cut_euler(d, removed, chords_of(arc));
    if (std::any_of(chi.begin(), chi.end(), [](int x) { return x == 1; })) return false;
  }
  return true;
}

}  // namespace gofk
