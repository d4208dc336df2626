#pragma once

// Simple closed curves in normal position on a standard diagram.
//
// A curve is a cyclic sequence of transits.  A transit crosses one cell from
// a strand slot on its entry side to a slot on its exit side.  Slots on a side
// are numbered counter-clockwise around the cell, so slot i of a side with w
// strands is slot w-1-i on the paired side.

#include <compare>
#include <cstddef>
#include <vector>

#include "gofk/diagram.hpp"
#include "gofk/words.hpp"

namespace gofk {

struct Transit {
  int cell = 0;
  int in_side = 0;
  int in_slot = 0;
  int out_side = 0;
  int out_slot = 0;

  Transit reversed() const { return {cell, out_side, out_slot, in_side, in_slot}; }

  friend bool operator==(const Transit&, const Transit&) = default;
  friend auto operator<=>(const Transit&, const Transit&) = default;
};

class NormalCurve {
 public:
  NormalCurve() = default;
  explicit NormalCurve(std::vector<Transit> transits) : transits_(std::move(transits)) {}

  const std::vector<Transit>& transits() const { return transits_; }
  std::size_t size() const { return transits_.size(); }
  bool empty() const { return transits_.empty(); }

  NormalCurve reversed() const;
  // Least transit sequence over all rotations and both orientations.
  NormalCurve canonical() const;

  friend bool operator==(const NormalCurve&, const NormalCurve&) = default;
  friend auto operator<=>(const NormalCurve&, const NormalCurve&) = default;

 private:
  std::vector<Transit> transits_;
};

// Throws DomainError unless the curve closes up consistently, uses every slot
// of every side exactly once, has no chord returning to its entry side, and
// has no two interleaving chords in any cell.
void validate(const NormalCurve& c, const StandardDiagram& d);

// Number of strands through each edge.
std::vector<int> edge_weights(const NormalCurve& c, const StandardDiagram& d);

struct ReadOptions {
  bool reverse = false;
  bool flip_first = false;
  bool flip_second = false;
};

// One letter per crossing of an edge of the chosen system, starting after the
// first transit.  Crossing an edge from the cell where it runs clockwise into
// the cell where it runs counter-clockwise reads the letter with sign +1.
CyclicWord read_word(const NormalCurve& c, const StandardDiagram& d, System s,
                     const ReadOptions& opts = {});

struct GofVerdict {
  bool gof = false;
  CyclicWord v_word;
  CyclicWord w_word;
};

// Both words reduce to the commutator shape.
GofVerdict is_gof(const NormalCurve& c, const StandardDiagram& d);

// Euler characteristics of the components of the surface cut along the curve.
std::vector<int> complement_euler_characteristics(const NormalCurve& c, const StandardDiagram& d);

// The curve bounds no disk.  The empty curve is not essential.
bool is_essential(const NormalCurve& c, const StandardDiagram& d);

// No bigon between the curve and the curves of the given system.
bool is_minimal(const NormalCurve& c, const StandardDiagram& d, System s);

}  // namespace gofk
