#pragma once

// Exhaustive bounded enumeration of normal curves on a standard diagram.

#include <functional>
#include <vector>

#include "gofk/curve.hpp"
#include "gofk/diagram.hpp"

namespace gofk {

struct EnumerationOptions {
  // Total crossings with the four disk-system curves.  An edge on a curve of
  // both systems counts twice per strand.
  int max_crossings = 0;
  // Total crossings with free edges.  Twisting along the connected-sum sphere
  // or along a handle adds free crossings without changing any word, so this
  // bound is what keeps the enumeration finite.
  int max_free = 4;
  int jobs = 1;
  // Drop curves that bound a disk.
  bool essential_only = true;
};

// Visits every connected normal curve within the bounds, in canonical form.
// Visiting order depends only on the diagram and the bounds.
void for_each_curve(const StandardDiagram& d, const EnumerationOptions& opts,
                    const std::function<void(const NormalCurve&)>& visit);

// Sorted by canonical transit sequence; identical for every job count.
std::vector<NormalCurve> enumerate_curves(const StandardDiagram& d, const EnumerationOptions& opts);

// Enumerated curves on which is_gof holds.
std::vector<NormalCurve> search_gof(const StandardDiagram& d, const EnumerationOptions& opts);

}  // namespace gofk
