#include "gofk/plumbing.hpp"

namespace gofk {

Manifold3 FiberedAnnulus::ambient() const {
  if (twist == 0) return Manifold3::s2xs1();
  if (twist == 1 || twist == -1) return Manifold3::s3();
  return Manifold3::lens(twist < 0 ? -twist : twist, twist < 0 ? -1 : 1);
}

std::vector<FiberedAnnulus> annuli_in(const Manifold3& m) {
  if (m.is_s3()) return {{-1}, {1}};
  if (m.is_s2xs1()) return {{0}};
  if (!m.is_lens()) return {};
  const Piece& l = m.pieces()[0];
  if (l.p == 2) return {{-2}, {2}};
  if (l.q == 1) return {{l.p}};
  if (l.q == l.p - 1) return {{-l.p}};
  return {};
}

MatZ2 plumb_monodromy(Int k1, Int k2) { return {1, k1, k2, 1 + k1 * k2}; }

MatZ2 plumb_monodromy(const PlumbingRecipe& r) {
  return plumb_monodromy(r.first.twist, r.second.twist);
}

Manifold3 plumb_ambient(const PlumbingRecipe& r) {
  return Manifold3::sum(r.first.ambient(), r.second.ambient());
}

}  // namespace gofk
