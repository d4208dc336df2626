#pragma once

// Fibered annuli (k-Hopf bands) and their plumbing into once-punctured tori.

#include <compare>
#include <vector>

#include "gofk/gl2z.hpp"
#include "gofk/manifold.hpp"

namespace gofk {

// Annulus whose monodromy is k Dehn twists along the core curve.
struct FiberedAnnulus {
  Int twist = 0;

  // k = 0: S^2xS^1; k = +-1: S^3; |k| >= 2: L(|k|, sign k).
  Manifold3 ambient() const;

  friend bool operator==(const FiberedAnnulus&, const FiberedAnnulus&) = default;
  friend auto operator<=>(const FiberedAnnulus&, const FiberedAnnulus&) = default;
};

struct PlumbingRecipe {
  FiberedAnnulus first;
  FiberedAnnulus second;

  friend bool operator==(const PlumbingRecipe&, const PlumbingRecipe&) = default;
  friend auto operator<=>(const PlumbingRecipe&, const PlumbingRecipe&) = default;
};

// All fibered annuli in a manifold with a genus one splitting, sorted by twist.
// Empty for lens spaces L(p,q) with q != +-1 mod p and for sums.
std::vector<FiberedAnnulus> annuli_in(const Manifold3& m);

// [[1, k1], [k2, 1 + k1 k2]].
MatZ2 plumb_monodromy(const PlumbingRecipe& r);
MatZ2 plumb_monodromy(Int k1, Int k2);

Manifold3 plumb_ambient(const PlumbingRecipe& r);

}  // namespace gofk
