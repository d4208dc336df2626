#pragma once

// Lens space families and the census of genus one fibered knots in manifolds
// with reducible genus two Heegaard splittings.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gofk/gl2z.hpp"
#include "gofk/manifold.hpp"
#include "gofk/plumbing.hpp"

namespace gofk {

struct FamilyTag {
  enum class Kind { None, PlusMinusOne, Odd, OddShifted, Four };
  Kind kind = Kind::None;
  // (a, b) for Odd (p = 2ab+a+b) and OddShifted (p = 2ab+a+b+1).
  Int a = 0;
  Int b = 0;

  // "i", "ii", "iii", "iv" or "none".
  std::string roman() const;
  std::string str() const;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Requires p >= 2 and gcd(p, q) = 1, else DomainError.  Families are tried in
// the order iv, i, ii, iii, and within ii/iii the smallest a wins.
FamilyTag lens_family(Int p, Int q);

struct CensusEntry {
  std::optional<PlumbingRecipe> recipe;  // absent for knots given by an explicit curve
  std::optional<MatZ2> monodromy;
  std::string figure;  // fixture key, e.g. "fig16"

  std::string descriptor() const;
  std::optional<MonodromyType> type() const;
};

// Empty when the manifold has no such knot.  Throws DomainError outside scope.
std::vector<CensusEntry> gof_census(const Manifold3& m);
std::size_t gof_count(const Manifold3& m);

}  // namespace gofk
