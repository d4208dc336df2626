#include "gofk/census.hpp"

#include <numeric>

#include "gofk/error.hpp"

namespace gofk {

std::string FamilyTag::roman() const {
  switch (kind) {
    case Kind::PlusMinusOne: return "i";
    case Kind::Odd: return "ii";
    case Kind::OddShifted: return "iii";
    case Kind::Four: return "iv";
    case Kind::None: break;
  }
  return "none";
}

std::string FamilyTag::str() const {
  if (kind == Kind::Odd || kind == Kind::OddShifted)
    return roman() + " (a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
  return roman();
}

namespace {

// Smallest a >= 1 with (2a+1)(2b+1) = n, b >= 1, 2a+1 = +-q^{+-1} mod p.
std::optional<std::pair<Int, Int>> odd_witness(Int n, Int p, Int q, bool skip_one_one) {
  const Int target = canonical_lens_q(p, q);
  for (Int s = 3; s * 3 <= n; s += 2) {
    if (n % s != 0) continue;
    const Int a = (s - 1) / 2;
    const Int b = (n / s - 1) / 2;
    if (skip_one_one && a == 1 && b == 1) continue;
    if (canonical_lens_q(p, s) == target) return std::pair{a, b};
  }
  return std::nullopt;
}

}  // namespace

FamilyTag lens_family(Int p, Int q) {
  if (p < 2 || std::gcd(p, q) != 1)
    throw DomainError("lens_family: invalid lens parameters (" + std::to_string(p) + "," +
                      std::to_string(q) + ")");
  if (p == 4) return {FamilyTag::Kind::Four};
  const Int r = mod_floor(q, p);
  if (r == 1 || r == p - 1) return {FamilyTag::Kind::PlusMinusOne};
  if (auto w = odd_witness(2 * p + 1, p, q, true)) return {FamilyTag::Kind::Odd, w->first, w->second};
  if (auto w = odd_witness(2 * p - 1, p, q, false))
    return {FamilyTag::Kind::OddShifted, w->first, w->second};
  return {};
}

std::string CensusEntry::descriptor() const {
  if (recipe)
    return "plumb(" + std::to_string(recipe->first.twist) + "," +
           std::to_string(recipe->second.twist) + ")";
  return "curve(" + figure + ")";
}

std::optional<MonodromyType> CensusEntry::type() const {
  if (!monodromy) return std::nullopt;
  return classify_type(*monodromy);
}

namespace {

CensusEntry plumbed(Int k1, Int k2, std::string figure) {
  const PlumbingRecipe r{{k1}, {k2}};
  return {r, plumb_monodromy(r), std::move(figure)};
}

// Signed twist of the unique annulus in L(p, +-1) for p >= 3; +p for p = 2.
std::optional<Int> hopf_twist(const Piece& l) {
  if (l.q == 1) return l.p;
  if (l.q == l.p - 1) return -l.p;
  return std::nullopt;
}

std::vector<CensusEntry> lens_census(const Piece& l) {
  const FamilyTag f = lens_family(l.p, l.q);
  switch (f.kind) {
    case FamilyTag::Kind::PlusMinusOne: {
      const Int k = *hopf_twist(l);
      return {plumbed(k, 1, "fig40"), plumbed(k, -1, "fig40")};
    }
    case FamilyTag::Kind::Four: {
      const Int k = *hopf_twist(l);
      return {plumbed(k, 1, "fig40"), plumbed(k, -1, "fig40"),
              {std::nullopt, MatZ2(-2, 3, -3, 4), "fig46"}};
    }
    case FamilyTag::Kind::Odd: return {{std::nullopt, std::nullopt, "fig46"}};
    case FamilyTag::Kind::OddShifted: return {{std::nullopt, std::nullopt, "fig47"}};
    case FamilyTag::Kind::None: break;
  }
  return {};
}

}  // namespace

std::vector<CensusEntry> gof_census(const Manifold3& m) {
  const auto& pieces = m.pieces();
  if (m.is_s3()) return {plumbed(1, -1, "fig35"), plumbed(1, 1, "fig35")};
  if (m.is_s2xs1()) return {plumbed(1, 0, "fig31")};
  if (m.is_lens()) return lens_census(pieces[0]);

  const Piece& u = pieces[0];
  const Piece& v = pieces[1];
  if (!u.is_lens() && !v.is_lens()) return {plumbed(0, 0, "fig10")};
  if (!u.is_lens() || !v.is_lens()) {
    const Piece& l = u.is_lens() ? u : v;
    if (auto k = hopf_twist(l)) return {plumbed(*k, 0, "fig16")};
    return {};
  }
  const auto k1 = hopf_twist(u);
  const auto k2 = hopf_twist(v);
  if (!k1 || !k2) return {};
  if (u.p == 2 || v.p == 2) {
    // The order-two summand carries both a +2 and a -2 Hopf band.
    const Int other = u.p == 2 ? *k2 : *k1;
    return {plumbed(other, 2, "fig27"), plumbed(other, -2, "fig27")};
  }
  return {plumbed(*k1, *k2, "fig27")};
}

std::size_t gof_count(const Manifold3& m) { return gof_census(m).size(); }

}  // namespace gofk
