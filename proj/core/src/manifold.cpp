#include "gofk/manifold.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <utility>

#include "gofk/error.hpp"

namespace gofk {

Int mod_floor(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

Int q_inverse(Int p, Int q) {
  if (p < 2) throw DomainError("q_inverse: p must be >= 2, got " + std::to_string(p));
  // Extended Euclid on (q mod p, p).
  Int old_r = mod_floor(q, p), r = p;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int quot = old_r / r;
    old_r = std::exchange(r, old_r - quot * r);
    old_s = std::exchange(s, old_s - quot * s);
  }
  if (old_r != 1)
    throw DomainError("q_inverse: gcd(" + std::to_string(p) + "," + std::to_string(q) + ") != 1");
  return mod_floor(old_s, p);
}

Piece Piece::mirror() const {
  if (kind != Kind::Lens) return *this;
  return {Kind::Lens, p, p - q};
}

std::string Piece::str() const {
  switch (kind) {
    case Kind::S3: return "S3";
    case Kind::S2xS1: return "S2xS1";
    case Kind::Lens: return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
  return "?";
}

Manifold3::Manifold3(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  std::sort(pieces_.begin(), pieces_.end());
}

Manifold3 Manifold3::s3() { return Manifold3({Piece{}}); }

Manifold3 Manifold3::s2xs1() { return Manifold3({Piece{Piece::Kind::S2xS1, 0, 1}}); }

Manifold3 Manifold3::lens(Int p, Int q) {
  if (p < 0) {
    p = -p;
    q = -q;
  }
  if (std::gcd(p, q) != 1)
    throw DomainError("lens space parameters (" + std::to_string(p) + "," + std::to_string(q) +
                      ") are not coprime");
  if (p == 0) return s2xs1();
  if (p == 1) return s3();
  return Manifold3({Piece{Piece::Kind::Lens, p, mod_floor(q, p)}});
}

Manifold3 Manifold3::sum(const Manifold3& a, const Manifold3& b) {
  std::vector<Piece> pieces;
  for (const auto* m : {&a, &b})
    for (const auto& piece : m->pieces())
      if (piece.kind != Piece::Kind::S3) pieces.push_back(piece);
  if (pieces.size() > 2)
    throw DomainError("connected sums of more than two summands are out of scope");
  if (pieces.empty()) return s3();
  return Manifold3(std::move(pieces));
}

namespace {

Manifold3 parse_prime(std::string_view t, std::string_view whole) {
  if (t == "S3") return Manifold3::s3();
  if (t == "S2xS1") return Manifold3::s2xs1();
  auto fail = [&] { return ParseError("malformed manifold \"" + std::string(whole) + "\""); };
  if (t.size() < 6 || t.substr(0, 2) != "L(" || t.back() != ')') throw fail();
  const auto body = t.substr(2, t.size() - 3);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw fail();
  auto num = [&](std::string_view s) {
    Int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw fail();
    return v;
  };
  return Manifold3::lens(num(body.substr(0, comma)), num(body.substr(comma + 1)));
}

}  // namespace

Manifold3 Manifold3::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  std::vector<std::string_view> parts;
  std::string_view rest(s);
  while (true) {
    const auto hash = rest.find('#');
    parts.push_back(rest.substr(0, hash));
    if (hash == std::string_view::npos) break;
    rest.remove_prefix(hash + 1);
  }
  if (parts.size() > 2)
    throw DomainError("connected sums of more than two summands are out of scope: " +
                      std::string(text));
  Manifold3 m = parse_prime(parts[0], text);
  if (parts.size() == 2) m = sum(m, parse_prime(parts[1], text));
  return m;
}

Manifold3 Manifold3::mirror() const {
  std::vector<Piece> out;
  for (const auto& p : pieces_) out.push_back(p.mirror());
  return Manifold3(std::move(out));
}

std::string Manifold3::str() const {
  std::string out = pieces_[0].str();
  for (std::size_t i = 1; i < pieces_.size(); ++i) out += "#" + pieces_[i].str();
  return out;
}

std::ostream& operator<<(std::ostream& os, const Manifold3& m) { return os << m.str(); }

Int canonical_lens_q(Int p, Int q) {
  const Int qi = q_inverse(p, q);
  const Int r = mod_floor(q, p);
  return std::min({r, p - r, qi, p - qi});
}

Int canonical_oriented_lens_q(Int p, Int q) {
  return std::min(mod_floor(q, p), q_inverse(p, q));
}

namespace {

Piece oriented_canonical(const Piece& piece) {
  if (!piece.is_lens()) return piece;
  return {Piece::Kind::Lens, piece.p, canonical_oriented_lens_q(piece.p, piece.q)};
}

std::vector<Piece> oriented_canonical(const std::vector<Piece>& pieces) {
  std::vector<Piece> out;
  for (const auto& p : pieces) out.push_back(oriented_canonical(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_homeomorphic(const Manifold3& m1, const Manifold3& m2, bool oriented) {
  // Prime decompositions are unique up to orientation-preserving homeomorphism
  // of the summands, so compare the multisets of oriented canonical summands.
  const auto a = oriented_canonical(m1.pieces());
  if (a == oriented_canonical(m2.pieces())) return true;
  if (oriented) return false;
  return a == oriented_canonical(m2.mirror().pieces());
}

}  // namespace gofk
