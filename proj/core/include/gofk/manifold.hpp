#pragma once

// Closed 3-manifolds admitting a reducible genus two Heegaard splitting:
// S^3, S^2xS^1, lens spaces, and connected sums of two of those.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gofk {

using Int = std::int64_t;

// Least non-negative q' with q*q' = 1 mod p.  Requires p >= 2 and gcd(p,q) = 1.
Int q_inverse(Int p, Int q);

Int mod_floor(Int a, Int m);

struct Piece {
  enum class Kind : std::uint8_t { S3, S2xS1, Lens };
  Kind kind = Kind::S3;
  Int p = 1;  // Lens: p >= 2
  Int q = 0;  // Lens: 0 < q < p, gcd(p, q) = 1

  bool is_lens() const { return kind == Kind::Lens; }
  // Orientation reversal; L(p,q) -> L(p,p-q).
  Piece mirror() const;
  std::string str() const;

  friend bool operator==(const Piece&, const Piece&) = default;
  friend auto operator<=>(const Piece&, const Piece&) = default;
};

class Manifold3 {
 public:
  static Manifold3 s3();
  static Manifold3 s2xs1();
  // Normalizes: p = 1 gives S^3, p = 0 (q = +-1) gives S^2xS^1, negative p is
  // flipped, q is reduced into (0, p).  Throws DomainError if gcd(p,q) != 1.
  static Manifold3 lens(Int p, Int q);
  // S^3 summands are dropped.  Throws DomainError for more than two
  // non-trivial summands.
  static Manifold3 sum(const Manifold3& a, const Manifold3& b);
  // "S3", "S2xS1", "L(p,q)", "A#B".
  static Manifold3 parse(std::string_view text);

  // One or two prime pieces, sorted; a lone S^3 is represented as {S3}.
  const std::vector<Piece>& pieces() const { return pieces_; }
  bool is_sum() const { return pieces_.size() == 2; }
  bool is_s3() const { return pieces_.size() == 1 && pieces_[0].kind == Piece::Kind::S3; }
  bool is_s2xs1() const { return pieces_.size() == 1 && pieces_[0].kind == Piece::Kind::S2xS1; }
  bool is_lens() const { return pieces_.size() == 1 && pieces_[0].is_lens(); }

  Manifold3 mirror() const;
  std::string str() const;

  friend bool operator==(const Manifold3&, const Manifold3&) = default;
  friend auto operator<=>(const Manifold3&, const Manifold3&) = default;

 private:
  explicit Manifold3(std::vector<Piece> pieces);
  std::vector<Piece> pieces_;
};

std::ostream& operator<<(std::ostream& os, const Manifold3& m);

// Representative of L(p,q) under unoriented homeomorphism:
// min{q, p-q, q', p-q'}.
Int canonical_lens_q(Int p, Int q);
// Representative under orientation-preserving homeomorphism: min{q, q'}.
Int canonical_oriented_lens_q(Int p, Int q);

// L(p,q) ~ L(p,r) iff r = +-q^{+-1} mod p (oriented: r = q^{+-1}).  Sums are
// compared summand-wise; the unoriented test also allows mirroring the whole
// sum at once.
bool is_homeomorphic(const Manifold3& m1, const Manifold3& m2, bool oriented = false);

}  // namespace gofk
