#pragma once

// 2x2 integer matrices of determinant +-1 and conjugacy in GL(2,Z).

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

namespace gofk {

class MatZ2 {
 public:
  using Int = std::int64_t;

  // Throws DomainError unless a*d - b*c is +1 or -1.
  MatZ2(Int a, Int b, Int c, Int d);

  static MatZ2 identity() { return {1, 0, 0, 1}; }
  // Parses "[[a,b],[c,d]]"; whitespace is ignored.
  static MatZ2 parse(std::string_view text);

  Int a() const { return a_; }
  Int b() const { return b_; }
  Int c() const { return c_; }
  Int d() const { return d_; }

  Int det() const { return a_ * d_ - b_ * c_; }
  Int trace() const { return a_ + d_; }
  Int max_abs_entry() const;

  MatZ2 inverse() const;
  MatZ2 operator*(const MatZ2& rhs) const;

  std::string str() const;

  friend bool operator==(const MatZ2&, const MatZ2&) = default;
  friend auto operator<=>(const MatZ2&, const MatZ2&) = default;

 private:
  Int a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const MatZ2& m);

inline MatZ2 mul(const MatZ2& x, const MatZ2& y) { return x * y; }
inline MatZ2 inverse(const MatZ2& x) { return x.inverse(); }
inline MatZ2::Int trace(const MatZ2& x) { return x.trace(); }
inline MatZ2::Int det(const MatZ2& x) { return x.det(); }

// Dynamical type of an orientation-preserving torus monodromy.
enum class MonodromyType { FiniteOrder, Parabolic, Anosov };

std::string_view to_string(MonodromyType t);

// |trace| < 2 finite order, = 2 parabolic/reducible, > 2 Anosov.
// Throws DomainError for det = -1.
MonodromyType classify_type(const MatZ2& m);

struct Conjugate {
  MatZ2 witness;  // witness * A * witness^-1 == B
};
struct NotConjugate {
  std::string invariant;  // "det", "trace" or "content"
  MatZ2::Int lhs = 0;
  MatZ2::Int rhs = 0;
};
struct UnknownConjugacy {
  MatZ2::Int bound = 0;
};

using ConjugacyVerdict = std::variant<Conjugate, NotConjugate, UnknownConjugacy>;

inline constexpr MatZ2::Int kDefaultConjugacyBound = 16;

// Decides by det, trace and gcd(b, c, a-d) first; otherwise searches conjugators with entries in
// [-bound, bound] and both determinants.  Unknown if the search is exhausted.
ConjugacyVerdict is_conjugate_gl2z(const MatZ2& a, const MatZ2& b,
                                   MatZ2::Int search_bound = kDefaultConjugacyBound);

std::string describe(const ConjugacyVerdict& v);

// Independent check: enumerate every P with |entries| <= entry_bound and
// det +-1 in a fixed order, return the first with P*A == B*P.
std::optional<MatZ2> brute_force_conjugacy_oracle(const MatZ2& a, const MatZ2& b,
                                                  MatZ2::Int entry_bound);

}  // namespace gofk
