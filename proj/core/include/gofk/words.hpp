#pragma once

// Words in the free group of rank two, read off from the intersections of a
// curve with a pair of meridian disks.  Words are kept unreduced until a
// reduction is requested explicitly.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gofk {

enum class Gen : std::uint8_t { First = 0, Second = 1 };

constexpr Gen other(Gen g) { return g == Gen::First ? Gen::Second : Gen::First; }

struct Letter {
  Gen gen = Gen::First;
  std::int8_t sign = 1;  // +1 or -1

  constexpr Letter inverse() const { return {gen, static_cast<std::int8_t>(-sign)}; }
  constexpr bool cancels(Letter o) const { return gen == o.gen && sign == -o.sign; }
  // Fixed letter order x < x^-1 < y < y^-1.
  constexpr int rank() const { return static_cast<int>(gen) * 2 + (sign < 0 ? 1 : 0); }

  friend constexpr bool operator==(Letter a, Letter b) = default;
  friend constexpr bool operator<(Letter a, Letter b) { return a.rank() < b.rank(); }
};

inline constexpr Letter kX{Gen::First, 1};
inline constexpr Letter kXInv{Gen::First, -1};
inline constexpr Letter kY{Gen::Second, 1};
inline constexpr Letter kYInv{Gen::Second, -1};

// Rendering of the two generators.  The algebra never looks at this.
enum class Alphabet { XY, XYPrime, ZW };

class LinearWord {
 public:
  LinearWord() = default;
  explicit LinearWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Parses `xXyY` (capital = inverse).  With Alphabet::ZW the letters are
  // `zZwW`; with XYPrime a trailing apostrophe after each letter is accepted.
  static LinearWord parse(std::string_view text, Alphabet alphabet = Alphabet::XY);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  LinearWord inverse() const;
  LinearWord operator*(const LinearWord& rhs) const;

  std::string str(Alphabet alphabet = Alphabet::XY) const;

  friend bool operator==(const LinearWord&, const LinearWord&) = default;

 private:
  std::vector<Letter> letters_;
};

// A word up to rotation.  Stored in canonical form: the lexicographically
// least rotation under x < x^-1 < y < y^-1.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const LinearWord& w);
  explicit CyclicWord(std::vector<Letter> letters);

  static CyclicWord parse(std::string_view text, Alphabet alphabet = Alphabet::XY) {
    return CyclicWord(LinearWord::parse(text, alphabet));
  }

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  // Cyclic indexing.
  Letter at(std::size_t i) const { return letters_[i % letters_.size()]; }

  LinearWord linear() const { return LinearWord(letters_); }
  CyclicWord inverse() const;

  std::string str(Alphabet alphabet = Alphabet::XY) const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
        [](Letter l, Letter r) { return l.rank() <=> r.rank(); });
  }

 private:
  std::vector<Letter> letters_;
};

// A homomorphism of free groups given by the images of the two generators.
// Images of inverse letters are the formal inverses, so the homomorphism
// property holds by construction.
class SubstitutionRule {
 public:
  SubstitutionRule(LinearWord first_image, LinearWord second_image)
      : first_(std::move(first_image)), second_(std::move(second_image)) {}

  static SubstitutionRule identity();
  // x -> z w, y -> w^eps (eps = +1 or -1).  Replacing one disk of the pair by
  // a band sum with the other.
  static SubstitutionRule band_sum(int eps);

  LinearWord image(Letter l) const;

 private:
  LinearWord first_;
  LinearWord second_;
};

LinearWord free_reduce(const LinearWord& w);
CyclicWord cyclic_reduce(const CyclicWord& w);
bool is_cyclically_reduced(const CyclicWord& w);

// True iff the cyclic reduction is s t s^-1 t^-1 with s, t letters on the two
// distinct generators.  Equivalently: conjugate to [x,y] or its inverse.
bool is_commutator_class(const CyclicWord& w);

// Letterwise image, not reduced.
CyclicWord apply_substitution(const CyclicWord& w, const SubstitutionRule& r);
LinearWord apply_substitution(const LinearWord& w, const SubstitutionRule& r);

struct CancellationCounts {
  std::size_t plus_minus = 0;   // g g^-1
  std::size_t minus_plus = 0;   // g^-1 g
  friend bool operator==(const CancellationCounts&, const CancellationCounts&) = default;
};

CancellationCounts count_adjacent_cancellations(const CyclicWord& w, Gen g);

// Positions i (in the canonical rotation) such that letters i, i+1 (cyclic)
// are mutually inverse.
std::vector<std::size_t> inverse_pair_positions(const CyclicWord& w);

// Word-level shadow of a disk surgery along the subarc carrying the inverse
// pair at `occurrence`: the pair is removed, the remaining letters are mapped
// by `rule` and the result is cyclically reduced.  Throws DomainError when
// `occurrence` is not an inverse pair or the result is not strictly shorter.
CyclicWord apply_disk_surgery_word(const CyclicWord& w, std::size_t occurrence,
                                   const SubstitutionRule& rule);

// Exponent sums of the two generators.
std::pair<long, long> exponent_sums(const CyclicWord& w);

// Lengths of the maximal runs of one repeated letter on generator g, read
// cyclically.  A word that is a single run reports its full length.
std::vector<std::size_t> maximal_runs(const CyclicWord& w, Gen g);

}  // namespace gofk

template <>
struct std::hash<gofk::CyclicWord> {
  std::size_t operator()(const gofk::CyclicWord& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto l : w.letters()) h = (h ^ static_cast<std::size_t>(l.rank())) * 1099511628211ULL;
    return h;
  }
};
