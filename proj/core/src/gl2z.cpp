#include "gofk/gl2z.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>
#include <vector>

#include "gofk/error.hpp"

namespace gofk {

namespace {

using Int = MatZ2::Int;

// 0, 1, -1, 2, -2, ... so that small witnesses come first.
std::vector<Int> centered_range(Int bound) {
  std::vector<Int> v{0};
  for (Int k = 1; k <= bound; ++k) {
    v.push_back(k);
    v.push_back(-k);
  }
  return v;
}

}  // namespace

MatZ2::MatZ2(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
  const Int det = a * d - b * c;
  if (det != 1 && det != -1)
    throw DomainError("matrix [[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
                      std::to_string(c) + "," + std::to_string(d) + "]] has determinant " +
                      std::to_string(det));
}

MatZ2 MatZ2::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  std::vector<Int> v;
  std::size_t i = 0;
  auto expect = [&](char ch) {
    if (i >= s.size() || s[i] != ch)
      throw ParseError("malformed matrix \"" + std::string(text) + "\": expected '" +
                       std::string(1, ch) + "'");
    ++i;
  };
  auto number = [&] {
    Int val = 0;
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), val);
    if (ec != std::errc())
      throw ParseError("malformed matrix \"" + std::string(text) + "\": expected integer");
    i = static_cast<std::size_t>(ptr - s.data());
    v.push_back(val);
  };
  expect('[');
  expect('[');
  number();
  expect(',');
  number();
  expect(']');
  expect(',');
  expect('[');
  number();
  expect(',');
  number();
  expect(']');
  expect(']');
  if (i != s.size()) throw ParseError("malformed matrix \"" + std::string(text) + "\": trailing input");
  return {v[0], v[1], v[2], v[3]};
}

Int MatZ2::max_abs_entry() const {
  auto ab = [](Int x) { return x < 0 ? -x : x; };
  return std::max({ab(a_), ab(b_), ab(c_), ab(d_)});
}

MatZ2 MatZ2::inverse() const {
  const Int det = this->det();
  // det is +-1, so the adjugate divided by det stays integral.
  return {d_ * det, -b_ * det, -c_ * det, a_ * det};
}

MatZ2 MatZ2::operator*(const MatZ2& r) const {
  return {a_ * r.a_ + b_ * r.c_, a_ * r.b_ + b_ * r.d_, c_ * r.a_ + d_ * r.c_,
          c_ * r.b_ + d_ * r.d_};
}

std::string MatZ2::str() const {
  std::ostringstream os;
  os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MatZ2& m) { return os << m.str(); }

std::string_view to_string(MonodromyType t) {
  switch (t) {
    case MonodromyType::FiniteOrder: return "finite-order";
    case MonodromyType::Parabolic: return "parabolic";
    case MonodromyType::Anosov: return "anosov";
  }
  return "?";
}

MonodromyType classify_type(const MatZ2& m) {
  if (m.det() != 1) throw DomainError("classify_type: determinant -1 in " + m.str());
  const Int t = m.trace() < 0 ? -m.trace() : m.trace();
  if (t < 2) return MonodromyType::FiniteOrder;
  if (t == 2) return MonodromyType::Parabolic;
  return MonodromyType::Anosov;
}

ConjugacyVerdict is_conjugate_gl2z(const MatZ2& a, const MatZ2& b, Int search_bound) {
  if (a.det() != b.det()) return NotConjugate{"det", a.det(), b.det()};
  if (a.trace() != b.trace()) return NotConjugate{"trace", a.trace(), b.trace()};
  // The ideal (b, c, a - d) is a conjugacy invariant.
  auto content = [](const MatZ2& m) { return std::gcd(std::gcd(m.b(), m.c()), m.a() - m.d()); };
  if (content(a) != content(b)) return NotConjugate{"content", content(a), content(b)};

  // P = [[p,q],[r,s]] with P*A == B*P.  For fixed p, q, r the unknown s is
  // pinned by any of the three equations that involve it; if all three
  // coefficients vanish, s is searched directly.
  const Int e = b.a(), f = b.b(), g = b.c(), h = b.d();
  const auto values = centered_range(search_bound);
  for (Int p : values) {
    for (Int q : values) {
      for (Int r : values) {
        if (p * a.a() + q * a.c() != e * p + f * r) continue;
        std::vector<Int> candidates;
        auto pin = [&](Int coeff, Int rhs) {
          if (coeff == 0) return rhs == 0;
          if (rhs % coeff != 0) return false;
          candidates.assign(1, rhs / coeff);
          return true;
        };
        bool ok = true;
        if (f != 0) ok = pin(f, p * a.b() + q * a.d() - e * q);
        else if (a.c() != 0) ok = pin(a.c(), g * p + h * r - r * a.a());
        else if (a.d() - h != 0) ok = pin(a.d() - h, g * q - r * a.b());
        else candidates = values;
        if (!ok) continue;
        for (Int s : candidates) {
          if (s > search_bound || s < -search_bound) continue;
          const Int det = p * s - q * r;
          if (det != 1 && det != -1) continue;
          const MatZ2 pm(p, q, r, s);
          if (pm * a == b * pm) return Conjugate{pm};
        }
      }
    }
  }
  return UnknownConjugacy{search_bound};
}

std::string describe(const ConjugacyVerdict& v) {
  std::ostringstream os;
  if (auto c = std::get_if<Conjugate>(&v)) {
    os << "conjugate witness " << c->witness;
  } else if (auto n = std::get_if<NotConjugate>(&v)) {
    os << "not-conjugate " << n->invariant << " " << n->lhs << " vs " << n->rhs;
  } else {
    os << "unknown (no witness with entries <= " << std::get<UnknownConjugacy>(v).bound << ")";
  }
  return os.str();
}

std::optional<MatZ2> brute_force_conjugacy_oracle(const MatZ2& a, const MatZ2& b,
                                                  Int entry_bound) {
  for (Int p = -entry_bound; p <= entry_bound; ++p)
    for (Int q = -entry_bound; q <= entry_bound; ++q)
      for (Int r = -entry_bound; r <= entry_bound; ++r)
        for (Int s = -entry_bound; s <= entry_bound; ++s) {
          const Int det = p * s - q * r;
          if (det != 1 && det != -1) continue;
          const MatZ2 pm(p, q, r, s);
          if (pm * a == b * pm) return pm;
        }
  return std::nullopt;
}

}  // namespace gofk
