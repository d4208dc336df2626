#include "gofk/words.hpp"

#include <algorithm>

#include "gofk/error.hpp"

namespace gofk {

namespace {

std::vector<Letter> least_rotation(std::vector<Letter> v) {
  const std::size_t n = v.size();
  if (n < 2) return v;
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const int a = v[(r + k) % n].rank();
      const int b = v[(best + k) % n].rank();
      if (a != b) {
        if (a < b) best = r;
        break;
      }
    }
  }
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(best), v.end());
  return v;
}

char glyph(Letter l, Alphabet a) {
  const bool first = l.gen == Gen::First;
  char c = 'x';
  switch (a) {
    case Alphabet::XY:
    case Alphabet::XYPrime: c = first ? 'x' : 'y'; break;
    case Alphabet::ZW: c = first ? 'z' : 'w'; break;
  }
  return l.sign > 0 ? c : static_cast<char>(c - 'a' + 'A');
}

std::string render(std::span<const Letter> letters, Alphabet a) {
  std::string out;
  for (auto l : letters) {
    out.push_back(glyph(l, a));
    if (a == Alphabet::XYPrime) out.push_back('\'');
  }
  return out;
}

}  // namespace

LinearWord LinearWord::parse(std::string_view text, Alphabet alphabet) {
  const char lo0 = alphabet == Alphabet::ZW ? 'z' : 'x';
  const char lo1 = alphabet == Alphabet::ZW ? 'w' : 'y';
  std::vector<Letter> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\'' && alphabet == Alphabet::XYPrime && !out.empty()) continue;
    if (c == lo0) out.push_back(kX);
    else if (c == lo0 - 'a' + 'A') out.push_back(kXInv);
    else if (c == lo1) out.push_back(kY);
    else if (c == lo1 - 'a' + 'A') out.push_back(kYInv);
    else throw ParseError("invalid letter '" + std::string(1, c) + "' in word \"" + std::string(text) + "\"");
  }
  return LinearWord(std::move(out));
}

LinearWord LinearWord::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return LinearWord(std::move(out));
}

LinearWord LinearWord::operator*(const LinearWord& rhs) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
  return LinearWord(std::move(out));
}

std::string LinearWord::str(Alphabet alphabet) const { return render(letters_, alphabet); }

CyclicWord::CyclicWord(const LinearWord& w)
    : letters_(least_rotation({w.letters().begin(), w.letters().end()})) {}

CyclicWord::CyclicWord(std::vector<Letter> letters) : letters_(least_rotation(std::move(letters))) {}

CyclicWord CyclicWord::inverse() const { return CyclicWord(linear().inverse()); }

std::string CyclicWord::str(Alphabet alphabet) const { return render(letters_, alphabet); }

SubstitutionRule SubstitutionRule::identity() {
  return {LinearWord({kX}), LinearWord({kY})};
}

SubstitutionRule SubstitutionRule::band_sum(int eps) {
  if (eps != 1 && eps != -1) throw DomainError("band_sum: eps must be +1 or -1");
  return {LinearWord({kX, kY}), LinearWord({eps > 0 ? kY : kYInv})};
}

LinearWord SubstitutionRule::image(Letter l) const {
  const LinearWord& base = l.gen == Gen::First ? first_ : second_;
  return l.sign > 0 ? base : base.inverse();
}

LinearWord free_reduce(const LinearWord& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (auto l : w.letters()) {
    if (!stack.empty() && stack.back().cancels(l)) stack.pop_back();
    else stack.push_back(l);
  }
  return LinearWord(std::move(stack));
}

CyclicWord cyclic_reduce(const CyclicWord& w) {
  auto reduced = free_reduce(w.linear());
  std::span<const Letter> s = reduced.letters();
  std::size_t lo = 0;
  std::size_t hi = s.size();
  while (hi - lo >= 2 && s[lo].cancels(s[hi - 1])) {
    ++lo;
    --hi;
  }
  return CyclicWord(std::vector<Letter>(s.begin() + static_cast<std::ptrdiff_t>(lo),
                                        s.begin() + static_cast<std::ptrdiff_t>(hi)));
}

bool is_cyclically_reduced(const CyclicWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return true;
  if (n == 1) return true;
  for (std::size_t i = 0; i < n; ++i)
    if (w.at(i).cancels(w.at(i + 1))) return false;
  return true;
}

bool is_commutator_class(const CyclicWord& w) {
  const CyclicWord r = cyclic_reduce(w);
  if (r.size() != 4) return false;
  const Letter s = r.at(0);
  const Letter t = r.at(1);
  return s.gen != t.gen && r.at(2) == s.inverse() && r.at(3) == t.inverse();
}

LinearWord apply_substitution(const LinearWord& w, const SubstitutionRule& r) {
  std::vector<Letter> out;
  for (auto l : w.letters()) {
    auto img = r.image(l);
    out.insert(out.end(), img.letters().begin(), img.letters().end());
  }
  return LinearWord(std::move(out));
}

CyclicWord apply_substitution(const CyclicWord& w, const SubstitutionRule& r) {
  return CyclicWord(apply_substitution(w.linear(), r));
}

CancellationCounts count_adjacent_cancellations(const CyclicWord& w, Gen g) {
  CancellationCounts c;
  const std::size_t n = w.size();
  if (n < 2) return c;
  for (std::size_t i = 0; i < n; ++i) {
    const Letter a = w.at(i);
    const Letter b = w.at(i + 1);
    if (a.gen != g || !a.cancels(b)) continue;
    if (a.sign > 0) ++c.plus_minus;
    else ++c.minus_plus;
  }
  return c;
}

std::vector<std::size_t> inverse_pair_positions(const CyclicWord& w) {
  std::vector<std::size_t> out;
  const std::size_t n = w.size();
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i)
    if (w.at(i).cancels(w.at(i + 1))) out.push_back(i);
  return out;
}

CyclicWord apply_disk_surgery_word(const CyclicWord& w, std::size_t occurrence,
                                   const SubstitutionRule& rule) {
  const std::size_t n = w.size();
  if (n < 2 || occurrence >= n || !w.at(occurrence).cancels(w.at(occurrence + 1)))
    throw DomainError("disk surgery: position " + std::to_string(occurrence) +
                      " is not an inverse pair in " + w.str());
  std::vector<Letter> rest;
  rest.reserve(n - 2);
  for (std::size_t k = 2; k < n; ++k) rest.push_back(w.at(occurrence + k));
  CyclicWord out = cyclic_reduce(apply_substitution(CyclicWord(std::move(rest)), rule));
  if (out.size() >= n)
    throw DomainError("disk surgery: no descent for " + w.str());
  return out;
}

std::pair<long, long> exponent_sums(const CyclicWord& w) {
  long a = 0;
  long b = 0;
  for (auto l : w.letters()) (l.gen == Gen::First ? a : b) += l.sign;
  return {a, b};
}

std::vector<std::size_t> maximal_runs(const CyclicWord& w, Gen g) {
  std::vector<std::size_t> runs;
  const std::size_t n = w.size();
  if (n == 0) return runs;
  // Start scanning just after a run boundary so that wrap-around runs are whole.
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(w.at(i) == w.at(i + n - 1))) {
      start = i;
      break;
    }
  }
  if (start == n) {
    if (w.at(0).gen == g) runs.push_back(n);
    return runs;
  }
  std::size_t len = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Letter cur = w.at(start + k);
    ++len;
    if (!(w.at(start + k + 1) == cur)) {
      if (cur.gen == g) runs.push_back(len);
      len = 0;
    }
  }
  return runs;
}

}  // namespace gofk
