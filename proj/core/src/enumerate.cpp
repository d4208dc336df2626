#include "gofk/enumerate.hpp"

#include <algorithm>
#include <thread>

namespace gofk {

namespace {

// Non-crossing perfect matchings of the points 0..n-1 around a cell boundary
// with no chord joining two points of the same side.
class MatchingGenerator {
 public:
  explicit MatchingGenerator(std::vector<int> side_of) : side_of_(std::move(side_of)) {}

  std::vector<std::vector<int>> all() {
    const int n = static_cast<int>(side_of_.size());
    partner_.assign(side_of_.size(), -1);
    pending_.assign(1, {0, n});
    out_.clear();
    step();
    return std::move(out_);
  }

 private:
  void step() {
    if (pending_.empty()) {
      out_.push_back(partner_);
      return;
    }
    const auto [lo, hi] = pending_.back();
    pending_.pop_back();
    if (lo == hi) {
      step();
    } else {
      for (int j = lo + 1; j < hi; j += 2) {
        if (side_of_[j] == side_of_[lo]) continue;
        partner_[lo] = j;
        partner_[j] = lo;
        pending_.push_back({j + 1, hi});
        pending_.push_back({lo + 1, j});
        step();
        pending_.pop_back();
        pending_.pop_back();
      }
    }
    pending_.push_back({lo, hi});
  }

  std::vector<int> side_of_;
  std::vector<int> partner_;
  std::vector<std::pair<int, int>> pending_;
  std::vector<std::vector<int>> out_;
};

class Enumerator {
 public:
  Enumerator(const StandardDiagram& d, const EnumerationOptions& opts, int part, int parts,
             const std::function<void(const NormalCurve&)>& visit)
      : d_(d), opts_(opts), part_(part), parts_(parts), visit_(visit), weight_(d.edges().size(), 0) {}

  void run() { assign(0, opts_.max_crossings, opts_.max_free); }

 private:
  void assign(std::size_t e, int letters_left, int free_left) {
    if (e == weight_.size()) {
      process();
      return;
    }
    const Edge& edge = d_.edges()[e];
    const int cost = edge.letter_weight();
    const int limit = cost == 0 ? free_left : letters_left / cost;
    for (int w = 0; w <= limit; ++w) {
      if (e == 0 && w % parts_ != part_) continue;
      weight_[e] = w;
      if (cost == 0) assign(e + 1, letters_left, free_left - w);
      else assign(e + 1, letters_left - w * cost, free_left);
    }
    weight_[e] = 0;
  }

  void process() {
    const auto& cells = d_.cells();
    const std::size_t nc = cells.size();
    std::vector<int> base(nc + 1, 0);
    for (std::size_t c = 0; c < nc; ++c) {
      int n = 0;
      for (const auto& s : cells[c].sides) n += weight_[s.edge];
      if (n % 2 != 0) return;
      for (const auto& s : cells[c].sides)
        if (2 * weight_[s.edge] > n) return;
      base[c + 1] = base[c] + n;
    }
    const int total = base[nc];
    if (total == 0) return;

    // Point p of cell c has global id base[c] + p; points run side by side,
    // slot by slot, counter-clockwise.
    std::vector<int> side_of(static_cast<std::size_t>(total));
    std::vector<int> slot_of(static_cast<std::size_t>(total));
    std::vector<int> cell_of(static_cast<std::size_t>(total));
    std::vector<std::vector<int>> side_start(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      int id = base[c];
      for (std::size_t k = 0; k < cells[c].sides.size(); ++k) {
        side_start[c].push_back(id);
        for (int i = 0; i < weight_[cells[c].sides[k].edge]; ++i, ++id) {
          side_of[id] = static_cast<int>(k);
          slot_of[id] = i;
          cell_of[id] = static_cast<int>(c);
        }
      }
    }
    std::vector<int> glue(static_cast<std::size_t>(total));
    for (int id = 0; id < total; ++id) {
      const SideRef across = d_.paired({cell_of[id], side_of[id]});
      const int w = weight_[d_.side(across).edge];
      glue[id] = side_start[across.cell][across.side] + (w - 1 - slot_of[id]);
    }

    std::vector<std::vector<std::vector<int>>> matchings(nc);
    for (std::size_t c = 0; c < nc; ++c) {
      MatchingGenerator gen(std::vector<int>(side_of.begin() + base[c], side_of.begin() + base[c + 1]));
      matchings[c] = gen.all();
      if (matchings[c].empty()) return;
    }

    std::vector<std::size_t> choice(nc, 0);
    std::vector<Transit> transits;
    while (true) {
      auto partner = [&](int id) {
        const int c = cell_of[id];
        return base[c] + matchings[c][choice[c]][id - base[c]];
      };
      transits.clear();
      int in = 0;
      do {
        const int out = partner(in);
        transits.push_back({cell_of[in], side_of[in], slot_of[in], side_of[out], slot_of[out]});
        in = glue[out];
      } while (in != 0);
      if (2 * static_cast<int>(transits.size()) == total) emit(NormalCurve(transits));

      std::size_t c = 0;
      while (c < nc && ++choice[c] == matchings[c].size()) choice[c++] = 0;
      if (c == nc) break;
    }
  }

  void emit(const NormalCurve& c) {
    if (opts_.essential_only && !is_essential(c, d_)) return;
    visit_(c.canonical());
  }

  const StandardDiagram& d_;
  const EnumerationOptions& opts_;
  int part_;
  int parts_;
  const std::function<void(const NormalCurve&)>& visit_;
  std::vector<int> weight_;
};

std::vector<NormalCurve> collect(const StandardDiagram& d, const EnumerationOptions& opts,
                                 bool gof_only) {
  EnumerationOptions inner = opts;
  // Every curve with a commutator word is essential; skip the costlier test.
  if (gof_only) inner.essential_only = false;
  const int parts = std::max(1, opts.jobs);
  std::vector<std::vector<NormalCurve>> found(static_cast<std::size_t>(parts));
  auto work = [&](int part) {
    auto& sink = found[static_cast<std::size_t>(part)];
    const std::function<void(const NormalCurve&)> visit = [&](const NormalCurve& c) {
      if (!gof_only || is_gof(c, d).gof) sink.push_back(c);
    };
    Enumerator(d, inner, part, parts, visit).run();
  };
  if (parts == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int p = 0; p < parts; ++p) pool.emplace_back(work, p);
  }
  std::vector<NormalCurve> out;
  for (auto& v : found) out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

void for_each_curve(const StandardDiagram& d, const EnumerationOptions& opts,
                    const std::function<void(const NormalCurve&)>& visit) {
  Enumerator(d, opts, 0, 1, visit).run();
}

std::vector<NormalCurve> enumerate_curves(const StandardDiagram& d, const EnumerationOptions& opts) {
  return collect(d, opts, false);
}

std::vector<NormalCurve> search_gof(const StandardDiagram& d, const EnumerationOptions& opts) {
  return collect(d, opts, true);
}

}  // namespace gofk
