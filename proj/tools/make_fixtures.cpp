// Regenerates data/fixtures: one genus one fibered curve per figure, found by
// bounded search and picked by a fixed rule, plus reducing curves.
//
//   gofk_make_fixtures <output-dir>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <iostream>

#include "gofk/enumerate.hpp"
#include "gofk/io.hpp"
#include "gofk/manifold.hpp"

namespace {

using namespace gofk;

struct Target {
  std::string name;
  std::string manifold;
  int max_crossings;
  int max_free;
  std::function<bool(const NormalCurve&, const StandardDiagram&)> accept;
};

bool minimal_both(const NormalCurve& c, const StandardDiagram& d) {
  return is_minimal(c, d, System::V) && is_minimal(c, d, System::W);
}

// Unreduced in both systems although no bigon can be removed.
bool reducible_both(const NormalCurve& c, const StandardDiagram& d) {
  const GofVerdict v = is_gof(c, d);
  return minimal_both(c, d) && !is_cyclically_reduced(v.v_word) && !is_cyclically_reduced(v.w_word);
}

// Some maximal x' run has length q or p-q modulo p.
bool has_lens_run(const NormalCurve& c, const StandardDiagram& d) {
  const Piece& lens = d.manifold().pieces()[0].is_lens() ? d.manifold().pieces()[0] : d.manifold().pieces()[1];
  const auto runs = maximal_runs(is_gof(c, d).w_word, Gen::First);
  return std::any_of(runs.begin(), runs.end(), [&](std::size_t r) {
    const Int m = mod_floor(static_cast<Int>(r), lens.p);
    return m == lens.q || m == lens.p - lens.q;
  });
}

std::string json_string(const std::string& s) { return "\"" + s + "\""; }

void write_pair(const std::filesystem::path& dir, const std::string& name, const StandardDiagram& d,
                const NormalCurve& c) {
  write_text_file(dir / (name + ".diagram.json"), diagram_to_json(d));
  write_text_file(dir / (name + ".curve.json"), curve_to_json({d.manifold().str(), name, c}));
}

// The single transit through the tube joining the two summands.
NormalCurve reducing_curve(const StandardDiagram& d) {
  const int tube = static_cast<int>(d.edges().size()) - 1;
  const SideRef pos = d.positive_side(tube);
  const SideRef neg = d.negative_side(tube);
  return NormalCurve({{pos.cell, pos.side, 0, neg.side, 0}});
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gofk_make_fixtures <output-dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  const std::vector<Target> targets = {
      {"fig10", "S2xS1#S2xS1", 8, 4, minimal_both},
      {"fig16", "L(3,1)#S2xS1", 12, 4,
       [](const NormalCurve& c, const StandardDiagram& d) { return minimal_both(c, d) && has_lens_run(c, d); }},
      {"fig27", "L(3,1)#L(2,1)", 12, 4, minimal_both},
      {"fig31", "S2xS1", 10, 4, minimal_both},
      {"fig35", "S3", 8, 4, minimal_both},
      {"fig46", "L(4,3)", 16, 2, reducible_both},
      {"fig47", "L(5,3)", 16, 2, reducible_both},
  };

  std::string index = "{\n  \"format\": \"gofk-fixture-index\",\n  \"version\": 1,\n  \"gof\": [";
  bool first = true;
  for (const auto& t : targets) {
    const StandardDiagram d = build_standard_diagram(Manifold3::parse(t.manifold));
    EnumerationOptions opts;
    opts.max_crossings = t.max_crossings;
    opts.max_free = t.max_free;
    const auto found = search_gof(d, opts);
    std::optional<NormalCurve> pick;
    for (const auto& c : found)
      if (t.accept(c, d) && (!pick || c.size() < pick->size())) pick = c;
    std::cout << t.name << ": " << found.size() << " candidates, " << (pick ? "picked" : "none accepted") << "\n";
    if (!pick) return 1;
    write_pair(dir, t.name, d, *pick);
    index += (first ? "\n    " : ",\n    ") + json_string(t.name);
    first = false;
  }
  index += "\n  ],\n  \"reducing\": [";

  const std::vector<std::pair<std::string, std::string>> reducing = {
      {"reducing-s3", "S3"},
      {"reducing-s2xs1-s2xs1", "S2xS1#S2xS1"},
      {"reducing-l31-s2xs1", "L(3,1)#S2xS1"},
      {"reducing-l43", "L(4,3)"},
  };
  first = true;
  for (const auto& [name, manifold] : reducing) {
    const StandardDiagram d = build_standard_diagram(Manifold3::parse(manifold));
    write_pair(dir, name, d, reducing_curve(d));
    index += (first ? "\n    " : ",\n    ") + json_string(name);
    first = false;
  }
  index += "\n  ]\n}\n";
  write_text_file(dir / "index.json", index);
  return 0;
}
