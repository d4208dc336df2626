#include <map>

#include "doctest.h"
#include "gofk/diagram.hpp"
#include "gofk/error.hpp"

using namespace gofk;

namespace {
const char* const kManifolds[] = {"S3",          "S2xS1",         "L(2,1)",       "L(5,2)",        "L(7,3)",
                                  "S2xS1#S2xS1", "L(3,1)#S2xS1", "L(3,1)#L(2,1)", "L(5,2)#L(7,3)", "L(4,3)"};
}  // namespace

TEST_CASE("standard diagrams are closed genus two surfaces") {
  for (const char* m : kManifolds) {
    CAPTURE(m);
    const StandardDiagram d = build_standard_diagram(Manifold3::parse(m));
    CHECK(d.euler_characteristic() == -2);
    CHECK(d.manifold() == Manifold3::parse(m));
    for (int e = 0; e < static_cast<int>(d.edges().size()); ++e) {
      const SideRef pos = d.positive_side(e);
      const SideRef neg = d.negative_side(e);
      CHECK(d.side(pos).dir == 1);
      CHECK(d.side(neg).dir == -1);
      CHECK(d.paired(pos) == neg);
      CHECK(d.paired(neg) == pos);
    }
  }
}

TEST_CASE("each disk curve is present in both systems") {
  for (const char* m : kManifolds) {
    CAPTURE(m);
    const StandardDiagram d = build_standard_diagram(Manifold3::parse(m));
    std::map<std::pair<int, int>, int> seen;
    int free_edges = 0;
    for (const auto& e : d.edges()) {
      if (e.v_letter) ++seen[{0, static_cast<int>(*e.v_letter)}];
      if (e.w_letter) ++seen[{1, static_cast<int>(*e.w_letter)}];
      free_edges += e.is_free() ? 1 : 0;
    }
    CHECK(seen.size() == 4);
    CHECK(free_edges >= 1);
  }
}

TEST_CASE("lens cells meet the W curve once per cell") {
  const StandardDiagram d = build_standard_diagram(Manifold3::lens(7, 3));
  int v_edges = 0;
  for (const auto& e : d.edges())
    if (e.v_letter == Gen::First && !e.w_letter) ++v_edges;
  CHECK(v_edges == 7);
}

TEST_CASE("carrier tags") {
  const StandardDiagram d = build_standard_diagram(Manifold3::parse("L(3,1)#S2xS1"));
  std::map<std::string, int> tags;
  for (int c = 0; c < static_cast<int>(d.cells().size()); ++c)
    for (int s = 0; s < static_cast<int>(d.cells()[c].sides.size()); ++s) ++tags[d.carrier_tag({c, s})];
  CHECK(tags.count("d+") == 1);
  CHECK(tags.count("d-") == 1);
  CHECK(tags.count("d'") == 1);
  CHECK(tags.count("free") == 1);
}

TEST_CASE("invalid complexes are rejected") {
  const Manifold3 m = Manifold3::s3();
  // Both occurrences with the same direction.
  CHECK_THROWS_AS(StandardDiagram(m, {{"a", {}, {}}}, {Cell{{{0, 1}, {0, 1}}}}), DomainError);
  // A torus is not genus two.
  CHECK_THROWS_AS(StandardDiagram(m, {{"a", {}, {}}, {"b", {}, {}}}, {Cell{{{0, 1}, {1, 1}, {0, -1}, {1, -1}}}}),
                  DomainError);
  // An edge used three times.
  CHECK_THROWS_AS(StandardDiagram(m, {{"a", {}, {}}}, {Cell{{{0, 1}, {0, -1}, {0, 1}}}}), DomainError);
}
