#include "gofk/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gofk/error.hpp"

#ifndef GOFK_DEFAULT_FIXTURE_DIR
#define GOFK_DEFAULT_FIXTURE_DIR "data/fixtures"
#endif

namespace gofk {

using nlohmann::json;

namespace {

constexpr std::string_view kDiagramFormat = "gofk-diagram";
constexpr std::string_view kCurveFormat = "gofk-curve";

json letter_json(const std::optional<Gen>& g) {
  if (!g) return nullptr;
  return *g == Gen::First ? "x" : "y";
}

std::optional<Gen> letter_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  const auto s = j.get<std::string>();
  if (s == "x") return Gen::First;
  if (s == "y") return Gen::Second;
  throw ParseError("unknown letter \"" + s + "\"");
}

json parse_json(std::string_view text, std::string_view format) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != format)
    throw ParseError("expected a \"" + std::string(format) + "\" document");
  if (j.value("version", 0) != kFileFormatVersion)
    throw ParseError("unsupported " + std::string(format) + " version");
  return j;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

std::string diagram_to_json(const StandardDiagram& d) {
  json edges = json::array();
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    const Edge& edge = d.edges()[e];
    const SideRef pos = d.positive_side(static_cast<int>(e));
    const SideRef neg = d.negative_side(static_cast<int>(e));
    edges.push_back({{"label", edge.label},
                     {"v", letter_json(edge.v_letter)},
                     {"w", letter_json(edge.w_letter)},
                     {"pair", {{pos.cell, pos.side}, {neg.cell, neg.side}}}});
  }
  json cells = json::array();
  for (std::size_t c = 0; c < d.cells().size(); ++c) {
    json sides = json::array();
    for (std::size_t k = 0; k < d.cells()[c].sides.size(); ++k) {
      const SideRef r{static_cast<int>(c), static_cast<int>(k)};
      sides.push_back({{"edge", d.side(r).edge}, {"dir", d.side(r).dir}, {"carrier", d.carrier_tag(r)}});
    }
    cells.push_back({{"sides", sides}});
  }
  json j = {{"format", kDiagramFormat},
            {"version", kFileFormatVersion},
            {"manifold", d.manifold().str()},
            {"edges", edges},
            {"cells", cells}};
  return j.dump(2) + "\n";
}

StandardDiagram diagram_from_json(std::string_view text) {
  const json j = parse_json(text, kDiagramFormat);
  return guarded([&] {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges"))
      edges.push_back({e.at("label").get<std::string>(), letter_from(e.at("v")), letter_from(e.at("w"))});
    std::vector<Cell> cells;
    for (const auto& c : j.at("cells")) {
      Cell cell;
      for (const auto& s : c.at("sides")) cell.sides.push_back({s.at("edge").get<int>(), s.at("dir").get<int>()});
      cells.push_back(std::move(cell));
    }
    StandardDiagram d(Manifold3::parse(j.at("manifold").get<std::string>()), std::move(edges), std::move(cells));
    for (std::size_t e = 0; e < d.edges().size(); ++e) {
      const auto& pair = j.at("edges")[e];
      if (!pair.contains("pair")) continue;
      const SideRef pos{pair["pair"][0][0].get<int>(), pair["pair"][0][1].get<int>()};
      const SideRef neg{pair["pair"][1][0].get<int>(), pair["pair"][1][1].get<int>()};
      if (pos != d.positive_side(static_cast<int>(e)) || neg != d.negative_side(static_cast<int>(e)))
        throw ParseError("pairing of edge " + d.edges()[e].label + " disagrees with the cells");
    }
    return d;
  });
}

std::string curve_to_json(const CurveRecord& r) {
  json transits = json::array();
  for (const auto& t : r.curve.transits())
    transits.push_back({t.cell, t.in_side, t.in_slot, t.out_side, t.out_slot});
  json j = {{"format", kCurveFormat},
            {"version", kFileFormatVersion},
            {"manifold", r.manifold},
            {"figure", r.figure},
            {"transits", transits}};
  // One transit per line keeps fixture diffs readable.
  std::ostringstream os;
  os << "{\n";
  for (const char* key : {"format", "version", "manifold", "figure"})
    os << "  " << json(key).dump() << ": " << j[key].dump() << ",\n";
  os << "  \"transits\": [";
  for (std::size_t i = 0; i < transits.size(); ++i)
    os << (i ? ",\n    " : "\n    ") << transits[i].dump();
  os << (transits.empty() ? "]\n" : "\n  ]\n") << "}\n";
  return os.str();
}

CurveRecord curve_from_json(std::string_view text) {
  const json j = parse_json(text, kCurveFormat);
  return guarded([&] {
    CurveRecord r;
    r.manifold = j.value("manifold", "");
    r.figure = j.value("figure", "");
    std::vector<Transit> ts;
    for (const auto& t : j.at("transits")) {
      if (!t.is_array() || t.size() != 5) throw ParseError("a transit has five integers");
      ts.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>(), t[4].get<int>()});
    }
    r.curve = NormalCurve(std::move(ts));
    return r;
  });
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot read " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& p, std::string_view text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  out << text;
  if (!out) throw IoError("failed writing " + p.string());
}

StandardDiagram load_diagram(const std::filesystem::path& p) { return diagram_from_json(read_text_file(p)); }

CurveRecord load_curve(const std::filesystem::path& p) { return curve_from_json(read_text_file(p)); }

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("GOFK_FIXTURE_DIR"); env && *env) return env;
  return GOFK_DEFAULT_FIXTURE_DIR;
}

}  // namespace gofk
