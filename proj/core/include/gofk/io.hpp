#pragma once

// JSON files for diagrams and curves, and the fixture directory.

#include <filesystem>
#include <string>
#include <string_view>

#include "gofk/curve.hpp"
#include "gofk/diagram.hpp"

namespace gofk {

inline constexpr int kFileFormatVersion = 1;

std::string diagram_to_json(const StandardDiagram& d);
// Throws ParseError on malformed text and DomainError on an invalid complex.
StandardDiagram diagram_from_json(std::string_view text);

struct CurveRecord {
  std::string manifold;
  std::string figure;
  NormalCurve curve;
};

std::string curve_to_json(const CurveRecord& r);
CurveRecord curve_from_json(std::string_view text);

// Throw IoError.
std::string read_text_file(const std::filesystem::path& p);
void write_text_file(const std::filesystem::path& p, std::string_view text);

StandardDiagram load_diagram(const std::filesystem::path& p);
CurveRecord load_curve(const std::filesystem::path& p);

// $GOFK_FIXTURE_DIR if set, else the fixtures shipped with the source tree.
std::filesystem::path fixture_dir();

}  // namespace gofk
