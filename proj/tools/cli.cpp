#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "gofk/census.hpp"
#include "gofk/enumerate.hpp"
#include "gofk/error.hpp"
#include "gofk/gl2z.hpp"
#include "gofk/io.hpp"
#include "gofk/manifold.hpp"
#include "gofk/plumbing.hpp"
#include "gofk/render.hpp"
#include "gofk/words.hpp"

namespace gofk::cli {

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string word_text(const CyclicWord& w, Alphabet a = Alphabet::XY) {
  return w.size() == 0 ? "(empty)" : w.str(a);
}

std::string transit_text(const NormalCurve& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Transit& t = c.transits()[i];
    os << (i ? " " : "") << "[" << t.cell << "," << t.in_side << "," << t.in_slot << "," << t.out_side << ","
       << t.out_slot << "]";
  }
  return os.str();
}

void census(std::ostream& os, const std::string& text, const std::string& format) {
  const Manifold3 m = Manifold3::parse(text);
  const auto entries = gof_census(m);
  auto matrix = [](const CensusEntry& e) { return e.monodromy ? e.monodromy->str() : std::string("-"); };
  auto type = [](const CensusEntry& e) {
    const auto t = e.type();
    return t ? std::string(to_string(*t)) : std::string("-");
  };
  auto trace = [](const CensusEntry& e) {
    return e.monodromy ? std::to_string(e.monodromy->trace()) : std::string("-");
  };
  if (format == "records") {
    os << "manifold=" << m;
    if (m.is_lens()) os << "\tfamily=" << lens_family(m.pieces()[0].p, m.pieces()[0].q).roman();
    os << "\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      os << "entry=" << i + 1 << "\tdescriptor=" << e.descriptor() << "\tmatrix=" << matrix(e)
         << "\ttype=" << type(e) << "\ttrace=" << trace(e) << "\tfigure=" << e.figure << "\n";
    }
    os << "total=" << entries.size() << "\n";
    return;
  }
  os << "manifold: " << m << "\n";
  if (m.is_lens()) os << "family: " << lens_family(m.pieces()[0].p, m.pieces()[0].q).str() << "\n";
  if (!entries.empty()) {
    os << std::left << std::setw(4) << "#" << std::setw(16) << "descriptor" << std::setw(20) << "monodromy"
       << std::setw(14) << "type" << std::setw(7) << "trace"
       << "figure\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      os << std::setw(4) << i + 1 << std::setw(16) << e.descriptor() << std::setw(20) << matrix(e) << std::setw(14)
         << type(e) << std::setw(7) << trace(e) << e.figure << "\n";
    }
  }
  os << "total: " << entries.size() << "\n";
}

void plumb(std::ostream& os, Int k1, Int k2) {
  const PlumbingRecipe r{{k1}, {k2}};
  const MatZ2 m = plumb_monodromy(r);
  // Summands in recipe order, so the first annulus's lens space leads.
  std::string ambient;
  for (const auto& a : {r.first, r.second}) {
    const Manifold3 part = a.ambient();
    if (!part.is_s3()) ambient += (ambient.empty() ? "" : "#") + part.str();
  }
  os << (ambient.empty() ? std::string("S3") : ambient) << "  " << m << "  " << to_string(classify_type(m)) << "\n";
}

void gof_check(std::ostream& os, const std::string& diagram_path, const std::string& curve_path) {
  const StandardDiagram d = load_diagram(diagram_path);
  const CurveRecord r = load_curve(curve_path);
  validate(r.curve, d);
  const GofVerdict v = is_gof(r.curve, d);
  os << "gof: " << bool_text(v.gof) << "\n";
  os << "V: " << word_text(v.v_word) << "\n";
  os << "W: " << word_text(v.w_word, Alphabet::XYPrime) << "\n";
}

void search(std::ostream& os, const std::string& text, const EnumerationOptions& opts, int limit) {
  const Manifold3 m = Manifold3::parse(text);
  const StandardDiagram d = build_standard_diagram(m);
  const auto found = search_gof(d, opts);
  os << "manifold: " << m << "\n";
  os << "max-crossings: " << opts.max_crossings << "  max-free: " << opts.max_free << "\n";
  os << "found: " << found.size() << "\n";
  const std::size_t shown = limit < 0 ? found.size() : std::min(found.size(), static_cast<std::size_t>(limit));
  for (std::size_t i = 0; i < shown; ++i) {
    const GofVerdict v = is_gof(found[i], d);
    os << i + 1 << "  V=" << word_text(v.v_word) << "  W=" << word_text(v.w_word, Alphabet::XYPrime) << "  "
       << transit_text(found[i]) << "\n";
  }
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  CLI::App app{"Genus one fibered knots in manifolds with reducible genus two Heegaard splittings", "gofk"};
  app.require_subcommand(1);
  std::function<void(std::ostream&)> action;

  std::string m1, m2, format = "table";
  auto* c_census = app.add_subcommand("census", "List the genus one fibered knots of a manifold");
  c_census->add_option("manifold", m1, "S3, S2xS1, L(p,q) or A#B")->required();
  c_census->add_option("--format", format, "table or records")->check(CLI::IsMember({"table", "records"}));
  c_census->callback([&] { action = [&](std::ostream& os) { census(os, m1, format); }; });

  bool oriented = false;
  auto* c_homeo = app.add_subcommand("homeo", "Decide whether two manifolds are homeomorphic");
  c_homeo->add_option("first", m1)->required();
  c_homeo->add_option("second", m2)->required();
  c_homeo->add_flag("--oriented", oriented, "Require an orientation-preserving homeomorphism");
  c_homeo->callback([&] {
    action = [&](std::ostream& os) {
      os << bool_text(is_homeomorphic(Manifold3::parse(m1), Manifold3::parse(m2), oriented)) << "\n";
    };
  });

  Int bound = kDefaultConjugacyBound;
  auto* c_conj = app.add_subcommand("conjugate", "Test conjugacy of two matrices in GL(2,Z)");
  c_conj->add_option("A", m1, "[[a,b],[c,d]]")->required();
  c_conj->add_option("B", m2, "[[a,b],[c,d]]")->required();
  c_conj->add_option("--bound", bound, "Largest conjugator entry searched")->check(CLI::NonNegativeNumber);
  c_conj->callback([&] {
    action = [&](std::ostream& os) {
      os << describe(is_conjugate_gl2z(MatZ2::parse(m1), MatZ2::parse(m2), bound)) << "\n";
    };
  });

  Int k1 = 0, k2 = 0;
  auto* c_plumb = app.add_subcommand("plumb", "Plumb a k1-twisted and a k2-twisted fibered annulus");
  c_plumb->add_option("k1", k1)->required();
  c_plumb->add_option("k2", k2)->required();
  c_plumb->callback([&] { action = [&](std::ostream& os) { plumb(os, k1, k2); }; });

  std::string word_op;
  auto* c_word = app.add_subcommand("word", "Cyclic word operations");
  c_word->add_option("operation", word_op, "reduce or commutator")->required()->check(CLI::IsMember({"reduce", "commutator"}));
  c_word->add_option("word", m1, "Letters x X y Y, capitals inverse")->required();
  c_word->callback([&] {
    action = [&](std::ostream& os) {
      const CyclicWord w = CyclicWord::parse(m1);
      if (word_op == "reduce") os << word_text(cyclic_reduce(w)) << "\n";
      else os << bool_text(is_commutator_class(w)) << "\n";
    };
  });

  std::string diagram_path, curve_path, out_path;
  auto* c_gof = app.add_subcommand("gof-check", "Check a curve file against a diagram file");
  c_gof->add_option("--diagram", diagram_path)->required();
  c_gof->add_option("--curve", curve_path)->required();
  c_gof->callback([&] { action = [&](std::ostream& os) { gof_check(os, diagram_path, curve_path); }; });

  EnumerationOptions eopts;
  int limit = 20;
  auto* c_search = app.add_subcommand("search", "Enumerate curves and report those that are genus one fibered");
  c_search->add_option("--manifold", m1)->required();
  c_search->add_option("--max-crossings", eopts.max_crossings)->required()->check(CLI::NonNegativeNumber);
  c_search->add_option("--max-free", eopts.max_free, "Crossings with free edges")->check(CLI::NonNegativeNumber);
  c_search->add_option("--jobs", eopts.jobs)->check(CLI::PositiveNumber);
  c_search->add_option("--limit", limit, "Curves listed; -1 lists all");
  c_search->callback([&] { action = [&](std::ostream& os) { search(os, m1, eopts, limit); }; });

  auto* c_render = app.add_subcommand("render", "Draw a diagram and optionally a curve as SVG");
  c_render->add_option("--diagram", diagram_path)->required();
  c_render->add_option("--curve", curve_path);
  c_render->add_option("-o,--output", out_path)->required();
  c_render->callback([&] {
    action = [&](std::ostream&) {
      const StandardDiagram d = load_diagram(diagram_path);
      std::optional<NormalCurve> curve;
      if (!curve_path.empty()) {
        curve = load_curve(curve_path).curve;
        validate(*curve, d);
      }
      write_text_file(out_path, render_svg(d, curve));
    };
  });

  auto* c_diagram = app.add_subcommand("diagram", "Write the standard diagram of a manifold as JSON");
  c_diagram->add_option("manifold", m1)->required();
  c_diagram->add_option("-o,--output", out_path, "File to write; standard output if omitted");
  c_diagram->callback([&] {
    action = [&](std::ostream& os) {
      const std::string text = diagram_to_json(build_standard_diagram(Manifold3::parse(m1)));
      if (out_path.empty()) os << text;
      else write_text_file(out_path, text);
    };
  });

  Result result;
  std::ostringstream out, err;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
  }
  try {
    action(out);
  } catch (const gofk::ParseError& e) {
    err << "error: " << e.what() << "\n";
    result.code = kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    result.code = kExitDomain;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    result.code = kExitDomain;
  }
  result.out = out.str();
  result.err = err.str();
  return result;
}

}  // namespace gofk::cli
