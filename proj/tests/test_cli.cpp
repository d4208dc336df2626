#include <filesystem>

#include "cli.hpp"
#include "doctest.h"
#include "gofk/io.hpp"

using gofk::cli::run;

namespace {
std::string fixture(const std::string& file) { return (gofk::fixture_dir() / file).string(); }
}  // namespace

TEST_CASE("census table") {
  const auto r = run({"census", "L(4,1)"});
  CHECK(r.code == 0);
  CHECK(r.out.find("family: iv") != std::string::npos);
  CHECK(r.out.find("total: 3") != std::string::npos);
  CHECK(r.out.find("[[1,4],[1,5]]") != std::string::npos);
  CHECK(r.out.find("[[-2,3],[-3,4]]") != std::string::npos);
}

TEST_CASE("census records") {
  const auto r = run({"census", "S3", "--format", "records"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "manifold=S3\n"
        "entry=1\tdescriptor=plumb(1,-1)\tmatrix=[[1,1],[-1,0]]\ttype=finite-order\ttrace=1\tfigure=fig35\n"
        "entry=2\tdescriptor=plumb(1,1)\tmatrix=[[1,1],[1,2]]\ttype=anosov\ttrace=3\tfigure=fig35\n"
        "total=2\n");
}

TEST_CASE("census errors") {
  CHECK(run({"census", "L(6,3)"}).code == gofk::cli::kExitDomain);
  CHECK(run({"census", "L(6"}).code == gofk::cli::kExitUsage);
  CHECK(run({"census", "S3", "--format", "xml"}).code == gofk::cli::kExitUsage);
  CHECK(run({}).code == gofk::cli::kExitUsage);
  CHECK(run({"--help"}).code == gofk::cli::kExitOk);
}

TEST_CASE("homeo") {
  CHECK(run({"homeo", "L(7,3)", "L(7,5)"}).out == "true\n");
  CHECK(run({"homeo", "L(7,2)", "L(7,5)"}).out == "true\n");
  CHECK(run({"homeo", "L(7,2)", "L(7,5)", "--oriented"}).out == "false\n");
}

TEST_CASE("conjugate") {
  const auto r = run({"conjugate", "[[1,1],[0,1]]", "[[1,-1],[0,1]]"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("conjugate witness", 0) == 0);
  CHECK(run({"conjugate", "[[1,1],[0,1]]", "[[2,1],[1,1]]"}).out.rfind("not-conjugate trace", 0) == 0);
  CHECK(run({"conjugate", "[[2,0],[0,1]]", "[[1,0],[0,1]]"}).code == gofk::cli::kExitDomain);
}

TEST_CASE("plumb accepts negative twists") {
  const auto r = run({"plumb", "3", "-2"});
  CHECK(r.code == 0);
  CHECK(r.out == "L(3,1)#L(2,1)  [[1,3],[-2,-5]]  anosov\n");
  CHECK(run({"plumb", "3", "2"}).out == "L(3,1)#L(2,1)  [[1,3],[2,7]]  anosov\n");
  CHECK(run({"plumb", "1", "-1"}).out == "S3  [[1,1],[-1,0]]  finite-order\n");
}

TEST_CASE("word") {
  CHECK(run({"word", "reduce", "xXyY"}).out == "(empty)\n");
  CHECK(run({"word", "reduce", "yxyY"}).out == "xy\n");
  CHECK(run({"word", "commutator", "xXxyXY"}).out == "true\n");
  CHECK(run({"word", "frobnicate", "xy"}).code == gofk::cli::kExitUsage);
  CHECK(run({"word", "reduce", "xq"}).code == gofk::cli::kExitUsage);
}

TEST_CASE("gof-check") {
  const auto yes = run({"gof-check", "--diagram", fixture("fig31.diagram.json"), "--curve", fixture("fig31.curve.json")});
  CHECK(yes.code == 0);
  CHECK(yes.out.rfind("gof: true\n", 0) == 0);
  const auto no = run({"gof-check", "--diagram", fixture("reducing-s3.diagram.json"), "--curve",
                       fixture("reducing-s3.curve.json")});
  CHECK(no.out == "gof: false\nV: (empty)\nW: (empty)\n");
  CHECK(run({"gof-check", "--diagram", "/nonexistent.json", "--curve", "/nonexistent.json"}).code ==
        gofk::cli::kExitDomain);
}

TEST_CASE("search") {
  const auto r = run({"search", "--manifold", "S2xS1#S2xS1", "--max-crossings", "8", "--limit", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("found: 52") != std::string::npos);
  CHECK(r.out.find("\n2  V=") != std::string::npos);
  CHECK(r.out.find("\n3  V=") == std::string::npos);
  CHECK(run({"search", "--manifold", "S3"}).code == gofk::cli::kExitUsage);
}

TEST_CASE("render and diagram write files") {
  const auto dir = std::filesystem::temp_directory_path() / "gofk_cli_test";
  std::filesystem::create_directories(dir);
  const auto svg = (dir / "fig16.svg").string();
  CHECK(run({"render", "--diagram", fixture("fig16.diagram.json"), "--curve", fixture("fig16.curve.json"), "-o", svg})
            .code == 0);
  CHECK(gofk::read_text_file(svg).rfind("<svg", 0) == 0);

  const auto json = (dir / "l52.json").string();
  CHECK(run({"diagram", "L(5,2)", "-o", json}).code == 0);
  CHECK(gofk::load_diagram(json).manifold() == gofk::Manifold3::lens(5, 2));
  CHECK(run({"diagram", "S3"}).out.find("\"gofk-diagram\"") != std::string::npos);
  std::filesystem::remove_all(dir);
}
