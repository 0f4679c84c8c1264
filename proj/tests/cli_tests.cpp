// End-to-end tests that drive the kmosaic binary through a shell. The binary
// path comes from the KMOSAIC_BIN environment variable (set by ctest).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "kmosaic/io.hpp"
#include "kmosaic/tangles.hpp"
#include "sample_mosaics.hpp"

namespace fs = std::filesystem;

namespace {

struct run_result {
  std::string out;
  int code;
};

const std::string& binary() {
  static const std::string path = [] {
    const char* env = std::getenv("KMOSAIC_BIN");
    return std::string(env ? env : "./kmosaic");
  }();
  return path;
}

run_result run(const std::string& args) {
  const std::string cmd = "'" + binary() + "' " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[512];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  const int status = ::pclose(pipe);
  return {out, (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1};
}

const fs::path& scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("kmosaic_cli_tests_" + std::to_string(static_cast<long>(::getpid())));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string file_with(const std::string& name, const std::string& content) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

std::string mosaic_file(const std::string& name, const kmosaic::mosaic& m) {
  return file_with(name, kmosaic::write_mosaic(m));
}

}  // namespace

TEST_CASE("validate") {
  const std::string good = mosaic_file("five_two.kmo", samples::five_two_knot());
  auto res = run("validate " + good);
  CHECK(res.code == 0);
  CHECK(res.out == "suitably_connected: true\n");

  const std::string bad = file_with("bad.kmo", "1\n5\n");
  res = run("validate " + bad);
  CHECK(res.code == 1);
  CHECK(res.out == "suitably_connected: false\n");

  const std::string garbage = file_with("garbage.kmo", "this is not a mosaic\n");
  CHECK(run("validate " + garbage).code == 2);
  CHECK(run("validate " + file_with("range.kmo", "1\n11\n")).code == 2);
  CHECK(run("validate /no/such/file").code == 2);
  CHECK(run("validate").code == 2);
  CHECK(run("frobnicate x").code == 2);

  // stdin via "-"
  res = run("validate - < " + good);
  CHECK(res.code == 0);
  CHECK(res.out == "suitably_connected: true\n");

  CHECK(run("validate --json " + good).out == "{\"suitably_connected\":true}\n");
}

TEST_CASE("stats") {
  auto res = run("stats " + mosaic_file("five_two.kmo", samples::five_two_knot()));
  CHECK(res.code == 0);
  CHECK(res.out == "n=5 crossings=5 components=1\n");

  res = run("stats " + mosaic_file("link.kmo", samples::four_crossing_link()));
  CHECK(res.code == 0);
  CHECK(res.out == "n=4 crossings=4 components=2\n");

  res = run("stats " + mosaic_file("blank.kmo", samples::blank(1)));
  CHECK(res.code == 0);
  CHECK(res.out == "n=1 crossings=0 components=0\n");

  // Crossing count still printed for invalid mosaics; components omitted.
  res = run("stats " + file_with("broken.kmo", "2\n9 0\n0 0\n"));
  CHECK(res.code == 1);
  CHECK(res.out == "n=2 crossings=1\n");
}

TEST_CASE("pd") {
  auto res = run("pd " + mosaic_file("five_two.kmo", samples::five_two_knot()));
  CHECK(res.code == 0);
  CHECK(res.out ==
        "{\"pd\":[[9,4,10,5],[3,10,4,1],[5,8,6,9],[1,6,2,7],[7,2,8,3]],"
        "\"skipped_components\":[]}\n");

  const std::string circle = mosaic_file("circle.kmo", samples::circle());
  res = run("pd " + circle);
  CHECK(res.code == 0);
  CHECK(res.out == "{\"pd\":[],\"skipped_components\":[0]}\n");
  CHECK(run("pd --strict " + circle).code == 1);
  CHECK(run("pd " + file_with("invalid.kmo", "1\n5\n")).code == 1);
}

TEST_CASE("jones") {
  const std::string five_two = mosaic_file("five_two.kmo", samples::five_two_knot());
  auto res = run("jones " + five_two);
  CHECK(res.code == 0);
  CHECK(res.out == "1/t - 1/t^2 + 2/t^3 - 1/t^4 + 1/t^5 - 1/t^6\n");

  res = run("jones " + mosaic_file("circle.kmo", samples::circle()));
  CHECK(res.out == "1\n");

  res = run("flip " + five_two);
  REQUIRE(res.code == 0);
  res = run("jones " + file_with("mirror.kmo", res.out));
  CHECK(res.out == "-t^6 + t^5 - t^4 + 2*t^3 - t^2 + t\n");

  CHECK(run("jones --max-crossings 4 " + five_two).code == 1);

  res = run("jones --json " + mosaic_file("blank.kmo", samples::blank(1)));
  CHECK(res.code == 0);
  CHECK(res.out.find("\"display\":\"1\"") != std::string::npos);
}

TEST_CASE("random") {
  auto res = run("random -n 4 --crossings 2 --seed 7");
  CHECK(res.code == 0);
  const auto again = run("random -n 4 --crossings 2 --seed 7");
  CHECK(again.out == res.out);  // byte-identical for a fixed seed
  const kmosaic::mosaic m = kmosaic::parse_mosaic(res.out);
  CHECK(kmosaic::is_suitably_connected(m));
  CHECK(kmosaic::number_of_crossings(m) == 2);

  CHECK(run("random -n 4 --any-tiles --seed 3").code == 0);
  CHECK(run("random -n 2 --crossings 9 --max-attempts 40").code == 1);
  CHECK(run("random --crossings 2").code == 2);  // -n is required
}

TEST_CASE("tangle and join") {
  auto res = run("tangle inf");
  CHECK(res.code == 0);
  CHECK(res.out == "1\n7\n");
  CHECK(run("tangle 0").out == "1\n8\n");
  CHECK(run("tangle -- -2").out == "2\n9 1\n3 9\n");
  CHECK(run("tangle twist").code == 2);

  res = run("join 6 4");
  CHECK(res.code == 0);
  CHECK(res.out == kmosaic::write_mosaic(kmosaic::tangle_join(6, 4)));
  CHECK(run("join 0 4").code == 1);
}

TEST_CASE("zoom and flip") {
  const std::string circle = mosaic_file("circle.kmo", samples::circle());
  auto res = run("zoom " + circle);
  CHECK(res.code == 0);
  CHECK(kmosaic::parse_mosaic(res.out) == kmosaic::zoom(samples::circle()));

  res = run("flip " + circle);
  CHECK(res.code == 0);
  CHECK(kmosaic::parse_mosaic(res.out) == samples::circle());
}

TEST_CASE("count") {
  CHECK(run("count -n 2").out == "2\n");
  CHECK(run("count -n 3").out == "22\n");
  CHECK(run("count -n 3 --limit 5").out == "5\n");
  CHECK(run("count -n 2 --json").out == "{\"count\":2,\"n\":2}\n");
}

TEST_CASE("unknot") {
  const std::string circle = mosaic_file("circle.kmo", samples::circle());
  auto res = run("unknot " + circle);
  CHECK(res.code == 0);
  CHECK(res.out == "unknot: true\nmethod: no_crossings\n");

  const std::string five_two = mosaic_file("five_two.kmo", samples::five_two_knot());
  res = run("unknot " + five_two);
  CHECK(res.code == 1);
  CHECK(res.out == "unknot: false\nmethod: jones_heuristic\n");

  res = run("unknot --oracle 'cat > /dev/null; echo 1' " + five_two);
  CHECK(res.code == 0);
  CHECK(res.out == "unknot: true\nmethod: external_oracle\n");

  CHECK(run("unknot --oracle 'cat > /dev/null; exit 5' " + five_two).code == 3);

  // KMOSAIC_ORACLE provides the default oracle command.
  const std::string env_cmd = "KMOSAIC_ORACLE='cat > /dev/null; echo 1' '" + binary() +
                              "' unknot " + five_two + " 2>/dev/null";
  FILE* pipe = ::popen(env_cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[256];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  CHECK(WEXITSTATUS(::pclose(pipe)) == 0);
  CHECK(out == "unknot: true\nmethod: external_oracle\n");

  // Links are a domain error.
  CHECK(run("unknot " + mosaic_file("link.kmo", samples::four_crossing_link())).code == 1);
}

TEST_CASE("isotopic") {
  const std::string five_two = mosaic_file("five_two.kmo", samples::five_two_knot());
  const std::string zoomed = mosaic_file("zoomed.kmo", kmosaic::zoom(samples::five_two_knot()));
  auto res = run("isotopic " + five_two + " " + zoomed);
  CHECK(res.code == 0);
  CHECK(res.out == "invariants_match: true\nnote: matching invariants are necessary but not "
                   "sufficient for isotopy\n");

  const std::string circle = mosaic_file("circle.kmo", samples::circle());
  res = run("isotopic " + five_two + " " + circle);
  CHECK(res.code == 1);
  CHECK(res.out.find("invariants_match: false") == 0);
}

TEST_CASE("render") {
  const std::string circle = mosaic_file("circle.kmo", samples::circle());
  CHECK(run("render " + circle).out == "┌┐\n└┘\n");
  CHECK(run("render --ascii-only " + circle).out == "r7\nLJ\n");
  const auto svg = run("render --svg " + circle);
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") == 0);
}
