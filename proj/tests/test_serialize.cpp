#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ladder/cli.hpp"
#include "ladder/errors.hpp"
#include "ladder/group.hpp"
#include "ladder/serialize.hpp"
#include "ladder/transform.hpp"
#include "test_support.hpp"

using namespace ladder;
using ladder::testing::Rng;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

/// Fresh scratch directory, removed on destruction.
struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("transform-engine-tests-" + std::to_string(++counter));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct CoutCapture {
  std::ostringstream oss;
  std::streambuf* old;
  CoutCapture() : old(std::cout.rdbuf(oss.rdbuf())) {}
  ~CoutCapture() { std::cout.rdbuf(old); }
  std::string str() const { return oss.str(); }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

ExactComplex rc(int num, int den) { return ExactComplex(rat_frac(num, den)); }

GroupElementX compact_11() {
  CMatX m(2, 2);
  m.at(0, 0) = ExactComplex(rat_frac(3, 5), rat_frac(4, 5));
  m.at(1, 1) = ExactComplex(Rational(0), Rational(1));
  return {1, 1, std::move(m)};
}

GroupElementX boost_11() {
  CMatX m(2, 2);
  m.at(0, 0) = rc(5, 4);
  m.at(0, 1) = rc(3, 4);
  m.at(1, 0) = rc(3, 4);
  m.at(1, 1) = rc(5, 4);
  return {1, 1, std::move(m)};
}

}  // namespace

TEST_CASE("polynomial JSON round trips are bit-exact") {
  Rng rng(551);
  for (int trial = 0; trial < 10; ++trial) {
    int q = rng.int_in(1, 4);
    int n = rng.int_in(0, 3);
    FockPoly f = rng.pure_grade(1, q, n, 8, 10);
    json j = fock_to_json(f);
    // Through text and back, as a file on disk would travel.
    FockPoly back = fock_from_json(json::parse(j.dump()));
    REQUIRE(back == f);
  }
}

TEST_CASE("section JSON round trips are bit-exact") {
  Rng rng(552);
  for (int trial = 0; trial < 8; ++trial) {
    int q = rng.int_in(1, 3);
    int n = rng.int_in(0, 2);
    DiskSection s = phi(rng.pure_grade(1, q, n, 6, 8));
    json j = section_to_json(s);
    DiskSection back = section_from_json(json::parse(j.dump()));
    REQUIRE(back == s);
  }
}

TEST_CASE("group element JSON round trips are bit-exact") {
  for (const GroupElementX& g : {compact_11(), boost_11()}) {
    json j = group_to_json(g);
    GroupElementX back = group_from_json(json::parse(j.dump()));
    REQUIRE(back.p == g.p);
    REQUIRE(back.q == g.q);
    REQUIRE(back.mat == g.mat);
    REQUIRE(group_to_json(back) == j);
  }
}

TEST_CASE("malformed polynomial JSON is rejected with a validation error") {
  auto reject = [](const char* text) {
    CAPTURE(text);
    REQUIRE_THROWS_AS(fock_from_json(json::parse(text)), validation_error);
  };
  reject(R"([1,2,3])");                                             // not an object
  reject(R"({"q":1,"terms":[]})");                                  // missing p
  reject(R"({"p":1,"q":1})");                                       // missing terms
  reject(R"({"p":0,"q":1,"terms":[]})");                            // bad shape
  reject(R"({"p":1,"q":1,"terms":{}})");                            // terms not array
  reject(R"({"p":1,"q":1,"terms":[{"l":[1,2],"m":[0],"re":"1/1","im":"0/1"}]})");  // l length
  reject(R"({"p":1,"q":1,"terms":[{"l":[-1],"m":[0],"re":"1/1","im":"0/1"}]})");   // negative
  reject(R"({"p":1,"q":1,"terms":[{"l":[1],"m":[0],"re":1.5,"im":"0/1"}]})");      // re not string
  reject(R"({"p":1,"q":1,"terms":[{"l":[1],"m":[0],"re":"1//2","im":"0/1"}]})");   // bad rational
  reject(R"({"p":1,"q":1,"terms":[{"l":[1],"m":[0],"re":"1/0","im":"0/1"}]})");    // zero denom
}

TEST_CASE("malformed section JSON is rejected with a validation error") {
  auto reject = [](const char* text) {
    CAPTURE(text);
    REQUIRE_THROWS_AS(section_from_json(json::parse(text)), validation_error);
  };
  reject(R"({"p":1,"q":2,"n":1})");  // missing components
  reject(R"({"p":1,"q":2,"n":1,"components":[{"eta":[1,1],"poly":[]}]})");  // |eta| != n
  reject(R"({"p":1,"q":2,"n":1,"components":[{"eta":[1],"poly":[]}]})");    // eta length
  reject(
      R"({"p":1,"q":2,"n":1,"components":[{"eta":[1,0],
          "poly":[{"gamma":[[1,0],[0,1]],"re":"1/1","im":"0/1"}]}]})");  // too many gamma rows
  reject(
      R"({"p":1,"q":2,"n":1,"components":[{"eta":[1,0],
          "poly":[{"gamma":[1,0],"re":"1/1","im":"0/1"}]}]})");  // gamma not nested
}

TEST_CASE("malformed group JSON is rejected with a validation error") {
  auto reject = [](const char* text) {
    CAPTURE(text);
    REQUIRE_THROWS_AS(group_from_json(json::parse(text)), validation_error);
  };
  reject(R"({"p":1,"q":1,"matrix":[[["1/1","0/1"]]]})");  // wrong matrix shape
  reject(R"({"p":1,"q":1,"matrix":[[["1/1","0/1"],"x"],[["0/1","0/1"],["1/1","0/1"]]]})");
  reject(R"({"p":1,"q":1,"matrix":[[["1/1"],["0/1","0/1"]],[["0/1","0/1"],["1/1","0/1"]]]})");
}

TEST_CASE("file helpers map failures to the right exception types") {
  TempDir tmp;
  REQUIRE_THROWS_AS(load_json(tmp.file("missing.json")), io_error);

  write_text(tmp.file("garbage.json"), "this is { not json");
  REQUIRE_THROWS_AS(load_json(tmp.file("garbage.json")), validation_error);

  // Writing into a directory that does not exist cannot open the stream.
  REQUIRE_THROWS_AS(save_json(tmp.file("no/such/dir/out.json"), json::object()), io_error);

  json j = fock_to_json(ball_monomial(2, MultiIndex{1, 1}, 1));
  save_json(tmp.file("f.json"), j);
  REQUIRE(load_json(tmp.file("f.json")) == j);
}

TEST_CASE("command line drives transform, inversion, pairing and the group action") {
  TempDir tmp;
  const std::string f_path = tmp.file("f.json");
  const std::string s_path = tmp.file("s.json");
  const std::string back_path = tmp.file("back.json");

  FockPoly f = ball_monomial(3, MultiIndex{1, 3, 1}, 2);
  save_json(f_path, fock_to_json(f));

  REQUIRE(run_cli({"transform", "--input", f_path, "--output", s_path}) == 0);
  DiskSection s = section_from_json(load_json(s_path));
  REQUIRE(s == phi(f));

  REQUIRE(run_cli({"invert", "--input", s_path, "--output", back_path}) == 0);
  REQUIRE(fock_from_json(load_json(back_path)) == f);

  {
    CoutCapture cap;
    REQUIRE(run_cli({"pair", "--input", s_path, "--input2", s_path}) == 0);
    REQUIRE(cap.str() == "36/1\n");
  }
  {
    CoutCapture cap;
    REQUIRE(run_cli({"check-minors", "--input", s_path}) == 0);
    REQUIRE(cap.str().find("all minors annihilate: yes") != std::string::npos);
  }
}

TEST_CASE("command line applies block-diagonal unitary elements") {
  TempDir tmp;
  const std::string g_path = tmp.file("k.json");
  const std::string f_path = tmp.file("f.json");
  const std::string out_path = tmp.file("kf.json");

  GroupElementX k = compact_11();
  save_json(g_path, group_to_json(k));
  FockPoly f = ball_monomial(1, MultiIndex{3}, 1);
  save_json(f_path, fock_to_json(f));

  REQUIRE(run_cli({"act", "--group", g_path, "--input", f_path, "--output", out_path}) == 0);
  REQUIRE(fock_from_json(load_json(out_path)) == sigma_compact(k, f));
}

TEST_CASE("command line exit codes distinguish failure classes") {
  TempDir tmp;

  // 1: unreadable input file.
  REQUIRE(run_cli({"transform", "--input", tmp.file("missing.json")}) == 1);

  // 2: bytes that are not JSON, and mismatched shape overrides.
  write_text(tmp.file("bad.json"), "{{{");
  REQUIRE(run_cli({"transform", "--input", tmp.file("bad.json")}) == 2);

  const std::string f_path = tmp.file("f.json");
  save_json(f_path, fock_to_json(ball_monomial(2, MultiIndex{1, 0}, 1)));
  REQUIRE(run_cli({"transform", "--input", f_path, "--output", tmp.file("s.json"), "--q", "3"}) ==
          2);

  // 2: unknown flags are a usage error.
  REQUIRE(run_cli({"transform", "--no-such-flag"}) == 2);

  // 3: inversion outside p = 1.
  DiskSection wide = section_zero(2, 2, 0);
  section_add_term(wide, MultiIndex{0, 0}, MatrixIndex(2, 2), ExactComplex(1));
  save_json(tmp.file("wide.json"), section_to_json(wide));
  REQUIRE(run_cli({"invert", "--input", tmp.file("wide.json")}) == 3);

  // 3: exact action of an element that moves the origin.
  save_json(tmp.file("boost.json"), group_to_json(boost_11()));
  save_json(tmp.file("one.json"), fock_to_json(ball_monomial(1, MultiIndex{1}, 1)));
  REQUIRE(run_cli({"act", "--group", tmp.file("boost.json"), "--input", tmp.file("one.json"),
                   "--output", tmp.file("acted.json")}) == 3);

  // 2: a matrix that fails the indefinite unitarity relation.
  CMatX not_unitary = CMatX::identity(2);
  not_unitary.at(0, 0) = ExactComplex(2);
  save_json(tmp.file("notg.json"), group_to_json(GroupElementX{1, 1, std::move(not_unitary)}));
  REQUIRE(run_cli({"act", "--group", tmp.file("notg.json"), "--input", tmp.file("one.json"),
                   "--output", tmp.file("acted.json")}) == 2);
}

TEST_CASE("demo command runs its worked example clean") {
  CoutCapture cap;
  REQUIRE(run_cli({"demo"}) == 0);
  REQUIRE(cap.str().find("all checks passed") != std::string::npos);
}
