#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "logtor/cli.hpp"
#include "logtor/json_io.hpp"

using namespace logtor;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content) {
    path = std::string("/tmp/logtor_test_") + name;
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

const char* kSplit22 = R"({"shape":[1,1],"degree":[2,2],"terms":[
  {"exp":[[2,0],[2,0]],"num":1,"den":1},
  {"exp":[[0,2],[0,2]],"num":1,"den":1}]})";

const char* kSplit22v5 = R"({"shape":[1,1],"degree":[2,2],"terms":[
  {"exp":[[2,0],[2,0]],"num":1,"den":1},
  {"exp":[[0,2],[0,2]],"num":5,"den":1}]})";

const char* kSphere = R"({"dim":2,"matrix":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]})";

}  // namespace

TEST_CASE("json round trip for polynomials") {
  Json j = Json::parse(kSplit22);
  MPoly f = mpoly_from_json(j);
  CHECK(f.term_count() == 2);
  MPoly g = mpoly_from_json(mpoly_to_json(f));
  CHECK(f == g);

  // rationals as strings
  Json frac = Json::parse(R"({"shape":[1,1],"degree":[1,1],"terms":[
    {"exp":[[1,0],[1,0]],"num":"2","den":"6"}]})");
  MPoly h = mpoly_from_json(frac);
  CHECK(h.coeff({1, 0, 1, 0}) == Rational(1, 3));
}

TEST_CASE("distinguish verb on a split pair") {
  TempFile f("f.json", kSplit22);
  TempFile g("g.json", kSplit22v5);
  auto r = run({"distinguish", f.path, g.path});
  CHECK(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["verdict"] == "JacobianIndistinguishable");
  CHECK(rep.contains("warning"));  // (2,2) fails the h1 gate

  // byte-identical reruns
  auto r2 = run({"distinguish", f.path, g.path});
  CHECK(r.out == r2.out);
}

TEST_CASE("apolar verb reproduces the coordinate example") {
  TempFile q("q.json", kSphere);
  TempFile h("h.json", "[0,0,0,1]");
  auto r = run({"apolar", q.path, h.path});
  CHECK(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["apolar_point"] == Json::array({0, 0, 0, 1}));
  CHECK(rep["section_smooth"] == true);
}

TEST_CASE("chern verb on two conics") {
  TempFile arr("arr.json", R"({"curves":[[1,1],[1,1]]})");
  auto r = run({"chern", arr.path});
  CHECK(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["c1"] == Json::array({0, 0}));
  CHECK(rep["c2"] == 2);
  CHECK(rep["chi"] == 0);
}

TEST_CASE("threshold and vanishing verbs") {
  auto r = run({"threshold", "pn", "3"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["threshold"] == 6);

  auto q = run({"threshold", "qn", "2", "2"});
  CHECK(Json::parse(q.out)["threshold"] == 11);

  auto v = run({"vanishing", "--shape", "1,1", "--degree", "2,2"});
  CHECK(v.code == 0);
  CHECK(Json::parse(v.out)["h1"] == 2);
  CHECK(Json::parse(v.out)["vanishes"] == false);
}

TEST_CASE("smooth verb carries provenance") {
  TempFile f("fs.json", kSplit22);
  auto r = run({"smooth", f.path});
  CHECK(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["verdict"] == "Singular");  // corner singularities of the split form
  CHECK(rep["provenance"] == "exact");
}

TEST_CASE("recover verb round trips") {
  TempFile f("fr.json", kSplit22);
  TempFile g("gr.json", kSplit22v5);
  auto r = run({"recover", f.path, g.path});
  CHECK(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["recovered"] == true);
  CHECK((rep["lambda"] == 5 || rep["lambda"] == "1/5"));
}

TEST_CASE("exit codes") {
  // malformed json
  TempFile bad("bad.json", "{not json");
  auto r1 = run({"smooth", bad.path});
  CHECK(r1.code == 1);

  // missing file
  auto r2 = run({"smooth", "/tmp/definitely_missing_logtor.json"});
  CHECK(r2.code == 1);

  // hypothesis violation: recover on bidegree (1,1)
  TempFile conic("conic.json", R"({"shape":[1,1],"degree":[1,1],"terms":[
    {"exp":[[1,0],[1,0]],"num":1,"den":1},{"exp":[[0,1],[0,1]],"num":1,"den":1}]})");
  auto r3 = run({"recover", conic.path, conic.path});
  CHECK(r3.code == 2);
  CHECK(r3.err.find("hypothesis violated") != std::string::npos);

  // singular quadric for apolar
  TempFile sing("sing.json", R"({"matrix":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,0]]})");
  TempFile h("h2.json", "[1,0,0,0]");
  auto r4 = run({"apolar", sing.path, h.path});
  CHECK(r4.code == 2);
}

TEST_CASE("snc and sigma verbs") {
  TempFile arr("arr2.json", R"({"r":3,"hyperplanes":[[1,0,0,0],[0,1,0,0],[0,0,1,0],[1,1,1,0]]})");
  auto r = run({"snc", arr.path});
  CHECK(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["snc"] == false);
  CHECK(rep["witness_subset"].size() == 4);

  auto s = run({"sigma", arr.path});
  CHECK(s.code == 0);
  Json sp = Json::parse(s.out);
  CHECK(sp["count"] == 1);
  CHECK(sp["points"][0] == Json::array({0, 0, 0, 1}));
}

TEST_CASE("splitting and residue verbs") {
  auto r = run({"splitting", "lines", "3", "3"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["summands"] == Json::array({Json::array({1, 0}), Json::array({0, 1})}));

  auto h = run({"splitting", "hyperplanes", "3", "7"});
  Json hr = Json::parse(h.out);
  CHECK(hr["type"] == "steiner");
  CHECK(hr["kernel_rank"] == 3);
  CHECK(hr["middle_rank"] == 6);

  TempFile arr("arr3.json", R"([[1,1],[2,2]])");
  auto rc = run({"residue-check", arr.path});
  CHECK(rc.code == 0);
  CHECK(Json::parse(rc.out)["equal"] == true);
}

TEST_CASE("text format is aligned and deterministic") {
  auto r = run({"--format", "text", "threshold", "qn", "3", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "threshold  7\n");
}

TEST_CASE("pencil verb") {
  TempFile f("fp.json", kSplit22);
  TempFile g("gp.json", kSplit22v5);
  auto r = run({"pencil", f.path, g.path});
  CHECK(r.code == 0);
  Json rep = Json::parse(r.out);
  CHECK(rep["family_singular"] == true);
  CHECK(rep["members"].size() >= 2);

  auto bad = run({"pencil", f.path, f.path});
  CHECK(bad.code == 2);
}
