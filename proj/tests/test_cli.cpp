#include <doctest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cuspcount::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kData = CUSPCOUNT_DATA_DIR;

}  // namespace

TEST_CASE("class-sum on P^1 with two points prints 1") {
  const Result r = run({"class-sum", kData + "/p1-2pts.json", "--group", "SL:4", "--q", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  CHECK(run({"class-sum", kData + "/p1-2pts.json", "--group", "Sp:6", "--base-change", "3"}).out == "1\n");
}

TEST_CASE("census of Sp_4 over F_3 lists the six gl-free types") {
  const Result r = run({"census", "--group", "Sp:4", "--q", "3"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "type,count\n"
        "2/0/-/-,2\n"
        "1/1/-/-,1\n"
        "1/0/1:1/-,2\n"
        "0/0/1:1+1:1/-,0\n"
        "0/0/1:2/-,1\n"
        "0/0/2:1/-,2\n");
}

TEST_CASE("motive prints the factored determinant") {
  CHECK(run({"motive", R"({"Sp":4})"}).out == "(1 - t*q)(1 - t*q^3)\n");
  CHECK(run({"motive", R"({"SL":2})", "--expanded"}).out == "1 - t*q\n");
}

TEST_CASE("lfun prints an exact rational") {
  const Result r = run({"lfun", R"({"q":2,"s_degrees":[1,1]})", R"({"SL":2})"});
  CHECK(r.code == 0);
  CHECK(r.out == "1/3\n");
}

TEST_CASE("certificate emits JSON and succeeds") {
  const Result r = run({"certificate", "--family", "sp", "--params", R"({"n":2,"parity":"even","r":1})"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"all_passed\": true") != std::string::npos);
  CHECK(run({"certificate", "--family", "sl-prime", "--ell", "5", "--r", "2"}).code == 0);
}

TEST_CASE("lefschetz transform") {
  const Result r = run({"lefschetz", "--op", "fN", "--f", "chi:2", "-N", "3", "--eval", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"0\",\n    \"2\",\n    \"0\",\n    \"2\",\n    \"0\",\n    \"8\"") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({"class-sum", R"({"q":2,)", "--group", "SL:2"}).code == 2);
  CHECK(run({"motive", R"({"SL":"x"})"}).code == 2);
  CHECK(run({"census", "--group", "Sp:8", "--q", "9", "--budget", "100"}).code == 3);
  CHECK(run({"certificate", "--family", "sl-general", "--n", "4", "--r", "9"}).code == 1);
  CHECK(run({"frobnicate"}).code != 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"certificate", "--family", "sl-general", "--n", "6", "--r", "1"};
  CHECK(run(args).out == run(args).out);
}
