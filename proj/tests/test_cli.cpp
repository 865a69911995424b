#include "doctest.h"

#include <sstream>

#include <nlohmann/json.hpp>

#include "ordnot/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ordnot::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(ORDNOT_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("ordinal verbs") {
  CHECK(run({"ord", "nprod", "w+1", "w+1"}).out == "w^2 + w*2 + 1\n");
  CHECK(run({"ord", "tower", "2"}).out == "w^w\n");
  CHECK(run({"ord", "cmp", "w^w", "w^3"}).out == ">\n");
  CHECK(run({"ord", "cmp", "w+1", "w*2"}).out == "<\n");
  CHECK(run({"ord", "add", "1", "w"}).out == "w\n");
  CHECK(run({"ord", "mul", "w+1", "w"}).out == "w^2\n");
  CHECK(run({"ord", "nsum", "w+1", "w"}).out == "w*2 + 1\n");
  CHECK(run({"ord", "pow", "w+1", "2"}).out == "w^2 + w + 1\n");
  CHECK(run({"ord", "pow", "w"}).out == "w^w\n");
}

TEST_CASE("wop verbs") {
  CHECK(run({"wop", "gplus", "w+1"}).out == "w^2\n");
  CHECK(run({"wop", "gtimes", "2"}).out == "w\n");
  CHECK(run({"wop", "approx", "w*3+5", "w"}).out == "2\n");
}

TEST_CASE("term verbs") {
  CHECK(run({"g", "enum", "--max-size", "2", "--carrier", "x"}).out == "0\nc(x)\nth(W^w*c(x))\n");
  CHECK(run({"g", "cmp", "c(0)", "th(W^w*c(0))"}).out == "<\n");
  CHECK(run({"g", "wf", "th(W^w*c(1) + W^0*c(2))"}).out == "true\n");
  CHECK(run({"g", "wf", "th(W^w*c(1) + W^0*0)"}).out.rfind("false root.tail[0].coeff", 0) == 0);
  CHECK(run({"g", "cmp", "th(W^w*c(1) + W^0*0)", "0"}).code == 1);
  CHECK(run({"g", "enum", "--max-size", "6", "--budget", "5"}).code == 3);
}

TEST_CASE("tree verbs") {
  const auto r = run({"tree", "embed", "q[q[]]", "q[q[],q[]]", "--qo", data("single.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  CHECK(run({"tree", "embed", "q[q[],q[]]", "q[q[]]"}).out == "false\n");
  CHECK(run({"tree", "deg", "q[q[q[],q[],q[]]]"}).out == "3\n");
  CHECK(run({"tree", "whistle", "q[]", "q[q[]]"}).out == "(0,1)\n");
  CHECK(run({"tree", "whistle", "q[q[],q[]]", "q[q[]]"}).out == "none\n");
  CHECK(run({"tree", "enum", "--max-nodes", "3", "--qo", data("single.json")}).out ==
        "q[]\nq[q[]]\nq[q[],q[]]\nq[q[q[]]]\n");
  CHECK(run({"tree", "embed", "q[", "q[]"}).code == 2);
}

TEST_CASE("quasi-order verbs") {
  const auto p = run({"qo", "product", data("chain2.json"), data("chain2.json")});
  CHECK(p.code == 0);
  const auto j = nlohmann::json::parse(p.out);
  CHECK(j["carrier"].size() == 4);
  CHECK(run({"qo", "badmax", data("antichain2.json")}).out == "2 [b,a]\n");
  CHECK(run({"qo", "kb", data("antichain2.json")}).out == "[a,b]\n[a]\n[b,a]\n[b]\n[]\n");
  CHECK(run({"qo", "goodpair", data("chain2.json"), "b,a,b"}).out == "(0,2)\n");
  CHECK(run({"qo", "goodpair", data("chain2.json"), "b,a"}).out == "none\n");
  CHECK(run({"qo", "goodpair", data("chain2.json"), "b,a,a,b"}).out == "(0,3)\n");
  CHECK(run({"qo", "nfold", data("chain2.json"), "--n", "3", "--mode", "dunion"}).code == 0);
  CHECK(run({"qo", "nfold", data("chain2.json"), "--mode", "max"}).code == 2);
  CHECK(run({"qo", "badmax", "/nonexistent.json"}).code == 2);
  CHECK(run({"qo", "goodpair", data("chain2.json"), "a,z"}).code == 1);
}

TEST_CASE("ramsey verbs") {
  CHECK(run({"ramsey", "colour", data("antichain2.json"), "(a,b),(b,a)"}).out == "(0,1):0\n");
  CHECK(run({"ramsey", "colour", data("chain2.json"), "(a,a),(b,b)"}).code == 1);
  CHECK(run({"ramsey", "homog", "(0,1):0 (0,2):1 (1,2):0", "--size", "2"}).out == "0,1\n");
  CHECK(run({"ramsey", "homog", "(0,1):0 (0,2):1 (1,2):0", "--size", "3"}).out == "none\n");
  CHECK(run({"ramsey", "pigeon", "0,1,0,0", "--k", "2"}).out == "0: 0,2,3\n");
  CHECK(run({"ramsey", "order", "1,0", "--m", "2"}).out == "alpha: 1,0\nseq: (0,0) (1,1)\n");
}

TEST_CASE("suite verbs") {
  const auto a = run({"suite", "run", "--suite", "qo-longest-bad"});
  const auto b = run({"suite", "run", "--suite", "qo-longest-bad"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["suite"] == "qo-longest-bad");
  CHECK(j["violations"].empty());
  CHECK_FALSE(j.contains("wall_ms"));
  CHECK(nlohmann::json::parse(run({"suite", "run", "--suite", "kb-linearization", "--timing"}).out)
            .contains("wall_ms"));
  CHECK(run({"suite", "run", "--suite", "g-order", "--budget", "1000"}).code == 3);
  CHECK(run({"suite", "run", "--suite", "nope"}).code == 1);
  CHECK(run({"suite", "list"}).out.find("round-trip") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"ord", "add", "w"}).code == 2);
  CHECK(run({"ord", "add", "w+", "1"}).code == 2);
  CHECK(run({"ord", "tower", "0"}).code == 1);
  CHECK(run({"wop", "approx", "w^w", "w"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
