#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "metatheta/cli.hpp"

using metatheta::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("collapse output") {
  auto r = call({"collapse", "7,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"input\":[7,1],\"collapse\":[6,2]}\n");
  CHECK(call({"collapse", "7"}).code == 2);
  CHECK(call({"collapse", "1,3"}).code == 2);
  CHECK(call({"collapse"}).code == 2);
}

TEST_CASE("unknown subcommand") {
  auto r = call({"frobnicate"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Usage") != std::string::npos);
  CHECK(call({}).code == 2);
  CHECK(call({"beta", "--n", "x"}).code == 2);
}

TEST_CASE("help exits cleanly") {
  auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("partition subcommands") {
  CHECK(Json::parse(call({"dominance", "4,2", "3,3"}).out)["relation"] == "greater");
  CHECK(call({"dominance", "4,2", "3"}).code == 2);
  CHECK(Json::parse(call({"gk-dim", "3,3"}).out)["gk_dim"] == "7");
  CHECK(call({"gk-dim", "3,1"}).code == 2);
  auto o = Json::parse(call({"orbit", "--n", "4", "--r", "7"}).out);
  CHECK(o["orbit"] == Json::array({6, 2}));
  CHECK(o["gk_dim"] == "15");
  auto d = call({"dim-check", "--n", "3", "--r", "3"});
  CHECK(d.code == 0);
  CHECK(Json::parse(d.out)["satisfied"] == true);
  CHECK(call({"dim-check", "--n", "3", "--r", "9"}).code == 2);
}

TEST_CASE("matrix subcommands") {
  auto b = call({"build", "w3"});
  CHECK(b.code == 0);
  CHECK(Json::parse(b.out)["symplectic"] == true);
  CHECK(call({"build", "j", "--n", "3", "--r", "3", "--values", "1/2,2"}).code == 0);
  CHECK(call({"build", "j", "--n", "3", "--r", "3", "--values", "1/2"}).code == 2);
  CHECK(call({"build", "embed_sp", "--n", "4", "--r", "3", "--inner", "w0_prime"}).code == 0);
  CHECK(call({"build", "nope"}).code == 2);
  auto t = call({"identity", "descent-weyl", "--n", "3", "--r", "3", "--a", "1"});
  CHECK(t.code == 0);
  CHECK(Json::parse(t.out)["pass"] == true);
  CHECK(call({"identity", "nope", "--n", "3", "--r", "3"}).code == 2);
}

TEST_CASE("character sum subcommands") {
  auto u = Json::parse(call({"unit-integral", "--p", "7", "--n", "3", "--m", "2", "--t", "1"}).out);
  CHECK(u["value"]["is_zero"] == true);
  CHECK(u["value"]["q_exp"] == "-2");
  auto g = Json::parse(call({"gauss", "--p", "7", "--n", "3", "--t", "1"}).out);
  CHECK(g["value"]["modulus"] == 21);
  CHECK(g["value"]["q_exp"] == "-1/2");
  CHECK(call({"gauss", "--p", "9", "--n", "3", "--t", "1"}).code == 2);
  auto h = Json::parse(call({"hilbert", "--p", "7", "--n", "3", "--v1", "1", "--u1", "1", "--v2", "0", "--u2", "3"}).out);
  CHECK(h["symbol"] == 2);
  CHECK(call({"hilbert", "--p", "7", "--n", "3", "--u1", "7"}).code == 2);
}

TEST_CASE("exponent subcommands") {
  CHECK(call({"beta", "--n", "3", "--r", "3", "--a", "1"}).out == "{\"beta\":\"3/2\",\"crosscheck\":true}\n");
  CHECK(call({"beta", "--n", "3", "--r", "3", "--a", "5"}).code == 2);
  auto p = Json::parse(call({"pipeline", "--n", "3"}).out);
  CHECK(p["total"] == "-5/6");
  CHECK(p["pass"] == true);
  CHECK(call({"pipeline", "--n", "4"}).code == 2);
  auto t = Json::parse(call({"theorem2", "--n", "3", "--n1", "0", "--n2", "0"}).out);
  CHECK(t["text"] == "gamma^0*(T(0,0,0) + q^(-5/6)*T(0,0,1))");
  CHECK(t["terms"].size() == 2);
  auto tg = Json::parse(call({"theorem2", "--n", "3", "--with-gauss-factor"}).out);
  CHECK(tg["p"] == 7);
  CHECK(tg["terms"][1]["q_exp"] == "-4/3");
  CHECK(call({"theorem2", "--n", "3", "--n1", "-1"}).code == 2);
}

TEST_CASE("verify subcommand") {
  auto r = call({"verify", "--suite", "identities", "--n", "3"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["failures"] == 0);
  CHECK(call({"verify", "--suite", "bogus"}).code == 2);
  auto pretty = call({"--pretty", "verify", "--suite", "orbits"});
  CHECK(pretty.code == 0);
  CHECK(pretty.out.find("PASS") != std::string::npos);
}
