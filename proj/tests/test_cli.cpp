#include <cstdlib>
#include <doctest.h>
#include <json.hpp>
#include <sstream>

#include "massform/cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = massform::cli::run(args, out, err);
  return Run{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check emits the dihedral wreath polynomial") {
  const Run r = cli({"check", "--group", "wr(S2,S2)", "--counting", "wreath(perm,perm)"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["formula_exists"] == true);
  CHECK(j["polynomial"] == json::array({8, 16, 16}));
  CHECK(j["group"]["order"] == 8);
  CHECK(j["group"]["degree"] == 4);
  CHECK(j["group"]["expr"] == "wr(S2,S2)");
  CHECK(j["modulus"] == 8);
  CHECK(j["results"].size() == 4);
  CHECK(j["counting"] == "wreath(perm,perm)");
}

TEST_CASE("mass by type reproduces the order-18 counterexample stratum") {
  const std::vector<std::string> base{"mass", "--group",
                                      "custom(6; (1 2 3), (4 5 6), (2 3)(5 6))",
                                      "--counting", "perm", "--by", "type"};

  auto with_residue = base;
  with_residue.push_back("--residue");
  with_residue.push_back("2");
  const Run r2 = cli(with_residue);
  REQUIRE(r2.code == 0);
  const json j2 = json::parse(r2.out);
  bool found = false;
  for (const auto& s : j2["results"][0]["strata"]) {
    if (s["key"] == "1^3 2^1 1^1") {
      CHECK(s["coeffs"] == json::array({0, 0, 36}));
      found = true;
    }
  }
  CHECK(found);

  with_residue.back() = "1";
  const Run r1 = cli(with_residue);
  REQUIRE(r1.code == 0);
  const json j1 = json::parse(r1.out);
  for (const auto& s : j1["results"][0]["strata"])
    CHECK(s["key"] != "1^3 2^1 1^1");
}

TEST_CASE("strata coefficients sum to the total") {
  const Run r = cli({"mass", "--group", "wr(S2,S3)", "--counting", "wreath(perm,perm)",
                     "--residue", "5", "--by", "wreath-type"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  std::vector<long long> sum;
  for (const auto& s : j["results"][0]["strata"]) {
    const auto coeffs = s["coeffs"].get<std::vector<long long>>();
    if (coeffs.size() > sum.size()) sum.resize(coeffs.size(), 0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) sum[k] += coeffs[k];
  }
  CHECK(sum == j["results"][0]["total"].get<std::vector<long long>>());
}

TEST_CASE("reference sn emits the partition coefficients") {
  const Run r = cli({"reference", "sn", "--n", "4"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["coefficients"] == json::array({1, 1, 2, 1}));
}

TEST_CASE("rational subcommand") {
  const Run yes = cli({"rational", "--group", "S5"});
  REQUIRE(yes.code == 0);
  CHECK(json::parse(yes.out)["rational_character_table"] == true);

  const Run no = cli({"rational", "--group", "custom(3; (1 2 3))"});
  CHECK(json::parse(no.out)["rational_character_table"] == false);
}

TEST_CASE("ambient subcommand reproduces a table row") {
  const Run r = cli({"ambient", "--group", "custom(4; (1 2 3 4))", "--target",
                     "custom(4; (1 2 3 4), (1 3))", "--in", "S4"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["j"] == 8);
  CHECK(j["k"] == 4);
}

TEST_CASE("catalog subcommand lists the built-ins") {
  const Run r = cli({"catalog"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.is_array());
  CHECK(j.size() >= 12);
  bool saw_d4 = false;
  for (const auto& e : j)
    if (e["name"] == "D4") {
      saw_d4 = true;
      CHECK(e["order"] == 8);
      CHECK(e["rational"] == true);
    }
  CHECK(saw_d4);
}

TEST_CASE("exit codes") {
  CHECK(cli({"mass", "--group", "wr(S2", "--counting", "perm"}).code == 2);
  CHECK(cli({"mass", "--group", "S4", "--counting", "wreath(perm,perm)"}).code == 3);
  CHECK(cli({"mass", "--group", "S4", "--counting", "perm", "--by", "wreath-type"}).code == 3);
  CHECK(cli({"mass", "--group", "S8", "--counting", "perm"}).code == 4);
  CHECK(cli({"mass", "--group", "S3", "--counting", "perm", "--residue", "0"}).code == 5);
  CHECK(cli({"mass", "--group", "S3", "--counting", "perm", "--residue", "nope"}).code == 5);
  CHECK(cli({"check", "--group", "wr(S2,S2)", "--counting", "signed"}).code == 0);

  // diagnostics are one line on stderr
  const Run r = cli({"mass", "--group", "wr(S2", "--counting", "perm"});
  CHECK(r.err.find("parse error") != std::string::npos);
}

TEST_CASE("help is printed on stdout with exit code 0") {
  const Run r = cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("massform") != std::string::npos);
  CHECK(r.out.find("mass") != std::string::npos);
}

TEST_CASE("mass defaults to residue 1 and reports a single result") {
  const Run r = cli({"mass", "--group", "S3", "--counting", "perm"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["residue"] == 1);
  CHECK(j["results"][0]["total"] == json::array({6, 6, 6}));
  CHECK(j["results"][0].count("strata") == 0);
}

TEST_CASE("product-type strata render composite keys") {
  const Run r = cli({"mass", "--group", "x(S2,S2)", "--counting", "sum(perm,perm)",
                     "--by", "product-type"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  bool saw_pair_key = false;
  for (const auto& s : j["results"][0]["strata"])
    if (s["key"].get<std::string>().find(" | ") != std::string::npos) saw_pair_key = true;
  CHECK(saw_pair_key);
}

TEST_CASE("image strata carry generator labels") {
  const Run r = cli({"mass", "--group", "wr(S2,S2)", "--counting", "perm", "--by",
                     "image"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  bool saw_trivial = false;
  for (const auto& s : j["results"][0]["strata"])
    if (s["key"] == "order=1 gens=()") {
      saw_trivial = true;
      CHECK(s["coeffs"] == json::array({1}));
    }
  CHECK(saw_trivial);
}

TEST_CASE("the order cap can be widened") {
  CHECK(cli({"mass", "--group", "S8", "--counting", "zero", "--max-order", "50000",
             "--residue", "1"}).code == 0);
}

TEST_CASE("the order cap honors the environment variable") {
  setenv("MASSFORM_MAX_ORDER", "100", 1);
  CHECK(cli({"mass", "--group", "S5", "--counting", "perm"}).code == 4);
  CHECK(cli({"mass", "--group", "S5", "--counting", "perm", "--max-order", "200"}).code == 0);
  unsetenv("MASSFORM_MAX_ORDER");
  CHECK(cli({"mass", "--group", "S5", "--counting", "perm"}).code == 0);
}

TEST_CASE("output is byte-deterministic") {
  const std::vector<std::string> args{"mass", "--group", "wr(S2,S2)", "--counting",
                                      "perm", "--residue", "all", "--by", "image"};
  const Run a = cli(args);
  const Run b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("text format renders the polynomial") {
  const Run r = cli({"--format", "text", "check", "--group", "wr(S2,S2)", "--counting",
                     "perm"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("8 + 8x + 16x^2 + 8x^3") != std::string::npos);
  CHECK(r.out.find("formula exists: yes") != std::string::npos);
  CHECK(r.out.find("note: Tame masses only") != std::string::npos);
}
