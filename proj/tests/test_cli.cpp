#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "fixtures.hpp"
#include "semispace/commands.hpp"
#include "semispace/errors.hpp"

using namespace semispace;

namespace {

Json ex_problem(bool with_u = false) {
  Json j;
  j["matrix"] = Json::array({Json::array({1, 0, 0, 1, 1}), Json::array({0, 1, 0, 1, 0}),
                             Json::array({0, 0, 1, 0, 1})});
  j["I"] = Json::array({1, 2, 3});
  if (with_u) j["u"] = Json::array({"0", "0", "1", "2", "2"});
  j["seed"] = 5;
  return j;
}

int run_cli(const std::string& args, const Json& problem, std::string* out_path = nullptr) {
  const std::string input = "/tmp/semispace_problem.json";
  {
    std::ofstream f(input);
    f << problem.dump();
  }
  const std::string output = "/tmp/semispace_out.txt";
  if (out_path) *out_path = output;
  const std::string cmd = std::string(SEMISPACE_BIN) + " " + args + " --input " + input +
                          " > " + output + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("problem parsing validates its input") {
  CHECK_THROWS_AS(parse_problem(Json::object()), InputError);

  Json ragged = ex_problem();
  ragged["matrix"][1] = Json::array({1, 2});
  CHECK_THROWS_AS(parse_problem(ragged), InputError);

  Json bad_elem = ex_problem();
  bad_elem["I"] = Json::array({0});
  CHECK_THROWS_AS(parse_problem(bad_elem), InputError);

  Json bad_w = ex_problem();
  bad_w["w"] = Json::array({1, 1, 2, 3, 4});
  CHECK_THROWS_AS(parse_problem(bad_w), PreconditionError);

  ProblemInput in = parse_problem(ex_problem());
  CHECK(in.n() == 5);
  CHECK(in.i_set == 0b111);
  CHECK(in.weight_or_default() == qvec_from_ints({1, 2, 3, 4, 5}));
  CHECK(in.seed == 5);
}

TEST_CASE("JSON round trips") {
  SUBCASE("rationals and vectors") {
    QVector v = {rat_parse("1/3"), rat_parse("-7"), rat_parse("0")};
    CHECK(qvector_from_json(qvector_to_json(v)) == v);
  }
  SUBCASE("matrices") {
    QMatrix m = fixtures::ex42_matrix();
    CHECK(qmatrix_from_json(qmatrix_to_json(m)).rows == m.rows);
  }
  SUBCASE("matroids") {
    Matroid m = matroid_from_matrix(fixtures::ex42_matrix());
    Matroid back = matroid_from_json(matroid_to_json(m));
    CHECK(back.n == m.n);
    CHECK(back.rank == m.rank);
    CHECK(back.circuits == m.circuits);
  }
  SUBCASE("polynomials") {
    Poly f(3);
    f.add_term({1, 0, 2}, rat_parse("3/7"));
    f.add_term({0, 0, 0}, rat_parse("-2"));
    CHECK(poly_from_json(poly_to_json(f), 3) == f);
  }
}

TEST_CASE("command outputs") {
  ProblemInput in = parse_problem(ex_problem(true));

  SUBCASE("matroid") {
    Json j = cmd_matroid(in);
    CHECK(j["n"] == 5);
    CHECK(j["rank"] == 3);
    CHECK(j["circuits"] == Json::array({Json::array({1, 2, 4}), Json::array({1, 3, 5}),
                                        Json::array({2, 3, 4, 5})}));
  }
  SUBCASE("complex") {
    Json j = cmd_complex(in);
    CHECK(j["i_broken_circuits"] ==
          Json::array({Json::array({1, 2, 4}), Json::array({1, 3, 5}),
                       Json::array({2, 3, 5})}));
    Json facets = j["complex"]["facets"];
    REQUIRE(facets.size() == 7);
    CHECK(facets[0] == Json::array({1, 2, 3}));
    CHECK(facets[6] == Json::array({3, 4, 5}));
  }
  SUBCASE("degree, with and without inversions") {
    CHECK(cmd_degree(in)["by_facets"] == 7);
    Json no_inv = ex_problem();
    no_inv["I"] = Json::array();
    CHECK(cmd_degree(parse_problem(no_inv))["by_facets"] == 1);
  }
  SUBCASE("full report asserts the count identity") {
    CommandOptions opts;
    opts.trials = 2;
    Json report = cmd_report(in, opts);
    CHECK(report["theorem_counts_equal"] == true);
    CHECK(report["census"]["qualifying"] == 7);
    CHECK(report["verify_ugb"]["all_passed"] == true);
  }
}

TEST_CASE("report on a uniform instance carries the formula route") {
  Json j;
  j["matrix"] = Json::array({Json::array({1, 1, 1, 1}), Json::array({1, 2, 3, 4})});
  j["I"] = Json::array({1, 2});
  j["u"] = Json::array({3, -1, 5, 9});
  j["seed"] = 8;
  ProblemInput in = parse_problem(j);
  CommandOptions opts;
  opts.trials = 2;
  Json report = cmd_report(in, opts);
  CHECK(report["degree"]["by_formula"] == report["degree"]["by_facets"]);
  CHECK(report["theorem_counts_equal"] == true);
  CHECK(report["verify_ugb"]["all_passed"] == true);
}

TEST_CASE("identical input and seed give byte-identical output") {
  ProblemInput in = parse_problem(ex_problem(true));
  CommandOptions opts;
  opts.trials = 2;
  const std::string first = cmd_report(in, opts).dump();
  const std::string second = cmd_report(in, opts).dump();
  CHECK(first == second);
  CHECK(cmd_verify_ugb(in, opts).dump() == cmd_verify_ugb(in, opts).dump());

  // Emitted JSON re-parses to an equal value.
  CHECK(Json::parse(first) == Json::parse(second));
  CHECK(Json::parse(first).dump() == first);
}

TEST_CASE("CLI binary exit codes") {
  SUBCASE("successful report") {
    std::string out;
    CHECK(run_cli("report --trials 2", ex_problem(true), &out) == 0);
  }
  SUBCASE("malformed input exits 2") {
    Json bad;
    bad["matrix"] = "nope";
    CHECK(run_cli("matroid", bad) == 2);
  }
  SUBCASE("tied weights exit 3") {
    Json tied = ex_problem(true);
    tied["w"] = Json::array({1, 1, 2, 3, 4});
    CHECK(run_cli("complex", tied) == 3);
  }
  SUBCASE("non-generic translation vector exits 3") {
    Json central = ex_problem();
    central["u"] = Json::array({0, 0, 0, 0, 0});
    CHECK(run_cli("regions", central) == 3);
  }
  SUBCASE("loop inside I exits 3 on census commands") {
    Json loopy;
    loopy["matrix"] = Json::array({Json::array({1, 0, 2}), Json::array({0, 0, 1})});
    loopy["I"] = Json::array({2});
    CHECK(run_cli("regions", loopy) == 3);
    // but the complex itself is fine (void) and reports degree 0
    CHECK(run_cli("degree", loopy) == 0);
  }
  SUBCASE("seed override is reflected in the output") {
    std::string out;
    REQUIRE(run_cli("verify-ugb --trials 2 --seed 99", ex_problem(), &out) == 0);
    std::ifstream f(out);
    Json first = Json::parse(f);
    CHECK(first["seed"] == 99);

    REQUIRE(run_cli("verify-ugb --trials 2 --seed 99", ex_problem(), &out) == 0);
    std::ifstream g(out);
    CHECK(Json::parse(g) == first);
  }
  SUBCASE("svg output for a 2-D slice") {
    const std::string svg = "/tmp/semispace_test.svg";
    std::remove(svg.c_str());
    CHECK(run_cli("realpoints --svg " + svg, ex_problem(true)) == 0);
    std::ifstream f(svg);
    REQUIRE(f.good());
    std::string content((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    CHECK(content.find("<svg") != std::string::npos);
  }
}
