#include "doctest.h"
#include "latmem/io.hpp"

#include <json.hpp>

using namespace latmem;

namespace {

const char* kAppendixL1 = R"({
  "schema": 1,
  "kind": "cvp",
  "lattice": [[4, 7]],
  "target": [0, 5],
  "norm": {"lp": 1}
})";

const char* kUnitBallLmp = R"({
  "schema": 1,
  "kind": "lmp",
  "lattice": [[1, 0], [0, 1]],
  "body": {"lp_body": {"p": 2, "v_inv": [[1, 0], [0, 1]], "t": ["0", "0"], "alpha": "1"}}
})";

}  // namespace

TEST_CASE("parse and run the appendix fixture") {
    Instance inst = parse_instance(kAppendixL1);
    REQUIRE(inst.kind == Instance::Kind::Cvp);
    CHECK(inst.lattice.rows() == 2);
    CHECK(inst.lattice.cols() == 1);
    std::string out = run_instance(inst, RunOptions{});
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["answer"]["distance_pow"] == "5");
    CHECK(doc["answer"]["closest"][0] == "0");
    CHECK(doc["answer"]["closest"][1] == "0");
    CHECK(doc["stats"].contains("recursive_calls"));
    // round trip: the distance parses back to the exact rational
    CHECK(parse_rat(doc["answer"]["distance_pow"].get<std::string>()) == Rat(5));
}

TEST_CASE("lmp instance") {
    Instance inst = parse_instance(kUnitBallLmp);
    std::string out = run_instance(inst, RunOptions{});
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["answer"] == true);

    std::string report;
    CHECK(check_instance(inst, RunOptions{}, &report));
}

TEST_CASE("svp instance") {
    Instance inst = parse_instance(R"({"kind": "svp", "lattice": [[1, 0], [1000, 1]]})");
    std::string out = run_instance(inst, RunOptions{});
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["answer"]["shortest_sq"] == "1");
}

TEST_CASE("schema diagnostics") {
    CHECK_THROWS_AS(parse_instance("{not json"), ContractError);
    CHECK_THROWS_AS(parse_instance(R"({"kind": "cvp"})"), ContractError);
    CHECK_THROWS_AS(parse_instance(R"({"kind": "nope", "lattice": [[1]]})"), ContractError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"kind": "cvp", "lattice": [[1, 0]], "target": [1], "norm": {"lp": 2}})"),
        ContractError);
    CHECK_THROWS_AS(
        parse_instance(
            R"({"kind": "cvp", "lattice": [[1, 0]], "target": ["1/2", 0], "norm": {"lp": 2}})"),
        ContractError);
}

TEST_CASE("polyhedral norm and rational body fields") {
    Instance inst = parse_instance(R"({
      "kind": "cvp",
      "lattice": [[2, 0], [0, 2]],
      "target": [1, 1],
      "norm": {"polyhedral": {"A": [[1, 0], [0, 1], [1, 1]], "beta": [1, 1, 2]}}
    })");
    std::string out = run_instance(inst, RunOptions{});
    auto doc = nlohmann::json::parse(out);
    CHECK(parse_rat(doc["answer"]["distance_pow"].get<std::string>()) == Rat(1));
}
