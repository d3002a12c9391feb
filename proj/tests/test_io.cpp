#include "doctest.h"
#include "nlk/catalog.hpp"
#include "nlk/error.hpp"
#include "nlk/io.hpp"
#include "support.hpp"

using namespace nlk;

TEST_CASE("emit then parse is the identity on catalog algebras") {
  for (const auto& [name, ma] : testing::catalog_sample()) {
    CAPTURE(name);
    const io::AlgebraFile f = io::from_metric(ma);
    const std::string text = io::emit(f);
    const io::AlgebraFile back = io::parse(text);
    CHECK(back == f);
    CHECK(io::emit(back) == text);
  }
}

TEST_CASE("emitted files are canonical") {
  const std::string text = io::emit(io::from_metric(build_case1(3, 2, Scalar(3, 2))));
  CHECK(text.find("\"3/2\"") != std::string::npos);
  CHECK(text.find("\"-3/2\"") != std::string::npos);
  CHECK(text.back() == '\n');
  // sorted keys: arity < basis_labels < brackets < dim < form
  CHECK(text.find("\"arity\"") < text.find("\"brackets\""));
  CHECK(text.find("\"brackets\"") < text.find("\"dim\""));
  CHECK(text.find("\"dim\"") < text.find("\"form\""));
}

TEST_CASE("parser rejects malformed input") {
  const auto bad = [](const std::string& s) { CHECK_THROWS_AS(io::parse(s), ParseError); };
  bad("not json");
  bad(R"({"arity": 2, "dim": 2})");
  bad(R"({"arity": 2, "dim": 2, "brackets": [], "extra": 1})");
  bad(R"({"arity": 1, "dim": 2, "brackets": []})");
  bad(R"({"arity": 2, "dim": 2, "brackets": [{"args": [2, 1], "value": {"1": "1"}}]})");
  bad(R"({"arity": 2, "dim": 2, "brackets": [{"args": [1, 3], "value": {"1": "1"}}]})");
  bad(R"({"arity": 2, "dim": 2, "brackets": [{"args": [1, 2], "value": {"1": "1/0"}}]})");
  bad(R"({"arity": 2, "dim": 2, "brackets": [{"args": [1, 2], "value": {"1": 1}}]})");
  bad(R"({"arity": 2, "dim": 2, "brackets": [{"args": [1, 2], "value": {"3": "1"}}]})");
  bad(R"({"arity": 2, "dim": 2, "brackets": [{"args": [1, 2], "value": {}}, {"args": [1, 2], "value": {}}]})");
  bad(R"({"arity": 2, "dim": 2, "brackets": [], "form": [["1", "0"]]})");
  bad(R"({"arity": 2, "dim": 2, "brackets": [], "basis_labels": ["a"]})");
}

TEST_CASE("asymmetric forms load and are reported by the checker") {
  const auto f = io::parse(R"({"arity": 2, "dim": 2, "brackets": [], "form": [["1", "2"], ["0", "1"]]})");
  REQUIRE(f.form.has_value());
  CHECK_FALSE(check_symmetry(*f.form).ok());
}

TEST_CASE("vector lists") {
  const auto v = io::parse_vectors("1,0,-1/2;0,1,0", 3);
  REQUIRE(v.size() == 2);
  CHECK(v[0] == Vec{1, 0, Scalar(-1, 2)});
  CHECK(io::parse_vectors("", 3).empty());
  CHECK_THROWS_AS(io::parse_vectors("1,0", 3), ParseError);
  CHECK_THROWS_AS(io::parse_vectors("1,x,0", 3), ParseError);
}

TEST_CASE("violation reports serialise witnesses") {
  StructureTensor t(2, 3);
  t.set(std::vector<int>{1, 2}, Vec::unit(3, 2));
  t.set(std::vector<int>{1, 3}, Vec::unit(3, 3));
  t.set(std::vector<int>{2, 3}, Vec::unit(3, 1));
  const auto j = io::to_json(check_fundamental_identity(Algebra(t)));
  CHECK(j["ok"] == false);
  CHECK(j["witnesses"][0]["tuples"] == io::json::parse("[[1,2],[3]]"));
  CHECK(j["witnesses"][0]["residual"] == io::json::parse(R"(["2","0","0"])"));
}
