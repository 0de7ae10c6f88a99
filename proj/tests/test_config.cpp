#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "ncsn/config.hpp"

using Catch::Matchers::ContainsSubstring;

namespace {

ncsn::ConfigMap minimal_map() {
  return {
      {"x", "20"},         {"cells", "200"},       {"n", "16"},
      {"m", "10"},         {"c", "0.999"},         {"sigma_t", "1.0"},
      {"model", "exponential"}, {"q", "1.0"},      {"xi", "1e-6"},
      {"solver", "si"},
  };
}

}  // namespace

TEST_CASE("a minimal file with capitalized symbols parses", "[config]") {
  const std::string text =
      "# first experiment\n"
      "X = 20\n"
      "cells = 200\n"
      "N = 16\n"
      "M = 10\n"
      "c = 0.999\n"
      "sigma_t = 1.0\n"
      "model = \"exponential\"\n"
      "Q = 1.0\n"
      "xi = 1e-6\n"
      "solver = \"si\"  # trailing comment\n";
  const auto cfg = ncsn::build_problem_config(ncsn::parse_config_text(text));
  REQUIRE(cfg.X == 20.0);
  REQUIRE(cfg.cells == 200);
  REQUIRE(cfg.N == 16);
  REQUIRE(cfg.M == 10);
  REQUIRE(cfg.c == 0.999);
  REQUIRE(cfg.model == ncsn::ModelKind::Exponential);
  REQUIRE(cfg.q == 1.0);
  REQUIRE(cfg.xi == 1e-6);
  REQUIRE(cfg.solver == ncsn::SolverKind::SI);
  REQUIRE(cfg.max_iterations == 100000);
  REQUIRE(cfg.s_quad_nodes == 0);
  REQUIRE(cfg.stopping_norm == ncsn::StoppingNorm::L2);
}

TEST_CASE("out-of-range values are rejected with the key named", "[config]") {
  auto map = minimal_map();
  map["c"] = "1.0";
  REQUIRE_THROWS_WITH(ncsn::build_problem_config(map),
                      ContainsSubstring("c must lie in [0,1)"));
  map = minimal_map();
  map["n"] = "3";
  REQUIRE_THROWS_WITH(ncsn::build_problem_config(map),
                      ContainsSubstring("n must be even"));
  map = minimal_map();
  map["xi"] = "0";
  REQUIRE_THROWS_WITH(ncsn::build_problem_config(map),
                      ContainsSubstring("xi"));
  map = minimal_map();
  map["model"] = "fractal";
  REQUIRE_THROWS_WITH(ncsn::build_problem_config(map),
                      ContainsSubstring("model"));
}

TEST_CASE("unknown and missing keys are rejected by name", "[config]") {
  auto map = minimal_map();
  map["mystery"] = "1";
  REQUIRE_THROWS_WITH(ncsn::build_problem_config(map),
                      ContainsSubstring("unknown key: mystery"));
  map = minimal_map();
  map.erase("sigma_t");
  REQUIRE_THROWS_WITH(ncsn::build_problem_config(map),
                      ContainsSubstring("missing required field: sigma_t"));
}

TEST_CASE("malformed numerics are rejected", "[config]") {
  auto map = minimal_map();
  map["q"] = "fast";
  REQUIRE_THROWS_AS(ncsn::build_problem_config(map), ncsn::ConfigError);
  map = minimal_map();
  map["cells"] = "12.5";
  REQUIRE_THROWS_AS(ncsn::build_problem_config(map), ncsn::ConfigError);
  REQUIRE_THROWS_AS(ncsn::parse_config_text("x 20\n"), ncsn::ConfigError);
  REQUIRE_THROWS_AS(ncsn::parse_config_text("x =\n"), ncsn::ConfigError);
}

TEST_CASE("emitting and reparsing a config is the identity", "[config]") {
  ncsn::ProblemConfig cfg;
  cfg.X = 200.0;
  cfg.cells = 200;
  cfg.N = 16;
  cfg.M = 50;
  cfg.c = 0.999;
  cfg.q = 1.0;
  cfg.xi = 1e-6;
  const auto round1 =
      ncsn::build_problem_config(ncsn::parse_config_text(ncsn::emit_config(cfg)));
  REQUIRE(round1 == cfg);

  cfg.model = ncsn::ModelKind::DiffusionMimic;
  cfg.solver = ncsn::SolverKind::S2SA;
  cfg.stopping_norm = ncsn::StoppingNorm::Pointwise;
  cfg.s_quad_nodes = 256;
  cfg.max_iterations = 123;
  cfg.c = 0.1 + 0.2;  // not exactly representable in decimal
  cfg.xi = 3.7e-9;
  cfg.X = 19.000000000000004;
  const auto round2 =
      ncsn::build_problem_config(ncsn::parse_config_text(ncsn::emit_config(cfg)));
  REQUIRE(round2 == cfg);
}

TEST_CASE("quoting and spacing variants parse identically", "[config]") {
  const auto plain = ncsn::parse_config_text("model = exponential\n");
  const auto quoted = ncsn::parse_config_text("MODEL='exponential'\n");
  const auto spaced = ncsn::parse_config_text("  model   =   exponential  \n");
  REQUIRE(plain.at("model") == "exponential");
  REQUIRE(quoted.at("model") == "exponential");
  REQUIRE(spaced.at("model") == "exponential");
}
