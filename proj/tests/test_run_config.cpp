#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "esdgmhd/run_config.hpp"

using namespace esdg;

TEST_CASE("empty text yields the documented defaults") {
  const RunConfig cfg = parse_config_text("");
  CHECK(cfg.cfl == 0.5);
  CHECK(cfg.dfl == 0.5);
  CHECK(cfg.alpha == 0.0);
  CHECK(cfg.glm);
  CHECK(cfg.volume == SchemeMode::Volume::ec_split);
  CHECK(cfg.surface == SchemeMode::Surface::es);
  CHECK(cfg.scenario.empty());
  CHECK(cfg.dump_every == 0);
  CHECK(cfg.deterministic);
}

TEST_CASE("plain assignments and comments") {
  const RunConfig cfg = parse_config_text(
      "# a comment line\n"
      "scenario = orszag_tang\n"
      "cfl = 0.25\n"
      "order = 7\n"
      "kx = 20  # trailing comment\n"
      "ky = 20\n"
      "alpha = 5\n"
      "glm = false\n"
      "t_final = 0.25\n");
  CHECK(cfg.scenario == "orszag_tang");
  CHECK(cfg.cfl == 0.25);
  CHECK(cfg.order == 7);
  CHECK(cfg.kx == 20);
  CHECK(cfg.alpha == 5.0);
  CHECK_FALSE(cfg.glm);
  CHECK(cfg.t_final == 0.25);
}

TEST_CASE("the robustness-comparison configuration parses") {
  const RunConfig cfg = parse_config_text("volume = standard\nsurface = es\n");
  CHECK(cfg.volume == SchemeMode::Volume::standard);
  CHECK(cfg.surface == SchemeMode::Surface::es);
}

TEST_CASE("errors carry line numbers") {
  auto expect_line = [](const std::string& text, int line) {
    try {
      parse_config_text(text);
      FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
      CHECK(err.line() == line);
    }
  };
  expect_line("cfl = 0.5\nwhat = 1\n", 2);
  expect_line("cfl = not_a_number\n", 1);
  expect_line("\n\nvolume = sideways\n", 3);
  expect_line("order =\n", 1);
  expect_line("just some words\n", 1);
  expect_line("order = 0\n", 1);
  expect_line("glm = perhaps\n", 1);
}
