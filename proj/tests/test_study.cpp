#include <functional>
#include <string>

#include <doctest.h>

#include "core/errors.hpp"
#include "core/study.hpp"

using namespace vesselmc;

namespace {

const char* kTable2Json = R"({
  "model": {
    "operating_pressure": {"mean_mpa": 13, "std_mpa": 1},
    "yield_strength": {"mean_mpa": 235, "std_mpa": 10},
    "ultimate_strength": {"mean_mpa": 375, "std_mpa": 12},
    "outer_diameter": {"mean_mm": 1000, "std_mm": 0.5},
    "inner_diameter": {"mean_mm": 960, "std_mm": 0.5}
  },
  "criteria": ["faupel", "svensson", "christopher", "zheng", "brabin"],
  "trials": 1000000,
  "seed": 42,
  "sweep": {"variable": "operating_pressure", "lo": 0.25, "hi": 3, "steps": 12},
  "sensitivity": {
    "variables": ["operating_pressure", "yield_strength", "ultimate_strength"],
    "delta_cov": 0.001
  }
})";

std::string message_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("the reference config parses to the expected SI study") {
  const StudyConfig cfg = parse_config_text(kTable2Json);
  CHECK(cfg.model.operating_pressure.mean == 13e6);
  CHECK(cfg.model.operating_pressure.std_dev == 1e6);
  CHECK(cfg.model.yield_strength.mean == 235e6);
  CHECK(cfg.model.ultimate_strength.std_dev == 12e6);
  CHECK(cfg.model.outer_diameter.mean == 1.0);
  CHECK(cfg.model.inner_diameter.mean == 0.96);
  CHECK(cfg.model.inner_diameter.std_dev == doctest::Approx(0.5e-3));
  REQUIRE(cfg.criteria.size() == 5);
  CHECK(cfg.criteria[0] == Criterion::Faupel);
  CHECK(cfg.criteria[4] == Criterion::BrabinModifiedFaupel);
  CHECK(cfg.run.trials == 1'000'000);
  CHECK(cfg.run.seed == 42);
  REQUIRE(cfg.sweep.has_value());
  CHECK(cfg.sweep->variable == VariableId::OperatingPressure);
  CHECK(cfg.sweep->lo_si == doctest::Approx(0.25e6));
  CHECK(cfg.sweep->hi_si == 3e6);
  CHECK(cfg.sweep->steps == 12);
  REQUIRE(cfg.sensitivity.has_value());
  CHECK(cfg.sensitivity->variables.size() == 3);
  CHECK(cfg.sensitivity->delta_cov == 0.001);
  CHECK(cfg.sensitivity->mode == PerturbMode::Mean);
}

TEST_CASE("defaults apply when optional keys are absent") {
  const StudyConfig cfg = parse_config_text(R"({
    "model": {
      "operating_pressure": {"mean_mpa": 13, "std_mpa": 1},
      "yield_strength": {"mean_mpa": 235, "std_mpa": 10},
      "ultimate_strength": {"mean_mpa": 375, "std_mpa": 12},
      "outer_diameter": {"mean_mm": 1000, "std_mm": 0.5},
      "inner_diameter": {"mean_mm": 960, "std_mm": 0.5}
    },
    "criteria": ["faupel"]
  })");
  CHECK(cfg.run.trials == 1'000'000);
  CHECK(cfg.run.seed == 0);
  CHECK(cfg.run.chunk_size == (1u << 14));
  CHECK(cfg.run.trace_points == 50);
  CHECK(!cfg.sweep.has_value());
  CHECK(!cfg.sensitivity.has_value());
}

TEST_CASE("malformed JSON is a parse error") {
  CHECK_THROWS_AS(parse_config_text("{ not json"), ParseError);
  CHECK_THROWS_AS(parse_config_text(""), ParseError);
  CHECK_THROWS_AS(parse_config_text("[1,2,3]"), ValidationError);
}

TEST_CASE("negative std_dev is rejected naming the field") {
  std::string bad = kTable2Json;
  bad.replace(bad.find("\"std_mpa\": 1}"), 13, "\"std_mpa\": -1}");
  const std::string msg =
      message_of([&] { (void)parse_config_text(bad); });
  CHECK(msg.find("operating_pressure.std_mpa") != std::string::npos);
}

TEST_CASE("unknown criterion names the valid alternatives") {
  std::string bad = kTable2Json;
  bad.replace(bad.find("faupel"), 6, "faupell");
  try {
    (void)parse_config_text(bad);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("faupell") != std::string::npos);
    CHECK(msg.find("svensson") != std::string::npos);
    CHECK(msg.find("brabin") != std::string::npos);
  }
}

TEST_CASE("unknown keys are rejected with their path") {
  std::string bad = kTable2Json;
  bad.replace(bad.find("\"trials\""), 8, "\"trails\"");
  const std::string msg = message_of([&] { (void)parse_config_text(bad); });
  CHECK(msg.find("trails") != std::string::npos);
  CHECK(msg.find("unknown key") != std::string::npos);

  std::string nested = kTable2Json;
  nested.replace(nested.find("\"mean_mpa\""), 10, "\"mean_psi\"");
  const std::string nested_msg =
      message_of([&] { (void)parse_config_text(nested); });
  CHECK(nested_msg.find("model.operating_pressure.mean_psi") !=
        std::string::npos);
}

TEST_CASE("model cross invariants are enforced at the boundary") {
  std::string equal = kTable2Json;
  equal.replace(equal.find("\"mean_mm\": 960"), 14, "\"mean_mm\": 1000");
  CHECK_THROWS_AS((void)parse_config_text(equal), ValidationError);

  const char* missing = R"({
    "model": {
      "operating_pressure": {"mean_mpa": 13, "std_mpa": 1},
      "yield_strength": {"mean_mpa": 235, "std_mpa": 10},
      "ultimate_strength": {"mean_mpa": 375, "std_mpa": 12},
      "outer_diameter": {"mean_mm": 1000, "std_mm": 0.5}
    },
    "criteria": ["faupel"]
  })";
  const std::string msg = message_of([&] { (void)parse_config_text(missing); });
  CHECK(msg.find("inner_diameter") != std::string::npos);
}

TEST_CASE("duplicate criteria are rejected") {
  std::string dup = kTable2Json;
  dup.replace(dup.find("\"svensson\""), 10, "\"faupel\"");
  CHECK_THROWS_AS((void)parse_config_text(dup), ConfigError);
}

TEST_CASE("criteria must be nonempty") {
  std::string empty = kTable2Json;
  const auto pos = empty.find("\"criteria\": [");
  empty.replace(pos, empty.find(']', pos) - pos + 1, "\"criteria\": []");
  CHECK_THROWS_AS((void)parse_config_text(empty), ValidationError);
}

TEST_CASE("sweep block validation") {
  std::string bad = kTable2Json;
  bad.replace(bad.find("\"lo\": 0.25"), 10, "\"lo\": 3");
  CHECK_THROWS_AS((void)parse_config_text(bad), ValidationError);  // lo == hi

  std::string steps = kTable2Json;
  steps.replace(steps.find("\"steps\": 12"), 11, "\"steps\": 1");
  CHECK_THROWS_AS((void)parse_config_text(steps), ValidationError);
}

TEST_CASE("sensitivity block validation") {
  std::string zero = kTable2Json;
  zero.replace(zero.find("\"delta_cov\": 0.001"), 18, "\"delta_cov\": 0");
  CHECK_THROWS_AS((void)parse_config_text(zero), ValidationError);

  std::string mode = kTable2Json;
  mode.replace(mode.find("\"delta_cov\": 0.001"), 18,
               "\"delta_cov\": 0.001, \"mode\": \"std_dev\"");
  CHECK(parse_config_text(mode).sensitivity->mode == PerturbMode::StdDev);

  std::string bad_mode = kTable2Json;
  bad_mode.replace(bad_mode.find("\"delta_cov\": 0.001"), 18,
                   "\"delta_cov\": 0.001, \"mode\": \"sideways\"");
  CHECK_THROWS_AS((void)parse_config_text(bad_mode), ConfigError);
}

TEST_CASE("trials must be a positive integer") {
  std::string zero = kTable2Json;
  zero.replace(zero.find("\"trials\": 1000000"), 17, "\"trials\": 0");
  CHECK_THROWS_AS((void)parse_config_text(zero), ValidationError);

  std::string fractional = kTable2Json;
  fractional.replace(fractional.find("\"trials\": 1000000"), 17,
                     "\"trials\": 10.5");
  CHECK_THROWS_AS((void)parse_config_text(fractional), ValidationError);
}

TEST_CASE("missing config file is an io error") {
  CHECK_THROWS_AS((void)parse_config_file("/nonexistent/nope.json"), IoError);
}
