#include <stdexcept>

#include "doctest.h"
#include "perfreq/model.hpp"

using namespace perfreq;

namespace {

Parameter quantified_param(std::string id, Aspect aspect, std::string unit,
                           std::int64_t value) {
  return make_parameter(std::move(id), "R1", aspect, "desc",
                        Quantity{Rational(value), std::move(unit),
                                 Comparator::Le},
                        true);
}

}  // namespace

TEST_CASE("quantified is presence of a value") {
  Parameter two_sec = make_parameter(
      "p1", "PR2", Aspect::TimeBehavior, "within 2 sec",
      Quantity{Rational(2), "sec", Comparator::Le}, true);
  CHECK(quantified(two_sec));

  Parameter users = make_parameter("p2", "PR1", Aspect::Capacity,
                                   "simultaneous users", std::nullopt, true);
  CHECK_FALSE(quantified(users));

  Parameter zero = make_parameter("p3", "R9", Aspect::ResourceConstraint,
                                  "0 MB", Quantity{Rational(0), "MB",
                                                   Comparator::Le},
                                  true);
  CHECK(quantified(zero));  // zero is a quantity
}

TEST_CASE("make_parameter rejects contradictions") {
  CHECK_THROWS_AS(
      make_parameter("p1", "R1", Aspect::Capacity, "x",
                     Quantity{Rational(1), "u", Comparator::Le}, false),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_parameter("p1", "R1", Aspect::Capacity, "x",
                     Quantity{Rational(-1), "u", Comparator::Le}, true),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_parameter("p1", "R1", Aspect::Capacity, "x",
                     Quantity{Rational(1), "", Comparator::Le}, true),
      std::invalid_argument);

  // unquantified but not quantifiable is a legal analyst annotation
  Parameter p = make_parameter("p1", "R1", Aspect::Capacity, "x", std::nullopt,
                               false);
  CHECK_FALSE(p.quantifiable);
}

TEST_CASE("make_model enforces role placement") {
  Parameter cap = quantified_param("p1", Aspect::Capacity, "users", 10);
  Parameter tb = quantified_param("p2", Aspect::TimeBehavior, "sec", 2);

  Model ok = make_model("m1", "software", "", {cap}, {tb});
  CHECK(ok.independent.size() == 1);
  CHECK(ok.dependent.size() == 1);

  CHECK_THROWS_AS(make_model("m1", "software", "", {tb}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_model("m1", "software", "", {}, {cap}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_model("m1", "", "", {cap}, {}), std::invalid_argument);
}

TEST_CASE("object_list splits applies-to groups") {
  Model single = make_model("m", "software", "", {}, {});
  CHECK(object_list(single) == std::vector<std::string>{"software"});

  Model group = make_model(
      "m", "command response, status display update , software", "", {}, {});
  CHECK(object_list(group) ==
        std::vector<std::string>{"command response", "status display update",
                                 "software"});

  Model commas = make_model("m", ",", "", {}, {});
  CHECK(object_list(commas) == std::vector<std::string>{","});

  Model trailing = make_model("m", "a,", "", {}, {});
  CHECK(object_list(trailing) == std::vector<std::string>{"a"});
}

TEST_CASE("make_defect enforces category rules") {
  CHECK_THROWS_AS(make_defect(DefectCategory::Conflict, Aspect::Capacity, "m",
                              {"R1"}, "msg", Severity::Blocking),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_defect(DefectCategory::Conflict, std::nullopt, "m",
                              {"R1", "R2"}, "msg", Severity::Blocking),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      make_defect(DefectCategory::UnderSpecifiedParameter, std::nullopt, "m",
                  {}, "msg", Severity::Warning),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_defect(DefectCategory::UnderSpecifiedParameter, Aspect::Efficiency,
                  "m", {}, "msg", Severity::Warning),
      std::invalid_argument);

  Defect conflict = make_defect(DefectCategory::Conflict, Aspect::Capacity,
                                "m", {"R1", "R2"}, "msg", Severity::Blocking);
  CHECK(conflict.requirement_ids.size() == 2);

  Defect underspec =
      make_defect(DefectCategory::UnderSpecifiedParameter,
                  Aspect::SpeedThroughput, "m", {}, "msg", Severity::Warning);
  CHECK(underspec.aspect == Aspect::SpeedThroughput);
}

TEST_CASE("make_test_environment enforces entry roles") {
  CHECK_THROWS_AS(
      make_test_environment({{"x", Aspect::TimeBehavior}}, {}, {}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      make_test_environment(
          {}, {{"obj", MetricEntry{"y", Aspect::Capacity}}}, {}),
      std::invalid_argument);

  TestEnvironment env = make_test_environment(
      {{"10 nodes", Aspect::Capacity}},
      {{"software", MetricEntry{"<= 2 sec", Aspect::TimeBehavior}},
       {"ui", std::nullopt}},
      {"no constraints"});
  CHECK(env.constraints.size() == 1);
  CHECK(env.object_metric_pairs.size() == 2);
}

TEST_CASE("aspect ids round trip") {
  for (Aspect a : kAllAspects) {
    auto back = aspect_from_id(aspect_id(a));
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  CHECK_FALSE(aspect_from_id("availability").has_value());
  CHECK_FALSE(aspect_from_id("TimeBehavior").has_value());
  CHECK_FALSE(aspect_from_id("").has_value());
}

TEST_CASE("comparators parse from ascii and unicode") {
  CHECK(comparator_from("<=") == Comparator::Le);
  CHECK(comparator_from("≤") == Comparator::Le);
  CHECK(comparator_from("<") == Comparator::Lt);
  CHECK(comparator_from("==") == Comparator::Eq);
  CHECK(comparator_from("=") == Comparator::Eq);
  CHECK(comparator_from(">") == Comparator::Gt);
  CHECK(comparator_from(">=") == Comparator::Ge);
  CHECK(comparator_from("≥") == Comparator::Ge);
  CHECK_FALSE(comparator_from("=<").has_value());
  CHECK_FALSE(comparator_from("").has_value());
  for (Comparator c : {Comparator::Le, Comparator::Lt, Comparator::Eq,
                       Comparator::Gt, Comparator::Ge}) {
    CHECK(comparator_from(comparator_str(c)) == c);
  }
}
