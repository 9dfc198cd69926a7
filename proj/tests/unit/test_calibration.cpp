#include <gtest/gtest.h>

#include <set>

#include "matforms/calibration.hpp"

TEST(Calibration, EveryCheckReproduces) {
  const auto checks = matforms::calibration_suite();
  ASSERT_GE(checks.size(), 40u);
  std::set<std::string> names;
  for (const auto& c : checks) {
    EXPECT_TRUE(c.passed) << c.name << "\n  expected: " << c.expected << "\n  actual:   " << c.actual;
    EXPECT_TRUE(names.insert(c.name).second) << "duplicate check " << c.name;
  }
  for (const char* required : {"zeta_{0,0}", "zeta_{0,1}", "sigma_{0,2}", "key formula (2,2)", "tr(a^4)"})
    EXPECT_TRUE(names.count(required)) << required;
}
