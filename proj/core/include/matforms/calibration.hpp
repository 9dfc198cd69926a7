#pragma once

#include <string>
#include <vector>

namespace matforms {

/// One closed-form formula reproduced from scratch and compared in normal form.
struct CalibrationCheck {
  std::string name;
  bool passed = false;
  std::string expected;
  std::string actual;
};

/// Published closed forms: Amitsur and power expansions, multilinear key-formula
/// instances, the orthogonal sigma / chi / zeta tables, degree-vector lists, and a
/// few evaluations on generic matrices. Expected sides are written in the
/// expression language and normalized independently of the computed side.
std::vector<CalibrationCheck> calibration_suite();

}  // namespace matforms
