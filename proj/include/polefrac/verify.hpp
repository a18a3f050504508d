#pragma once

#include <string>
#include <vector>

namespace polefrac {
namespace verify {

enum class Profile { quick, full };

struct CheckFailure {
  std::string where;
  std::string expected;
  std::string actual;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  long passed = 0;
  long failed = 0;
  std::vector<CheckFailure> failures;  // first few kept, the rest counted
  double wall_ms = 0.0;

  bool ok() const { return failed == 0; }
};

/// Runs the whole battery (exact identities, partial fractions,
/// difference/derivative decompositions, sup bounds, semipole recovery,
/// counterexample, asymptotics). The quick profile shrinks sweep caps and
/// sample counts; the full profile runs the complete ranges.
std::vector<CriterionResult> run_all(Profile profile);

}  // namespace verify
}  // namespace polefrac
