// Acceptance battery: one pass/fail line per criterion. Exits nonzero if
// any criterion fails. Criteria 1-10 run the full profile; criterion 11
// requires the quick profile to finish within its time budget.
#include <chrono>
#include <cstdio>
#include <string>

#include "polefrac/verify.hpp"

namespace {

constexpr double kQuickBudgetSeconds = 60.0;

int report(int id, const std::string& name, long passed, long failed,
           const std::vector<polefrac::verify::CheckFailure>& failures,
           double wall_ms) {
  std::printf("%s criterion %2d: %s (passed=%ld, failed=%ld) [%.0f ms]\n",
              failed == 0 ? "PASS" : "FAIL", id, name.c_str(), passed, failed,
              wall_ms);
  if (failed != 0) {
    for (const auto& f : failures)
      std::printf("       %s: expected %s, got %s\n", f.where.c_str(),
                  f.expected.c_str(), f.actual.c_str());
    if (static_cast<long>(failures.size()) < failed)
      std::printf("       ... and %ld more\n",
                  failed - static_cast<long>(failures.size()));
    return 1;
  }
  return 0;
}

}  // namespace

int main() {
  int bad = 0;

  auto results = polefrac::verify::run_all(polefrac::verify::Profile::full);
  for (const auto& r : results)
    bad += report(r.id, r.name, r.passed, r.failed, r.failures, r.wall_ms);

  auto t0 = std::chrono::steady_clock::now();
  auto quick = polefrac::verify::run_all(polefrac::verify::Profile::quick);
  double quick_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  long quick_failed = 0;
  for (const auto& r : quick) quick_failed += r.failed;
  bool quick_ok = quick_failed == 0 && quick_s <= kQuickBudgetSeconds;
  std::printf(
      "%s criterion 11: quick profile within budget (%.2f s of %.0f s, "
      "failed=%ld)\n",
      quick_ok ? "PASS" : "FAIL", quick_s, kQuickBudgetSeconds, quick_failed);
  if (!quick_ok) ++bad;

  if (bad != 0) std::printf("%d criteria FAILED\n", bad);
  return bad == 0 ? 0 : 1;
}
