#ifndef DEFV_SCENARIO_HPP
#define DEFV_SCENARIO_HPP

#include <string>
#include <vector>

#include "defv/report.hpp"

namespace defv {

struct ScenarioParams {
  int64_t p = 2;
  int64_t window = 0;         // 0: default 6p+8 (curve support analysis)
  int64_t box = 0;            // 0: default 2p+4 (surface containment analysis)
  std::string mutation;       // empty or a negative-control name
};

Report run_curve_scenario(const ScenarioParams& params);
Report run_surface_scenario(const ScenarioParams& params);

// Runs one scenario per p on a fixed-size worker pool; the returned order is
// the input order regardless of the thread count.
std::vector<Report> run_scenarios(const std::string& kind,
                                  const std::vector<int64_t>& primes,
                                  const ScenarioParams& base, int threads);

}  // namespace defv

#endif
