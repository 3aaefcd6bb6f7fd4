#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ratsol/cycles.hpp"

namespace ratsol {

struct SweepFailure {
  ColouredSequence sequence;
  std::string message;
};

struct SweepResult {
  long instances = 0;
  std::vector<SweepFailure> failures;  // in input order
  double seconds = 0;
  bool ok() const { return failures.empty(); }
};

// Standard oddly coloured sequences of period p for every odd k <= p, values <= bound.
std::vector<ColouredSequence> sweep_inputs(long p, long bound);

// Builds every chain and checks both the dressing chain and the Painleve system exactly.
// Work is split over `jobs` threads; progress (if set) is called with the number finished.
SweepResult verify_sweep(const std::vector<ColouredSequence>& inputs, unsigned jobs,
                         const std::function<void(long)>& progress = {});

}  // namespace ratsol
