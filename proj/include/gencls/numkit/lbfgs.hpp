#pragma once

#include <functional>

#include "gencls/numkit/vec.hpp"

namespace gencls::num {

// Limited-memory BFGS with backtracking Armijo line search.
struct LbfgsConfig {
  // History pairs kept for the two-loop recursion.
  int memory = 10;
  int max_iters = 100;
  // Stop once ||grad||_2 falls at or below this.
  double grad_tolerance = 1e-6;
  // Line search: first trial step, multiplicative shrink, and the Armijo
  // sufficient-decrease constant c1.
  double initial_step = 1.0;
  double step_shrink = 0.5;
  double sufficient_decrease = 1e-4;
  int max_backtracks = 60;
};

enum class LbfgsStatus {
  kConverged,          // gradient norm at or below tolerance
  kMaxIterations,      // iteration budget exhausted
  kLineSearchStalled,  // no acceptable step found; x is the best point seen
};

struct LbfgsResult {
  Vector x;
  double f = 0.0;
  int iterations = 0;
  double grad_norm = 0.0;
  LbfgsStatus status = LbfgsStatus::kConverged;
};

// Evaluates the objective at x and writes the gradient into grad.
using ObjectiveFn = std::function<double(const Vector& x, Vector& grad)>;
// Optional feasibility projection applied to every trial point (e.g. clamping
// to a box). Must be idempotent.
using ProjectFn = std::function<void(Vector&)>;

// Minimizes the objective from x0. Accepted steps never increase the
// objective. Deterministic given identical inputs. Throws DivergedError
// (carrying the last finite iterate) when the objective or gradient turns
// non-finite and no finite step can be recovered; throws ConfigError on an
// invalid config.
LbfgsResult lbfgs_minimize(const ObjectiveFn& objective, Vector x0,
                           const LbfgsConfig& config = {},
                           const ProjectFn& project = nullptr);

}  // namespace gencls::num
