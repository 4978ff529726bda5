#include "gencls/numkit/lbfgs.hpp"

#include <cmath>
#include <deque>

#include "gencls/errors.hpp"

namespace gencls::num {
namespace {

struct HistoryPair {
  Vector s;
  Vector y;
  double rho;  // 1 / (s.y)
};

void validate(const LbfgsConfig& c) {
  if (c.memory < 1) throw ConfigError("lbfgs: memory must be >= 1");
  if (c.max_iters < 1) throw ConfigError("lbfgs: max_iters must be >= 1");
  if (!(c.grad_tolerance > 0.0)) throw ConfigError("lbfgs: grad_tolerance must be > 0");
  if (!(c.step_shrink > 0.0 && c.step_shrink < 1.0))
    throw ConfigError("lbfgs: step_shrink must lie in (0, 1)");
  if (!(c.initial_step > 0.0)) throw ConfigError("lbfgs: initial_step must be > 0");
  if (!(c.sufficient_decrease > 0.0 && c.sufficient_decrease < 1.0))
    throw ConfigError("lbfgs: sufficient_decrease must lie in (0, 1)");
}

// Two-loop recursion: returns H g where H approximates the inverse Hessian.
Vector two_loop(const Vector& g, const std::deque<HistoryPair>& hist) {
  Vector q = g;
  std::vector<double> alpha(hist.size());
  for (std::size_t i = hist.size(); i-- > 0;) {
    alpha[i] = hist[i].rho * dot(hist[i].s, q);
    axpy(-alpha[i], hist[i].y, q);
  }
  if (!hist.empty()) {
    const HistoryPair& last = hist.back();
    const double yy = dot(last.y, last.y);
    if (yy > 0.0) {
      const double gamma = 1.0 / (last.rho * yy);  // s.y / y.y
      for (double& v : q) v *= gamma;
    }
  }
  for (std::size_t i = 0; i < hist.size(); ++i) {
    const double beta = hist[i].rho * dot(hist[i].y, q);
    axpy(alpha[i] - beta, hist[i].s, q);
  }
  return q;
}

}  // namespace

LbfgsResult lbfgs_minimize(const ObjectiveFn& objective, Vector x0,
                           const LbfgsConfig& config, const ProjectFn& project) {
  validate(config);
  if (!all_finite(x0)) throw DivergedError("lbfgs: non-finite starting point", x0);
  if (project) project(x0);

  Vector x = std::move(x0);
  Vector g(x.size(), 0.0);
  double f = objective(x, g);
  if (!std::isfinite(f) || !all_finite(g))
    throw DivergedError("lbfgs: non-finite objective at starting point", x);

  LbfgsResult res;
  res.grad_norm = norm2(g);
  std::deque<HistoryPair> hist;

  for (int iter = 0; iter < config.max_iters; ++iter) {
    if (res.grad_norm <= config.grad_tolerance) break;

    Vector dir = two_loop(g, hist);
    for (double& v : dir) v = -v;
    if (dot(g, dir) >= 0.0) {
      // Not a descent direction; restart from steepest descent.
      hist.clear();
      dir = scaled(g, -1.0);
    }

    double step = config.initial_step;
    bool accepted = false;
    bool saw_nonfinite = false;
    Vector x_new, g_new(x.size(), 0.0);
    double f_new = f;
    for (int bt = 0; bt < config.max_backtracks; ++bt) {
      x_new = x;
      axpy(step, dir, x_new);
      if (project) project(x_new);
      const Vector actual_step = sub(x_new, x);
      f_new = objective(x_new, g_new);
      if (!std::isfinite(f_new) || !all_finite(g_new)) {
        saw_nonfinite = true;
        step *= config.step_shrink;
        continue;
      }
      if (f_new <= f + config.sufficient_decrease * dot(g, actual_step)) {
        accepted = true;
        break;
      }
      step *= config.step_shrink;
    }

    if (!accepted) {
      if (saw_nonfinite) {
        throw DivergedError("lbfgs: objective non-finite along the search direction", x);
      }
      res.status = LbfgsStatus::kLineSearchStalled;
      res.x = std::move(x);
      res.f = f;
      res.iterations = iter;
      return res;
    }

    Vector s = sub(x_new, x);
    Vector y = sub(g_new, g);
    const double sy = dot(s, y);
    // Skip pairs that would break positive definiteness of the estimate.
    if (sy > 1e-10 * norm2(s) * norm2(y)) {
      hist.push_back({std::move(s), std::move(y), 1.0 / sy});
      if (static_cast<int>(hist.size()) > config.memory) hist.pop_front();
    }

    x = std::move(x_new);
    f = f_new;
    g = std::move(g_new);
    res.grad_norm = norm2(g);
    res.iterations = iter + 1;
  }

  res.status = res.grad_norm <= config.grad_tolerance ? LbfgsStatus::kConverged
                                                      : LbfgsStatus::kMaxIterations;
  res.x = std::move(x);
  res.f = f;
  return res;
}

}  // namespace gencls::num
