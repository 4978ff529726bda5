#include "gencls/numkit/finite_diff.hpp"

#include <cmath>
#include <string>

#include "gencls/errors.hpp"

namespace gencls::num {

Vector finite_diff_grad(const std::function<double(const Vector&)>& objective,
                        const Vector& x, double step) {
  if (!(step > 0.0)) throw ConfigError("finite_diff_grad: step must be positive");
  Vector g(x.size(), 0.0);
  Vector probe = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    probe[i] = xi + step;
    const double fp = objective(probe);
    probe[i] = xi - step;
    const double fm = objective(probe);
    probe[i] = xi;
    if (!std::isfinite(fp) || !std::isfinite(fm)) {
      throw Error("finite_diff_grad: non-finite evaluation at component " +
                  std::to_string(i));
    }
    g[i] = (fp - fm) / (2.0 * step);
  }
  return g;
}

}  // namespace gencls::num
