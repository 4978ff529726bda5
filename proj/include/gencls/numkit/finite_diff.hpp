#pragma once

#include <functional>

#include "gencls/numkit/vec.hpp"

namespace gencls::num {

// Central-difference gradient estimate:
//   g_i = (f(x + h e_i) - f(x - h e_i)) / (2 h)
// Used as the verification oracle for every analytic gradient in the tree.
Vector finite_diff_grad(const std::function<double(const Vector&)>& objective,
                        const Vector& x, double step);

}  // namespace gencls::num
