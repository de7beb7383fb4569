#include "qhm/special_functions.hpp"

#include <stdexcept>

namespace qhm {

Complex hermite(int n, Complex z) {
  if (n < 0) throw std::invalid_argument("hermite: order must be non-negative");
  if (n == 0) return {1.0, 0.0};
  Complex prev{1.0, 0.0};     // H_0
  Complex curr = 2.0 * z;     // H_1
  for (int k = 1; k < n; ++k) {
    Complex next = 2.0 * z * curr - 2.0 * static_cast<double>(k) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

Complex hermite_derivative(int n, Complex z) {
  if (n < 0) throw std::invalid_argument("hermite_derivative: order must be non-negative");
  if (n == 0) return {0.0, 0.0};
  return 2.0 * static_cast<double>(n) * hermite(n - 1, z);
}

std::vector<double> hermite_coefficients(int n) {
  if (n < 0) throw std::invalid_argument("hermite_coefficients: order must be non-negative");
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> curr{0.0, 2.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (std::size_t j = 0; j < curr.size(); ++j) next[j + 1] += 2.0 * curr[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= 2.0 * k * prev[j];
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

}  // namespace qhm
