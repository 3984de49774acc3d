#ifndef SESQUI_STAIRCASE_FIBONACCI_HPP
#define SESQUI_STAIRCASE_FIBONACCI_HPP

#include <cstdint>

#include "sesqui/exact/rational.hpp"

namespace sesqui::staircase {

// Fib_{-1} = 1, Fib_0 = 0, Fib_{i+1} = Fib_i + Fib_{i-1}. Throws DomainError for i < -1.
BigInt fib(int i);
// Same, for i <= 92; throws DomainError beyond int64 range.
std::int64_t fib64(int i);

// Corner data of the Fibonacci staircase, k >= -1:
//   outer corner  alpha_k = Fib_{2k+5} / Fib_{2k+1}, height beta_k = Fib_{2k+5} / Fib_{2k+3}
//   inner corner  gamma_k = Fib_{2k+3}^2 / Fib_{2k+1}^2
//   slope of the linear piece ending at alpha_k: Fib_{2k+1} / Fib_{2k+3}
Rational alpha(int k);
Rational beta(int k);
Rational gamma(int k);
Rational slope(int k);

} // namespace sesqui::staircase

#endif
