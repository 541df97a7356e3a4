#pragma once

#include <vector>

namespace landdiv {

/// Euler-Mascheroni constant.
inline constexpr double kEulerMascheroni = 0.57721566490153286060651209;

/// log Gamma(x) for x > 0 (thread-safe).
double log_gamma(double x);

/// Digamma function for x > 0; accurate to ~1e-12 on [1, 1e4].
double digamma(double x);

/// Trigamma function for x > 0.
double trigamma(double x);

/// Solve digamma(x) = y for x > 0.
double inverse_digamma(double y);

// First `count` Bernoulli numbers B_0..B_{count-1} from the recursion
//   B_r = -sum_{k=0}^{r-1} r! B_k / (k! (r+1-k)!),  B_0 = 1,
// so bernoulli_numbers(3) = {1, -1/2, 1/6}.
std::vector<double> bernoulli_numbers(int count);

} // namespace landdiv
