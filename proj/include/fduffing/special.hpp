#pragma once

namespace fduffing {

/// Euler's gamma function.
///
/// Throws std::domain_error at the poles x = 0, -1, -2, ... and for
/// non-finite input.
double gamma_function(double x);

}  // namespace fduffing
