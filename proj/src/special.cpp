#include "fduffing/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fduffing {

double gamma_function(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("gamma: non-finite argument");
    }
    if (x <= 0.0 && x == std::floor(x)) {
        throw std::domain_error("gamma: pole at x = " + std::to_string(x));
    }
    // glibc's tgamma is accurate to a few ulp and applies reflection below 0.5.
    return std::tgamma(x);
}

}  // namespace fduffing
