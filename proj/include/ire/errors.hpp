#pragma once

#include <stdexcept>

namespace ire {

// Operation asked of a family that does not define it (e.g. BLEE of a
// scale family, restricted MLE of the power-function family).
struct unsupported_operation : std::logic_error {
    using std::logic_error::logic_error;
};

// Config-file / CLI validation failure. CLI maps this to exit code 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical breakdown (degenerate quadrature denominator, non-converged
// integral). CLI maps this to exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ire
