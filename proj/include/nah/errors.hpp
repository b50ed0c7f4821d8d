#pragma once

#include <stdexcept>

namespace nah {

struct ExceptionalParameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedProduct : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInSpace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UndefinedGamma : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RamifiedPlace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleAtPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BelowConvergenceThreshold : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace nah
