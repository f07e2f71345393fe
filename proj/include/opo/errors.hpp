#ifndef OPO_ERRORS_HPP
#define OPO_ERRORS_HPP

#include <stdexcept>

namespace opo {

struct ParameterOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FrequencyMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BelowThreshold : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentState : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivergentVariance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroVariance : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace opo

#endif
