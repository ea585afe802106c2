#pragma once

#include <stdexcept>
#include <string>

namespace fpcluster {

// Error taxonomy mirrored by the CLI exit codes:
// ConfigError -> 2, InputError -> 3, IoError -> 4.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace fpcluster
