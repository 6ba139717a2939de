#pragma once

#include <stdexcept>

namespace tsum {

/// Stored bytes cannot be decoded back into a valid encoding.
struct CorruptEncoding : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem-level failure (missing file, short read, failed write).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace tsum
