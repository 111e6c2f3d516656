// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#pragma once

#include <stdexcept>
#include <string>

namespace nmrank {

/// Invalid configuration or out-of-range parameters, detected before any work starts.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (corpus files, tables, indices).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void require_config(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

inline void require_data(bool ok, const std::string& message) {
    if (!ok) throw DataError(message);
}

} // namespace nmrank
