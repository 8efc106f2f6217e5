#pragma once

#include <stdexcept>
#include <string>

namespace hypercol {

/// Malformed or out-of-contract arguments. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
  explicit InputError(const std::string & what) : std::invalid_argument(what) {}
};

/// A construction could not be carried out with the requested parameters
/// (e.g. translated copies that would overlap).
class ConstructionError : public std::runtime_error {
public:
  explicit ConstructionError(const std::string & what) : std::runtime_error(what) {}
};

/// A caller-supplied value disagrees with what the library computed.
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string & what) : std::runtime_error(what) {}
};

/// A node budget, size cap or similar resource limit was hit. Exit code 3.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string & what) : std::runtime_error(what) {}
};

} // namespace hypercol
