#pragma once

#include <stdexcept>
#include <string>

namespace equilift {

/// Thrown when the caller hands us structurally invalid data (bad tables,
/// dangling references, violated preconditions traceable to the input).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown for requests that are recognized but outside the engine's scope,
/// e.g. degree-2 classification over a nonabelian band.
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an internal invariant breaks. Indicates a bug in the engine,
/// never a user mistake.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace equilift
