#pragma once

#include <stdexcept>
#include <string>

namespace routegap {

/// Malformed or invalid input: bad edge-list/routing syntax, graphs that
/// violate simplicity or connectivity, routings that fail validation.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A construction was asked for on a host it is not defined for
/// (e.g. a Hamiltonian-path tree of a non-complete graph).
class InapplicableError : public std::runtime_error {
public:
  explicit InapplicableError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive search would exceed its configured size limits.
class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace routegap
