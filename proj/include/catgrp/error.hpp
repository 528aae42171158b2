#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catgrp {

using elem_t = std::uint32_t;

// Enumeration limits. Operations that would exceed them throw CapExceeded
// instead of returning a truncated result.
struct Config {
  // Largest group whose automorphisms, derivations or natural
  // transformations are enumerated.
  std::size_t max_order = 64;
  // Upper bound on search-tree nodes visited by any backtracking search.
  std::uint64_t max_search_nodes = std::uint64_t{1} << 24;
  // The interchange law is checked on every composable quadruple while the
  // quadruple count stays below this; above it the check runs over a
  // generating set of the composable-pair group, which is equivalent.
  std::uint64_t max_quadruples = std::uint64_t{1} << 24;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structure failed one of its defining axioms. `axiom()` names the axiom,
// `witness()` lists the element indices exhibiting the failure.
class ValidationError : public Error {
 public:
  ValidationError(std::string what_kind, std::string axiom,
                  std::vector<elem_t> witness, std::string detail = {})
      : Error(format(what_kind, axiom, witness, detail)),
        kind_(std::move(what_kind)),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<elem_t>& witness() const noexcept { return witness_; }

 private:
  static std::string format(const std::string& kind, const std::string& axiom,
                            const std::vector<elem_t>& witness,
                            const std::string& detail) {
    std::ostringstream os;
    os << kind << ": " << axiom << " fails";
    if (!witness.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < witness.size(); ++i) {
        os << (i ? ", " : "") << witness[i];
      }
      os << ")";
    }
    if (!detail.empty()) {
      os << "; " << detail;
    }
    return os.str();
  }

  std::string kind_;
  std::string axiom_;
  std::vector<elem_t> witness_;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A caller-side requirement does not hold (non-composable arrows,
// non-regular transformation, tower over a non-trivial centre, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Two independently computed quantities disagree. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

namespace detail {

[[noreturn]] inline void internal_failure(const std::string& what) {
  throw InternalError("internal consistency failure: " + what);
}

inline void check_internal(bool ok, const char* what) {
  if (!ok) {
    internal_failure(what);
  }
}

}  // namespace detail
}  // namespace catgrp
