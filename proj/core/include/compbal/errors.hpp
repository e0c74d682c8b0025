#pragma once

#include <stdexcept>
#include <string>

namespace compbal {

// Every failure the library can report. The three subclasses below group
// these by how the CLI maps them to exit codes.
enum class errc {
  empty_input,
  non_positive_part,
  duplicate_part,
  invalid_modulus,
  invalid_residue,
  singleton_set,
  not_candidate,
  no_compositions,
  zero_polynomial,
  not_on_unit_circle,
  not_real_rooted,
  too_short,
  degree_mismatch,
  overflow,
  no_convergence,
  too_large,
  resource_limit,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Invalid arguments or domain violations (CLI exit code 1).
class input_error : public error {
 public:
  using error::error;
};

/// Numeric failure: non-convergence, floating overflow (CLI exit code 2).
class numeric_error : public error {
 public:
  using error::error;
};

/// Configurable resource caps exceeded (CLI exit code 3).
class resource_error : public error {
 public:
  using error::error;
};

}  // namespace compbal
