#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace filcat {

enum class Errc {
  incompatible_composition,
  ground_mismatch,
  duplicate_atom,
  unknown_atom,
  not_admissible,
  not_local,
  not_subfilter,
  empty_join,
  not_parallel,
  class_violation,
  non_commuting,
  no_diagonal,
  outside_domain,
  size_cap,
  syntax,
  unknown_reference,
  duplicate_name,
  invariant,
  unknown_law,
  invalid_argument,
};

/// Machine-readable code, e.g. "E_LOCALITY". Stable across releases.
std::string_view errc_code(Errc e) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace filcat
