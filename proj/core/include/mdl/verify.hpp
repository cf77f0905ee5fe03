#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mdl/error.hpp"

namespace mdl {

struct VerificationCheck {
  std::string id;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct VerificationReport {
  std::string suite;
  std::vector<VerificationCheck> checks;

  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
  std::string to_json() const;
  std::string to_text() const;
};

/// Suites: core, parallelogram, outerplane, decomposition, all. Throws
/// InvalidInput for an unknown name; SizeCapExceeded propagates.
VerificationReport run_verification(std::string_view suite, const Caps& caps = {});

}  // namespace mdl
