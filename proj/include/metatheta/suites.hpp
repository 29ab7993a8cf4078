// Named verification suites. Each check carries an anchor naming the identity it exercises.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metatheta/serialize.hpp"

namespace metatheta {

struct SuiteCheck {
  std::string id;
  std::string anchor;
  bool pass = false;
  Json detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool passed() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  /// Caps the rank of parameterized instances; each suite has its own default.
  std::optional<int> n;
};

const std::vector<std::string>& suite_names();

SuiteResult run_identities_suite(const SuiteOptions& opts = {});
SuiteResult run_exponents_suite(const SuiteOptions& opts = {});
SuiteResult run_orbits_suite(const SuiteOptions& opts = {});
SuiteResult run_charsums_suite(const SuiteOptions& opts = {});
/// "all" runs every suite and concatenates the checks. Unknown names throw InputError.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

Json to_json(const SuiteResult& r);

/// Expected orbit for n <= r < 2n from the explicit even/odd case list.
Partition orbit_case_list(int n, int r);

}  // namespace metatheta
