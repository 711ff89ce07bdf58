#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shellkit {

struct SelftestSuite {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

struct SelftestReport {
  std::vector<SelftestSuite> suites;
  bool ok() const;
};

/// Cross-checks independent deciders against each other on small exhaustive
/// families. Writes one line per suite to `log`.
SelftestReport run_selftest(std::ostream& log);

}  // namespace shellkit
