#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "buckfire/abacus.hpp"
#include "buckfire/graph.hpp"

namespace buckfire::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kDisagree = 4,
  kStatistical = 5,
};

/// "k=2,n=1" in either order.
TreeSpec parse_tree_spec(const std::string& text);

/// lowest | highest | queue | random:<seed>
abacus::FiringPolicy parse_policy(const std::string& text);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace buckfire::cli
