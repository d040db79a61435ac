#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "branchdim/quotients.hpp"

namespace branchdim::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResource = 3 };

struct CliConfig {
  std::filesystem::path group_file;  // empty: the bundled definition
  std::size_t level_cap = kDefaultChainCap;
  std::filesystem::path cache_dir;  // empty: no chain cache
  bool json = false;
  std::string suite = "all";
};

/// Runs one invocation; `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace branchdim::cli
