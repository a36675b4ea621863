#pragma once

#include <string>
#include <vector>

namespace cartan::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailed = 1;
inline constexpr int kExitConfigError = 2;

// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

const std::vector<std::string>& subcommand_names();

}  // namespace cartan::cli
