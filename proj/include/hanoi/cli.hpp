#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hanoi::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInvalidArguments = 2;
inline constexpr int kResourceLimit = 3;

// Default oracle memory budget in bytes, overridden by --memory-budget.
inline constexpr const char* kMemoryBudgetEnv = "HANOI_MEMORY_BUDGET";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// argv[0] is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hanoi::cli
