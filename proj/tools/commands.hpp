#pragma once

namespace dgsp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoPath = 3;
inline constexpr int kExitBudget = 4;
inline constexpr int kExitInternal = 1;

int run(int argc, char** argv);

}  // namespace dgsp::cli
