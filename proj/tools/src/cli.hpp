#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace niggli::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

inline constexpr unsigned long long kDefaultSeed = 12345ull;

// Full command line including the program name in args[0]. Input that is
// not given on the command line or through --file is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);
int run(int argc, char** argv);

}  // namespace niggli::cli
