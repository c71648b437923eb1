#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gammatype::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 17 significant digits, independent of locale.
std::string format_double(double x);

}  // namespace gammatype::cli
