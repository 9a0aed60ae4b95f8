#ifndef OMEGALAB_TOOLS_CLI_HPP
#define OMEGALAB_TOOLS_CLI_HPP

#include "omegalab/certify.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace omegalab::cli {

inline constexpr int kExitSmooth = 0;
inline constexpr int kExitCriterionFails = 1;
inline constexpr int kExitNotApplicable = 2;
inline constexpr int kExitUndecided = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitNotPolymatroid = 65;

int exit_code(Verdict v);

// Identifiers occurring in text, sorted with numeric suffixes compared as
// numbers: "y + x10 + x2" -> x2, x10, y.
std::vector<std::string> infer_variables(const std::string& text);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args without the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omegalab::cli

#endif
