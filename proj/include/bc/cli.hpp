#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bc::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kSchemaError = 2;
inline constexpr int kCapExceeded = 3;
inline constexpr int kPrecondition = 4;

// args excludes the program name. JSON goes to `out`, messages to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bc::cli
