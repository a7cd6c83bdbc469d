#pragma once

#include <ostream>
#include <span>
#include <string>

namespace varpat {

// Runs one command line (without the program name). Exit codes: 0 success,
// 1 no match / unsatisfiable / undecided, 2 usage error or unsupported input,
// 3 malformed input text.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace varpat
