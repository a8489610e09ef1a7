#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mumch {

// Entry point behind the `mumch` executable; `args` excludes the program name.
// Exit codes: 0 success, 1 verdict failure under --strict (or a failing
// paper-suite row), 2 input error with {"error": code, "detail": ...} on `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mumch
