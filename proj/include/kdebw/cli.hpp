#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdebw::cli {

enum ExitCode : int
{
  success = 0,
  input_error = 1,
  not_converged = 2
};

//! Entry point of the `kdebw` tool. Arguments exclude the program name.
//! Results go to `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kdebw::cli
