#pragma once

#include <string>
#include <vector>

namespace rrts {

// Entry point behind the rrts binary. Subcommands: run, bench, render,
// compare. Returns 0 on success, 2 on usage errors, 1 on runtime failures.
int cli_main(const std::vector<std::string>& args);

}  // namespace rrts
