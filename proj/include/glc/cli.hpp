#pragma once
// Argument parsing, regime validation, orchestration, and the JSON/CSV
// reports.  tools/glc.cpp is a thin wrapper over cli_run so the tests can
// drive the full binary surface in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace glc {

// argv-style arguments, without the program name.  Writes the report to `out`
// and diagnostics to `err`.  Exit status: 0 all checks pass, 1 a check
// failed, 2 usage or regime error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glc
