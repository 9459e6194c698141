#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace cremona {

// Runs one command (args without the program name) against the given
// streams. Returns 0 on success, 1 when the computation raises a domain
// error, 2 on usage or parse errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cremona
