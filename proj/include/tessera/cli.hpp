#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tessera {

// Runs one command line in-process. args holds the tokens after the program
// name, in order. Reports go to out as JSON; error records go to err. The
// return value is the process exit code: 0 when every check passes, 1 when a
// verification found a counterexample (a witness file is written), 2 on
// malformed input or usage errors. Identical arguments produce byte-identical
// output; the only randomness is the --seed flag of the sampling commands.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tessera
