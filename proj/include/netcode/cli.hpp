#ifndef NETCODE_CLI_HPP
#define NETCODE_CLI_HPP

/**
 * Command-line harness.  run() owns parsing, dispatch, and the exit-code
 * contract: 0 success, 1 falsification (a verification suite or simulation
 * found a counterexample), 2 parse or usage errors, 3 dimension or parameter
 * errors, 4 enumeration budget exceeded (rerun with --force), 5 anything
 * else.  NETCODE_BUDGET overrides the enumeration budget; --force lifts it
 * for one invocation.
 */

namespace netcode::cli {

int run(int argc, char** argv);

} // namespace netcode::cli

#endif
