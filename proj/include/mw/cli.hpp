#ifndef MW_CLI_HPP
#define MW_CLI_HPP

#include <iosfwd>

namespace mw {

/// Entry point of the `mw` tool. Input JSON comes from `-f <file>` or, without
/// it, from `in`. Returns 0 on success, 1 on domain errors (reported as a JSON
/// object with an "error" field on `out`), 2 on malformed input or usage.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace mw

#endif  // MW_CLI_HPP
