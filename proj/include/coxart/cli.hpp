#ifndef COXART_CLI_HPP
#define COXART_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace coxart::cli {

// Runs one command (argv without the program name). Writes results to
// |out|, diagnostics to |err|. Returns 0 on success, 1 on a domain error,
// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace coxart::cli

#endif
