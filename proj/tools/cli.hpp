#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hde::cli {

/// Runs one subcommand (simulate | censor | estimate | sigma | experiment).
/// Data goes to `out` (or to files named by flags/config), diagnostics to
/// `err`. Returns 0 on success, 1 on domain errors (insufficient pairs,
/// singular Sigma, simulation blow-up, ...), 2 on usage or parse errors.
/// Seed precedence: config file < HDE_SEED environment variable < --seed.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hde::cli
