#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liftlab {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on invalid input or a guard refusal, 2 on an internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liftlab
