#pragma once

#include <ostream>

namespace gboson::cli {

/// Entry point of the command-line tool. Exit codes: 0 all checks pass,
/// 1 a check failed or diverged, 2 configuration error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace gboson::cli
