#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace hyperalg::cli {

/// exit_code: 0 success, 1 verification failure (payload carries a witness),
/// 2 usage or input error.
struct CommandResult {
    int exit_code = 0;
    nlohmann::json payload;
    std::string text;
    bool json = false;  // --json was given
};

/// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace hyperalg::cli
