#pragma once

#include <string>
#include <vector>

#include "cli/document.hpp"

namespace loghat::cli {

std::vector<std::string> fixture_names();
// Throws ValidationError for an unknown name.
InputDocument emit_fixture(const std::string& name);

}  // namespace loghat::cli
