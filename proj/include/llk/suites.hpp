#pragma once

#include <string>
#include <vector>

#include "llk/diagram.hpp"

namespace llk {

// Built-in law suites, written in the diagram dialect.
std::vector<std::string> suite_names();
const std::string& suite_text(const std::string& name);
// Throws std::out_of_range for an unknown name.
const SuiteSpec& builtin_suite(const std::string& name);

}  // namespace llk
