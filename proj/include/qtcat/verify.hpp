#pragma once

// Named verification suites. Each returns a machine-readable report:
// {"suite", "m_max", "pass", "checks": [{"name", "pass", "fatal", "detail"}]}.
// Non-fatal checks (open conjectures) are reported but do not affect "pass".

#include <string>
#include <vector>

#include <json.hpp>

namespace qtcat {

const std::vector<std::string>& suite_names();
// Default parameter bound per suite; for "gm" it bounds r.
int default_m_max(const std::string& suite);
// Throws BadParameters for an unknown suite or m_max < 1.
nlohmann::json run_suite(const std::string& suite, int m_max);

}  // namespace qtcat
