#pragma once

#include <string>
#include <vector>

namespace tqft {

// Root of the bundled data; TQFT_DATA_DIR in the environment overrides the
// compiled-in location.
std::string data_dir();

// kind is one of categories, modular, nimreps, plumbings, surfaces,
// triangulations. Throws Error when the fixture is missing.
std::string fixture_path(const std::string& kind, const std::string& name);
std::vector<std::string> list_fixtures(const std::string& kind);

// Accepts either a path or, when no such file exists, a bundled fixture name.
std::string resolve_input(const std::string& kind, const std::string& token);

std::string read_file(const std::string& path);

} // namespace tqft
