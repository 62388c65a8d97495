#pragma once

#include <optional>
#include <string>

namespace k3q {

struct DataPaths {
    std::string fixtures;
    std::string verdicts;
    std::string enriques;
    std::string plans;
};

// $K3Q_DATA_DIR, else the data/ directory of the source tree.
std::string default_data_dir();

// Fixture path precedence: explicit override, $K3Q_FIXTURES, <data dir>/fixtures.txt.
DataPaths data_paths(const std::optional<std::string>& fixturesOverride = std::nullopt);

}  // namespace k3q
