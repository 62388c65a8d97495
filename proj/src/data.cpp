#include "k3q/data.hpp"

#include <cstdlib>

#ifndef K3Q_DEFAULT_DATA_DIR
#define K3Q_DEFAULT_DATA_DIR "data"
#endif

namespace k3q {

std::string default_data_dir() {
    if (const char* d = std::getenv("K3Q_DATA_DIR"); d && *d) return d;
    return K3Q_DEFAULT_DATA_DIR;
}

DataPaths data_paths(const std::optional<std::string>& fixturesOverride) {
    std::string dir = default_data_dir();
    DataPaths p{dir + "/fixtures.txt", dir + "/verdicts.tsv", dir + "/verdicts_enriques.tsv", dir + "/plans.json"};
    if (fixturesOverride) {
        p.fixtures = *fixturesOverride;
    } else if (const char* f = std::getenv("K3Q_FIXTURES"); f && *f) {
        p.fixtures = f;
    }
    return p;
}

}  // namespace k3q
