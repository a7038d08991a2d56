#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace gsim::cli {

struct Command {
    std::string path;  // "gen", "experiment rmse", ...
    std::string help;
    std::vector<KeySpec> schema;
    void (*run)(RunConfig& cfg, std::ostream& out);
};

const std::vector<Command>& commands();

}  // namespace gsim::cli
