#pragma once
#include <string>

#include "nldirac/dynamics.hpp"

namespace nldirac {

// Full run description assembled from an INI config.  Defaults mirror the
// reference setup: linear model, vorticity 1, n = 4096 on (0, 40],
// dt = 0.25 h, t in [0, 5], Strong weight.
struct Config {
    // [grid]
    std::size_t n = 4096;
    double rmax = 40.0;

    // [model]
    ModelSpec model;

    // [init]
    InitialData init;

    // [time]
    double dt_factor = 0.25;  // dt = dt_factor * h
    double tmax = 5.0;
    std::size_t record_every = 2;
    double cfl = 0.5;

    // [weight]
    Weight weight;  // family strong|delta, delta exponent

    // [output]
    Vec radii{5.0, 10.0, 20.0};
    std::size_t snapshot_every = 0;
};

// Strict INI parser: unknown sections or keys, malformed lines, duplicate
// keys, and unparsable values all throw ConfigError with the line number.
// Lines starting with '#' or ';' are comments.
Config parse_config(const std::string& text);
Config parse_config_file(const std::string& path);

RadialGrid make_grid(const Config& c);
SimulationOptions make_options(const Config& c);

}  // namespace nldirac
