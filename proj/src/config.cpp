#include "nldirac/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nldirac/errors.hpp"

namespace nldirac {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

double parse_double(int line, const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        fail(line, "value of '" + key + "' is not a number: '" + v + "'");
    }
}

long long parse_int(int line, const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        fail(line, "value of '" + key + "' is not an integer: '" + v + "'");
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

}  // namespace

Config parse_config(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    std::set<std::string> seen;
    bool components_set = false;
    int line = 0;

    const std::set<std::string> known_sections = {"grid", "model", "init",
                                                  "time", "weight", "output"};

    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;

        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated section header");
            section = trim(s.substr(1, s.size() - 2));
            if (!known_sections.count(section))
                fail(line, "unknown section '" + section + "'");
            continue;
        }

        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (section.empty()) fail(line, "key '" + key + "' appears before any section");
        if (key.empty()) fail(line, "empty key");
        if (value.empty()) fail(line, "empty value for '" + key + "'");
        const std::string qualified = section + "." + key;
        if (!seen.insert(qualified).second)
            fail(line, "duplicate key '" + qualified + "'");

        if (section == "grid") {
            if (key == "n") {
                const long long v = parse_int(line, key, value);
                if (v < 16) fail(line, "grid n must be >= 16");
                c.n = static_cast<std::size_t>(v);
            } else if (key == "rmax") {
                c.rmax = parse_double(line, key, value);
                if (!(c.rmax > 0.0)) fail(line, "rmax must be > 0");
            } else {
                fail(line, "unknown key 'grid." + key + "'");
            }
        } else if (section == "model") {
            if (key == "family") {
                try {
                    c.model.family = nonlinearity_from_string(value);
                } catch (const ConfigError& e) {
                    fail(line, e.what());
                }
            } else if (key == "mass") {
                c.model.mass = parse_double(line, key, value);
            } else if (key == "S") {
                c.model.vorticity = static_cast<int>(parse_int(line, key, value));
            } else if (key == "g") {
                c.model.g = parse_double(line, key, value);
            } else if (key == "beta1") {
                c.model.beta1 = parse_double(line, key, value);
            } else if (key == "beta2") {
                c.model.beta2 = parse_double(line, key, value);
            } else if (key == "p") {
                c.model.power = parse_double(line, key, value);
            } else {
                fail(line, "unknown key 'model." + key + "'");
            }
        } else if (section == "init") {
            if (key == "amplitude") {
                c.init.amplitude = parse_double(line, key, value);
            } else if (key == "width") {
                c.init.width = parse_double(line, key, value);
            } else if (key == "center") {
                c.init.center = parse_double(line, key, value);
            } else if (key == "components") {
                c.init.in_p11 = c.init.in_p12 = c.init.in_p21 = c.init.in_p22 = false;
                const auto items = split_list(value);
                if (items.empty()) fail(line, "components list is empty");
                for (const auto& it : items) {
                    if (it == "p11") c.init.in_p11 = true;
                    else if (it == "p12") c.init.in_p12 = true;
                    else if (it == "p21") c.init.in_p21 = true;
                    else if (it == "p22") c.init.in_p22 = true;
                    else fail(line, "unknown component '" + it + "'");
                }
                components_set = true;
            } else {
                fail(line, "unknown key 'init." + key + "'");
            }
        } else if (section == "time") {
            if (key == "dt_factor") {
                c.dt_factor = parse_double(line, key, value);
                if (!(c.dt_factor > 0.0)) fail(line, "dt_factor must be > 0");
            } else if (key == "tmax") {
                c.tmax = parse_double(line, key, value);
                if (!(c.tmax > 0.0)) fail(line, "tmax must be > 0");
            } else if (key == "record_every") {
                const long long v = parse_int(line, key, value);
                if (v < 1) fail(line, "record_every must be >= 1");
                c.record_every = static_cast<std::size_t>(v);
            } else if (key == "cfl") {
                c.cfl = parse_double(line, key, value);
                if (!(c.cfl > 0.0) || c.cfl > 1.0) fail(line, "cfl must lie in (0,1]");
            } else {
                fail(line, "unknown key 'time." + key + "'");
            }
        } else if (section == "weight") {
            if (key == "family") {
                if (value == "strong") c.weight.family = WeightFamily::Strong;
                else if (value == "delta") c.weight.family = WeightFamily::Delta;
                else fail(line, "weight family must be 'strong' or 'delta'");
            } else if (key == "delta") {
                c.weight.delta = parse_double(line, key, value);
                if (!(c.weight.delta > 0.0)) fail(line, "weight delta must be > 0");
            } else {
                fail(line, "unknown key 'weight." + key + "'");
            }
        } else if (section == "output") {
            if (key == "radii") {
                c.radii.clear();
                for (const auto& it : split_list(value))
                    c.radii.push_back(parse_double(line, key, it));
                if (c.radii.empty()) fail(line, "radii list is empty");
            } else if (key == "snapshot_every") {
                const long long v = parse_int(line, key, value);
                if (v < 0) fail(line, "snapshot_every must be >= 0");
                c.snapshot_every = static_cast<std::size_t>(v);
            } else {
                fail(line, "unknown key 'output." + key + "'");
            }
        }
    }

    (void)components_set;
    validate(c.model);
    return c;
}

Config parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

RadialGrid make_grid(const Config& c) { return make_grid(c.rmax, c.n); }

SimulationOptions make_options(const Config& c) {
    SimulationOptions opt;
    opt.dt = c.dt_factor * (c.rmax / static_cast<double>(c.n));
    opt.tmax = c.tmax;
    opt.record_every = c.record_every;
    opt.snapshot_every = c.snapshot_every;
    opt.weight = c.weight;
    opt.delta = c.weight.family == WeightFamily::Delta ? c.weight.delta : 0.1;
    opt.radii = c.radii;
    opt.cfl = c.cfl;
    return opt;
}

}  // namespace nldirac
