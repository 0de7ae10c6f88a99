// Flat key-value configuration files: parsing, validation, and canonical
// emission for round-trip fidelity.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "problem.hpp"

namespace ncsn {

using ConfigMap = std::map<std::string, std::string>;

inline std::string trim(const std::string& text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        --end;
    }
    return text.substr(begin, end - begin);
}

inline std::string to_lower(std::string text) {
    std::transform(text.begin(), text.end(), text.begin(), [](unsigned char ch) {
        return static_cast<char>(std::tolower(ch));
    });
    return text;
}

inline std::string strip_quotes(const std::string& text) {
    if (text.size() >= 2 && ((text.front() == '"' && text.back() == '"') ||
                             (text.front() == '\'' && text.back() == '\''))) {
        return text.substr(1, text.size() - 2);
    }
    return text;
}

// Lines of the form `key = value`; '#' starts a comment; keys are
// case-insensitive so the single-letter physics symbols may be capitalized.
inline ConfigMap parse_config_text(const std::string& text) {
    ConfigMap map;
    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        const std::string entry = trim(line);
        if (entry.empty()) {
            continue;
        }
        const std::size_t eq = entry.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected key = value");
        }
        const std::string key = to_lower(trim(entry.substr(0, eq)));
        const std::string value = strip_quotes(trim(entry.substr(eq + 1)));
        if (key.empty() || value.empty()) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": empty key or value");
        }
        map[key] = value;
    }
    return map;
}

inline ConfigMap parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

namespace detail {

inline double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0') {
        throw ConfigError(key + ": not a number: " + value);
    }
    return parsed;
}

inline int parse_int(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const long parsed = std::strtol(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0') {
        throw ConfigError(key + ": not an integer: " + value);
    }
    return static_cast<int>(parsed);
}

}  // namespace detail

// Builds a validated ProblemConfig. The ten physics keys are required;
// max_iterations, s_quad_nodes, and stopping_norm carry defaults.
inline ProblemConfig build_problem_config(const ConfigMap& map) {
    static const char* required[] = {"x", "cells", "n", "m",  "c",
                                     "sigma_t", "model", "q", "xi", "solver"};
    for (const char* key : required) {
        if (map.find(key) == map.end()) {
            throw ConfigError(std::string("missing required field: ") + key);
        }
    }
    ProblemConfig cfg;
    for (const auto& [key, value] : map) {
        if (key == "x") {
            cfg.X = detail::parse_double(key, value);
        } else if (key == "cells") {
            cfg.cells = detail::parse_int(key, value);
        } else if (key == "n") {
            cfg.N = detail::parse_int(key, value);
        } else if (key == "m") {
            cfg.M = detail::parse_int(key, value);
        } else if (key == "c") {
            cfg.c = detail::parse_double(key, value);
        } else if (key == "sigma_t") {
            cfg.sigma_t = detail::parse_double(key, value);
        } else if (key == "model") {
            const std::string name = to_lower(value);
            if (name == "exponential") {
                cfg.model = ModelKind::Exponential;
            } else if (name == "diffusion_mimic") {
                cfg.model = ModelKind::DiffusionMimic;
            } else {
                throw ConfigError("model: must be exponential or diffusion_mimic");
            }
        } else if (key == "q") {
            cfg.q = detail::parse_double(key, value);
        } else if (key == "xi") {
            cfg.xi = detail::parse_double(key, value);
        } else if (key == "solver") {
            const std::string name = to_lower(value);
            if (name == "si") {
                cfg.solver = SolverKind::SI;
            } else if (name == "s2sa") {
                cfg.solver = SolverKind::S2SA;
            } else {
                throw ConfigError("solver: must be si or s2sa");
            }
        } else if (key == "max_iterations") {
            cfg.max_iterations = detail::parse_int(key, value);
        } else if (key == "s_quad_nodes") {
            cfg.s_quad_nodes = detail::parse_int(key, value);
        } else if (key == "stopping_norm") {
            const std::string name = to_lower(value);
            if (name == "l2") {
                cfg.stopping_norm = StoppingNorm::L2;
            } else if (name == "pointwise") {
                cfg.stopping_norm = StoppingNorm::Pointwise;
            } else {
                throw ConfigError("stopping_norm: must be l2 or pointwise");
            }
        } else {
            throw ConfigError("unknown key: " + key);
        }
    }
    validate(cfg);
    return cfg;
}

inline std::string format_g17(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

inline std::string emit_config(const ProblemConfig& cfg) {
    std::ostringstream out;
    out << "x = " << format_g17(cfg.X) << "\n";
    out << "cells = " << cfg.cells << "\n";
    out << "n = " << cfg.N << "\n";
    out << "m = " << cfg.M << "\n";
    out << "c = " << format_g17(cfg.c) << "\n";
    out << "sigma_t = " << format_g17(cfg.sigma_t) << "\n";
    out << "model = "
        << (cfg.model == ModelKind::Exponential ? "exponential" : "diffusion_mimic")
        << "\n";
    out << "q = " << format_g17(cfg.q) << "\n";
    out << "xi = " << format_g17(cfg.xi) << "\n";
    out << "solver = " << (cfg.solver == SolverKind::S2SA ? "s2sa" : "si") << "\n";
    out << "max_iterations = " << cfg.max_iterations << "\n";
    out << "s_quad_nodes = " << cfg.s_quad_nodes << "\n";
    out << "stopping_norm = "
        << (cfg.stopping_norm == StoppingNorm::L2 ? "l2" : "pointwise") << "\n";
    return out.str();
}

inline bool operator==(const ProblemConfig& a, const ProblemConfig& b) {
    return a.X == b.X && a.cells == b.cells && a.N == b.N && a.M == b.M &&
           a.c == b.c && a.sigma_t == b.sigma_t && a.model == b.model &&
           a.q == b.q && a.xi == b.xi && a.solver == b.solver &&
           a.max_iterations == b.max_iterations &&
           a.s_quad_nodes == b.s_quad_nodes &&
           a.stopping_norm == b.stopping_norm;
}

}  // namespace ncsn
