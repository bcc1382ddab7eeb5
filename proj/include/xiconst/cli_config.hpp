#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xiconst {

/// Settings shared by the CLI subcommands. Flags override the environment
/// (XICONST_BITS), which overrides the config file.
struct RunConfig {
    unsigned n_max = 16;
    unsigned k_max = 0; // 0: derived from n_max
    long bits = 0;      // 0: precision policy default for n_max
    std::vector<std::string> methods = {"series"};
    double radius = 0.9;
    unsigned long samples = 0; // 0: contour default
    std::string zeros_file;
    std::string out_dir = ".";
    std::string suite = "all";
    std::string format = "json";

    void validate() const;
    long resolved_bits() const; // applies the policy default when bits == 0
};

/// key=value per line, '#' comments, blank lines ignored.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Apply one config key (same names as the CLI flags, e.g. "n-max").
void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

/// Precedence: command-line flag, then environment, then config file.
long resolve_bits(std::optional<long> flag_bits, const char* env_value, std::optional<long> file_bits);

std::vector<std::string> split_methods(const std::string& csv);

} // namespace xiconst
