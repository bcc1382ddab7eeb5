#include "xiconst/cli_config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "xiconst/errors.hpp"
#include "xiconst/precision.hpp"

namespace xiconst {

namespace {

const std::set<std::string> kKnownMethods = {"series", "stieltjes", "contour", "zeros"};

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

void RunConfig::validate() const {
    if (n_max < 1) throw domain_error("config: n_max must be >= 1");
    if (methods.empty()) throw domain_error("config: methods must be nonempty");
    for (const auto& m : methods)
        if (!kKnownMethods.count(m)) throw domain_error("config: unknown method '" + m + "'");
    if (!(radius > 0.0 && radius < 1.0)) throw domain_error("config: radius must be in (0,1)");
    if (format != "json" && format != "csv") throw domain_error("config: format must be json or csv");
}

long RunConfig::resolved_bits() const {
    if (bits > 0) return bits;
    PrecisionPolicy policy;
    return policy.effective_bits(static_cast<long>(n_max));
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("config: cannot open '" + path + "'");
    std::map<std::string, std::string> kv;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw parse_error("config: expected key=value at line " + std::to_string(lineno), lineno);
        kv[trimmed(t.substr(0, eq))] = trimmed(t.substr(eq + 1));
    }
    return kv;
}

void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    try {
        if (key == "n-max") cfg.n_max = static_cast<unsigned>(std::stoul(value));
        else if (key == "k-max") cfg.k_max = static_cast<unsigned>(std::stoul(value));
        else if (key == "bits") cfg.bits = std::stol(value);
        else if (key == "methods") cfg.methods = split_methods(value);
        else if (key == "radius") cfg.radius = std::stod(value);
        else if (key == "samples") cfg.samples = std::stoul(value);
        else if (key == "zeros-file") cfg.zeros_file = value;
        else if (key == "out-dir") cfg.out_dir = value;
        else if (key == "suite") cfg.suite = value;
        else if (key == "format") cfg.format = value;
        else throw domain_error("config: unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
        throw domain_error("config: bad value for '" + key + "'");
    } catch (const std::out_of_range&) {
        throw domain_error("config: value out of range for '" + key + "'");
    }
}

long resolve_bits(std::optional<long> flag_bits, const char* env_value, std::optional<long> file_bits) {
    if (flag_bits) return *flag_bits;
    if (env_value && *env_value) {
        try {
            return std::stol(env_value);
        } catch (...) {
            throw domain_error("config: bad XICONST_BITS value");
        }
    }
    if (file_bits) return *file_bits;
    return 0;
}

std::vector<std::string> split_methods(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        std::string tok = trimmed(comma == std::string::npos ? csv.substr(pos)
                                                             : csv.substr(pos, comma - pos));
        if (!tok.empty()) out.push_back(tok);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace xiconst
