#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "dtup/cli.hpp"

namespace dtup::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

void RunConfig::validate() const
{
    if (timeout_seconds <= 0) throw std::invalid_argument("timeout must be positive");
    if (worker_count == 0) throw std::invalid_argument("worker count must be at least 1");
    if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read config file " + path.string());
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "timeout_seconds") base.timeout_seconds = std::stoll(value);
            else if (key == "worker_count") base.worker_count = static_cast<unsigned>(std::stoul(value));
            else if (key == "cache_dir") base.cache_dir = value;
            else if (key == "tolerance") base.tolerance = std::stod(value);
            else if (key == "output") base.output = value;
            else throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::logic_error& e) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    base.validate();
    return base;
}

void apply_environment(RunConfig& config)
{
    if (const char* dir = std::getenv(kCacheEnv); dir && *dir) config.cache_dir = dir;
}

}  // namespace dtup::cli
