#pragma once

// Command dispatch, run configuration, JSON envelopes and the result cache.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace dtup::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kCacheEnv = "DTUP_CACHE_DIR";

enum ExitCode : int {
    kOk = 0,
    kVerdictFailure = 1,
    kUsage = 2,
    kTimeout = 3,
};

struct RunConfig {
    std::int64_t timeout_seconds = 600;
    unsigned worker_count = 1;
    std::filesystem::path cache_dir;  // empty: caching off
    double tolerance = 1e-6;
    std::string output = "-";  // "-" is standard output

    /// Throws std::invalid_argument on timeout <= 0, tolerance < 0 or zero workers.
    void validate() const;
};

/// key=value lines mirroring RunConfig; '#' starts a comment.
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});
/// Applies the cache directory override from the environment, if set.
void apply_environment(RunConfig& config);

/// FNV-1a of the canonical dump of (command, inputs), as 16 hex digits.
std::string cache_key(const std::string& command, const Json& inputs);

class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir, std::string version = kVersion);

    std::optional<Json> lookup(const std::string& key);
    void store(const std::string& key, const Json& envelope);
    /// Warnings about entries that could not be read.
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

private:
    std::filesystem::path dir_;
    std::string version_;
    std::vector<std::string> warnings_;
};

struct CommandOutcome {
    int exit_code = kOk;
    Json envelope;  // null on usage errors
    std::string message;  // usage or error text
    std::string output = "-";
};

/// Runs one subcommand; args excludes the program name.
CommandOutcome run_command(const std::vector<std::string>& args);

/// Entry point used by the executable: dispatches, writes the envelope to the
/// configured output and messages to stderr.
int main_entry(int argc, char** argv);

}  // namespace dtup::cli
