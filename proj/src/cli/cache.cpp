#include <cstdio>
#include <fstream>
#include <sstream>

#include "dtup/cli.hpp"

namespace dtup::cli {

std::string cache_key(const std::string& command, const Json& inputs)
{
    const std::string canonical = Json{{"command", command}, {"inputs", inputs}}.dump();
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string version) : dir_(std::move(dir)), version_(std::move(version))
{
    std::filesystem::create_directories(dir_);
}

std::optional<Json> ResultCache::lookup(const std::string& key)
{
    const auto path = dir_ / (key + ".json");
    if (!std::filesystem::exists(path)) return std::nullopt;
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    Json entry = Json::parse(buf.str(), nullptr, false);
    if (entry.is_discarded() || !entry.is_object() || !entry.contains("version") || !entry.contains("envelope")) {
        warnings_.push_back("skipping corrupt cache entry " + path.string());
        return std::nullopt;
    }
    if (entry["version"] != version_) return std::nullopt;
    return entry["envelope"];
}

void ResultCache::store(const std::string& key, const Json& envelope)
{
    const auto path = dir_ / (key + ".json");
    const auto tmp = dir_ / (key + ".json.tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << Json{{"version", version_}, {"envelope", envelope}}.dump();
        if (!out) {
            warnings_.push_back("could not write cache entry " + path.string());
            return;
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace dtup::cli
