#include "streetlink/manifest.hpp"

#include "streetlink/errors.hpp"

#include <cstdio>
#include <cstdlib>

namespace streetlink {

uint64_t fnv1a64(const std::string& data) {
    uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

nlohmann::json build_manifest(const std::string& command, const Scenario& sc,
                              const std::vector<std::string>& outputs) {
    char digest[17];
    std::snprintf(digest, sizeof(digest), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(sc.to_json().dump())));

    const char* stamp = std::getenv("STREETLINK_TIMESTAMP");
    nlohmann::json j;
    j["command"] = command;
    j["config_digest"] = digest;
    j["timestamp"] = stamp ? stamp : "1970-01-01T00:00:00Z";
    j["tool_version"] = "0.1.0";
    j["outputs"] = outputs;
    return j;
}

void write_json_file(const nlohmann::json& j, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f)
        throw IoError("cannot write file: " + path);
    const std::string text = j.dump(2) + "\n";
    std::fwrite(text.data(), 1, text.size(), f);
    if (std::fclose(f) != 0)
        throw IoError("failed to finish writing: " + path);
}

} // namespace streetlink
