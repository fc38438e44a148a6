#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "netfit/rng.hpp"

namespace netfit::cli {

/// Writes `content` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& content);
std::string read_text(const std::filesystem::path& path);

struct ManifestEntry {
    std::string name;
    std::filesystem::path path;
    std::string domain;
};

/// CSV with header name,path,domain. Relative paths resolve against the
/// manifest's directory. Names must be unique and comma-free.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest);

/// Name safe for use inside a file name.
std::string file_stem_for(const std::string& name);

}  // namespace netfit::cli
