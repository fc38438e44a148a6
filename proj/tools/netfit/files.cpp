#include "files.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "netfit/dataset.hpp"
#include "netfit/error.hpp"

namespace netfit::cli {

void write_text(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << content;
    if (!out) throw Error("failed writing " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest) {
    std::istringstream in(read_text(manifest));
    const auto base = manifest.parent_path();
    std::vector<ManifestEntry> entries;
    std::set<std::string> names;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r" || line.front() == '#') continue;
        const auto fields = split_csv_line(line);
        if (!header_seen) {
            header_seen = true;
            if (fields.size() != 3 || fields[0] != "name" || fields[1] != "path" || fields[2] != "domain")
                throw ParseError(manifest.string() + ": header must be name,path,domain", line_no);
            continue;
        }
        if (fields.size() != 3) throw ParseError(manifest.string() + ": expected 3 fields", line_no);
        ManifestEntry entry{fields[0], fields[1], fields[2]};
        if (entry.name.empty()) throw ParseError(manifest.string() + ": empty name", line_no);
        if (!names.insert(entry.name).second)
            throw ParseError(manifest.string() + ": duplicate name " + entry.name, line_no);
        if (std::find(kDomains.begin(), kDomains.end(), entry.domain) == kDomains.end())
            throw ParseError(manifest.string() + ": unknown domain '" + entry.domain + "'", line_no);
        if (entry.path.is_relative()) entry.path = base / entry.path;
        entries.push_back(std::move(entry));
    }
    if (entries.empty()) throw ParseError(manifest.string() + ": no entries");
    return entries;
}

std::string file_stem_for(const std::string& name) {
    std::string out = name;
    for (char& c : out)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.')) c = '_';
    return out;
}

}  // namespace netfit::cli
