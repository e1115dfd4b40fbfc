#include "padicsum/tables.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace padicsum {

namespace fs = std::filesystem;

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

TableCache::TableCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path TableCache::entry_path(std::size_t kmax, Sign eps) const {
    std::string key = std::to_string(kmax) + "|" + to_string(eps) + "|" + kTableFormatVersion;
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(key)));
    return dir_ / ("tables-k" + std::to_string(kmax) + (eps == Sign::plus ? "-p-" : "-m-") +
                   hex + ".json");
}

std::optional<GeneratedTables> TableCache::load(std::size_t kmax, Sign eps) const {
    fs::path path = entry_path(kmax, eps);
    std::ifstream in(path);
    if (!in) {
        return std::nullopt;
    }
    try {
        auto j = nlohmann::json::parse(in);
        GeneratedTables t = tables_from_json(j);
        if (t.kmax() != kmax || t.eps() != eps) {
            return std::nullopt;
        }
        return t;
    } catch (const std::exception&) {
        // unreadable entry: treat as a miss, it gets rewritten
        return std::nullopt;
    }
}

void TableCache::store(const GeneratedTables& tables) const {
    fs::create_directories(dir_);
    fs::path path = entry_path(tables.kmax(), tables.eps());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << to_json(tables).dump() << '\n';
        if (!out) {
            throw std::runtime_error("cannot write cache entry " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

GeneratedTables TableCache::get_or_build(std::size_t kmax, Sign eps) const {
    if (auto cached = load(kmax, eps)) {
        return *std::move(cached);
    }
    GeneratedTables t = build_tables(kmax, eps);
    store(t);
    return t;
}

std::size_t TableCache::clear() const {
    std::size_t removed = 0;
    if (!fs::exists(dir_)) {
        return 0;
    }
    for (const auto& entry : fs::directory_iterator(dir_)) {
        auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.starts_with("tables-") && name.ends_with(".json")) {
            fs::remove(entry.path());
            ++removed;
        }
    }
    return removed;
}

std::size_t TableCache::entry_count() const {
    std::size_t count = 0;
    if (!fs::exists(dir_)) {
        return 0;
    }
    for (const auto& entry : fs::directory_iterator(dir_)) {
        auto name = entry.path().filename().string();
        if (entry.is_regular_file() && name.starts_with("tables-") && name.ends_with(".json")) {
            ++count;
        }
    }
    return count;
}

}  // namespace padicsum
