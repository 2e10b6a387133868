#include "msplab/cache.hpp"

#include <unistd.h>
#include <zlib.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace msplab {

namespace fs = std::filesystem;

namespace {

unsigned long crc(const std::string& s) {
    return crc32(0L, reinterpret_cast<const Bytef*>(s.data()), static_cast<uInt>(s.size()));
}

fs::path entry_path(const std::string& dir, const CacheKey& key) { return fs::path(dir) / (key.str() + ".json"); }

json key_json(const CacheKey& k) {
    return {{"module", k.module}, {"op", k.op}, {"target", k.target}, {"N", k.N}, {"order", k.order}, {"zdepth", k.zdepth}};
}

}  // namespace

std::string CacheKey::str() const {
    std::ostringstream os;
    os << module << "." << op << ".k" << target << ".N" << N << ".o" << order << ".z" << zdepth;
    return os.str();
}

std::string default_cache_dir() {
    const char* v = std::getenv("MSPLAB_CACHE");
    return v ? std::string(v) : std::string();
}

void cache_store(const std::string& dir, const CacheEntry& e) {
    static std::atomic<unsigned> counter{0};
    fs::create_directories(dir);
    std::string body = e.payload.dump();
    json doc = {{"schema_version", e.schema_version}, {"key", key_json(e.key)}, {"crc32", crc(body)}, {"payload", e.payload}};
    fs::path final_path = entry_path(dir, e.key);
    fs::path tmp = final_path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cache_store: cannot write " + tmp.string());
        os << doc.dump() << "\n";
        if (!os.flush()) throw std::runtime_error("cache_store: write failed for " + tmp.string());
    }
    fs::rename(tmp, final_path);
}

std::optional<CacheEntry> cache_load(const std::string& dir, const CacheKey& key) {
    fs::path p = entry_path(dir, key);
    std::ifstream is(p, std::ios::binary);
    if (!is) return std::nullopt;
    json doc;
    try {
        doc = json::parse(is);
    } catch (const json::parse_error& e) {
        throw SchemaMismatch("cache_load: unreadable " + p.string());
    }
    if (!doc.contains("schema_version") || doc["schema_version"] != kCacheSchema)
        throw SchemaMismatch("cache_load: schema version differs in " + p.string());
    if (doc["key"] != key_json(key)) throw SchemaMismatch("cache_load: key differs in " + p.string());
    CacheEntry e;
    e.key = key;
    e.payload = doc["payload"];
    if (doc["crc32"] != crc(e.payload.dump())) throw SchemaMismatch("cache_load: checksum failure in " + p.string());
    return e;
}

}  // namespace msplab
