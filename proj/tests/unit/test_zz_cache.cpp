#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "msplab/cache.hpp"
#include "msplab/ifun.hpp"
#include "msplab/zz.hpp"

using namespace msplab;

TEST_CASE("F(w,x) low coefficients") {
    WSeries F = f_series(target_config(6), 3, 4);
    CHECK(F.f[0][0] == 1);
    for (int i = 1; i <= 4; ++i) CHECK(is_zero(F.f[i][0]));
    CHECK(F.f[0][1] == 360);
    WSeries G = f_series_display6(3, 4);
    for (int i = 0; i <= 4; ++i) CHECK(compare(F.f[i], G.f[i]).equal);
}

TEST_CASE("tower identities") {
    for (int k : {6, 8, 10}) CHECK(verify_zz(target_config(k), 15).pass);
    auto I = ip_tower(target_config(6), 10);
    for (const auto& s : I) CHECK(s[0] == 1);
    CHECK(compare(I[0], generators(target_config(6), 10).I0).equal);
}

TEST_CASE("cache round trip and corruption") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "msplab_cache_test";
    fs::remove_all(dir);
    CacheKey key{"ifun", "generators", 6, 0, 20, 0};
    CacheEntry e;
    e.key = key;
    e.payload = {{"I0", series_json(generators(target_config(6), 20).I0)}};
    cache_store(dir.string(), e);
    auto back = cache_load(dir.string(), key);
    REQUIRE(back);
    CHECK(back->payload == e.payload);
    CacheKey other = key;
    other.order = 21;
    CHECK_FALSE(cache_load(dir.string(), other));
    // flip one digit on disk
    fs::path p = dir / (key.str() + ".json");
    std::string body;
    {
        std::ifstream is(p);
        body.assign(std::istreambuf_iterator<char>(is), {});
    }
    auto pos = body.find("360");
    REQUIRE(pos != std::string::npos);
    body[pos] = '4';
    std::ofstream(p) << body;
    CHECK_THROWS_AS(cache_load(dir.string(), key), SchemaMismatch);
    fs::remove_all(dir);
}
