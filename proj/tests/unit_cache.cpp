#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "heckezeta/special.hpp"
#include "heckezeta/transfer_matrix.hpp"
#include "heckezeta/zeta_cache.hpp"

using namespace hz;

namespace {

const PrecisionContext kCtx = PrecisionContext::for_bits(256, 64);

// fresh path per test case so cases stay independent
std::string temp_cache_path(const char* tag) {
    static int counter = 0;
    std::filesystem::path p = std::filesystem::temp_directory_path() /
                              ("hz_cache_" + std::to_string(::getpid()) + "_" + tag + "_" +
                               std::to_string(counter++) + ".txt");
    std::filesystem::remove(p);
    return p.string();
}

struct PathGuard {
    std::string path;
    ~PathGuard() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("hex float codec round trips exactly") {
    for (const char* str : {"0.1", "-123456.789", "1e-60", "0.75", "3.25e+40"}) {
        for (mpfr_prec_t p : {53L, 113L, 300L}) {
            Real x(str, p, MPFR_RNDN);
            Real back = real_from_hex(real_to_hex(x), p);
            CHECK(mpfr_equal_p(x.raw(), back.raw()) != 0);
        }
    }
    Real zero(128);
    CHECK(real_from_hex(real_to_hex(zero), 128).is_zero());
    CHECK_THROWS_AS(real_from_hex("0x1.gp+2", 64), Error);
    CHECK_THROWS_AS(real_from_hex("", 64), Error);
}

TEST_CASE("store then lookup returns the identical bits") {
    PathGuard g{temp_cache_path("roundtrip")};
    ZetaCache cache(g.path);
    CHECK(cache.writable());
    CHECK(cache.size() == 0);

    Complex s(Real("0.6", 256, MPFR_RNDN), Real("0.4", 256, MPFR_RNDN));
    std::vector<Complex> zs = zeta_range(s, 2, 4, kCtx);
    for (long t = 0; t < 4; ++t) cache.store(256, s, 2 * t, zs[static_cast<std::size_t>(t)]);
    CHECK(cache.size() == 4);

    for (long t = 0; t < 4; ++t) {
        auto hit = cache.lookup(256, s, 2 * t);
        REQUIRE(hit.has_value());
        CHECK(mpfr_equal_p(hit->re().raw(), zs[static_cast<std::size_t>(t)].re().raw()) != 0);
        CHECK(mpfr_equal_p(hit->im().raw(), zs[static_cast<std::size_t>(t)].im().raw()) != 0);
    }
    // different precision or offset is a miss, not a wrong hit
    CHECK(!cache.lookup(128, s, 0).has_value());
    CHECK(!cache.lookup(256, s, 1).has_value());
}

TEST_CASE("entries survive a reload from disk") {
    PathGuard g{temp_cache_path("persist")};
    Complex s(Real("0.75", 256, MPFR_RNDN), Real(256));
    Complex z0 = zeta_range(s, 2, 1, kCtx)[0];
    {
        ZetaCache cache(g.path);
        cache.store(256, s, 0, z0);
    }
    ZetaCache reloaded(g.path);
    CHECK(reloaded.size() == 1);
    auto hit = reloaded.lookup(256, s, 0);
    REQUIRE(hit.has_value());
    CHECK(mpfr_equal_p(hit->re().raw(), z0.re().raw()) != 0);
}

TEST_CASE("corrupt and wrong entries are dropped, then shadowed by a fresh store") {
    PathGuard g{temp_cache_path("corrupt")};
    Complex s(Real("0.75", 256, MPFR_RNDN), Real(256));
    std::string sre = real_to_hex(s.re());
    std::string sim = real_to_hex(s.im());
    {
        std::ofstream out(g.path);
        out << "heckezeta-zeta-cache/1\n";
        // unparseable payload for k=0, plausible-looking but wrong value for k=2
        out << "256 0 " << sre << ' ' << sim << " not-a-number 0\n";
        out << "256 2 " << sre << ' ' << sim << " 0x1.8p+3 0\n";
    }
    ZetaCache cache(g.path);
    CHECK(cache.size() == 2);
    CHECK(!cache.lookup(256, s, 0).has_value());  // parse failure
    CHECK(!cache.lookup(256, s, 2).has_value());  // validation failure (zeta(3.5) != 12)

    Complex z0 = zeta_range(s, 2, 2, kCtx)[0];
    cache.store(256, s, 0, z0);
    auto hit = cache.lookup(256, s, 0);
    REQUIRE(hit.has_value());
    CHECK(mpfr_equal_p(hit->re().raw(), z0.re().raw()) != 0);

    // on reload the appended correct line must win over the corrupt one
    ZetaCache reloaded(g.path);
    auto hit2 = reloaded.lookup(256, s, 0);
    REQUIRE(hit2.has_value());
    CHECK(mpfr_equal_p(hit2->re().raw(), z0.re().raw()) != 0);
}

TEST_CASE("foreign file headers make the cache inert") {
    PathGuard g{temp_cache_path("foreign")};
    {
        std::ofstream out(g.path);
        out << "somebody-elses-format/7\n";
        out << "precious data that must not be touched\n";
    }
    auto before = std::filesystem::file_size(g.path);
    ZetaCache cache(g.path);
    CHECK(!cache.writable());
    CHECK(cache.size() == 0);

    Complex s(Real("0.75", 256, MPFR_RNDN), Real(256));
    Complex z0 = zeta_range(s, 2, 1, kCtx)[0];
    cache.store(256, s, 0, z0);  // must not append
    CHECK(std::filesystem::file_size(g.path) == before);

    std::ifstream in(g.path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "somebody-elses-format/7");
}

TEST_CASE("cached evaluation is bitwise identical to uncached") {
    PathGuard g{temp_cache_path("bitwise")};
    GroupParam w(Real(3L, 256));
    Complex s(Real("0.62", 256, MPFR_RNDN), Real("0.31", 256, MPFR_RNDN));

    FNValue plain = evaluate_fn(12, s, w, MatrixBasis::Symmetric, kCtx);
    ZetaCache cache(g.path);
    FNValue cold = evaluate_fn(12, s, w, MatrixBasis::Symmetric, kCtx, &cache);
    CHECK(cache.size() > 0);
    FNValue warm = evaluate_fn(12, s, w, MatrixBasis::Symmetric, kCtx, &cache);

    CHECK(mpfr_equal_p(plain.value.re().raw(), cold.value.re().raw()) != 0);
    CHECK(mpfr_equal_p(plain.value.im().raw(), cold.value.im().raw()) != 0);
    CHECK(mpfr_equal_p(plain.value.re().raw(), warm.value.re().raw()) != 0);
    CHECK(mpfr_equal_p(plain.value.im().raw(), warm.value.im().raw()) != 0);

    // and a second process reading the same file also reproduces the bits
    ZetaCache other(g.path);
    FNValue again = evaluate_fn(12, s, w, MatrixBasis::Symmetric, kCtx, &other);
    CHECK(mpfr_equal_p(plain.value.re().raw(), again.value.re().raw()) != 0);
}
