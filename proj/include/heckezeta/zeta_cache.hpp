#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "heckezeta/complex.hpp"

namespace hz {

// Append-only file cache for zeta values, keyed by
// (working_bits, s, offset k) -> zeta(2s + k). Values are stored as exact
// hex floats, so a round trip loses nothing. The file carries a version
// header; a file with a foreign header is left alone (entries ignored,
// nothing migrated, no writes). Cached entries are validated on first use
// against a 64-bit recomputation; entries that fail to validate or parse are
// dropped. Appends take an advisory flock, so concurrent writers interleave
// whole lines.
class ZetaCache {
  public:
    explicit ZetaCache(std::string path);

    // Returns the cached value at the stored precision, or nullopt.
    std::optional<Complex> lookup(mpfr_prec_t bits, const Complex& s, long k);

    void store(mpfr_prec_t bits, const Complex& s, long k, const Complex& value);

    const std::string& path() const { return path_; }
    std::size_t size() const { return entries_.size(); }
    bool writable() const { return writable_; }

  private:
    struct Entry {
        std::string re_hex;
        std::string im_hex;
        bool validated = false;
        bool dropped = false;
    };
    using Key = std::tuple<long, std::string, std::string, long>;  // bits, s_re, s_im, k

    static Key make_key(mpfr_prec_t bits, const Complex& s, long k);
    void load();
    void append_line(const std::string& line);

    std::string path_;
    std::map<Key, Entry> entries_;
    bool writable_ = true;
};

// Exact hex-float encoding used for the cache and anywhere else a lossless
// textual form of a Real is needed.
std::string real_to_hex(const Real& x);
Real real_from_hex(const std::string& s, mpfr_prec_t prec);

}  // namespace hz
