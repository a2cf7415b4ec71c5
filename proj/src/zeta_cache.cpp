#include "heckezeta/zeta_cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <sys/stat.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "heckezeta/special.hpp"

namespace hz {

namespace {
const char* kHeader = "heckezeta-zeta-cache/1";
}

std::string real_to_hex(const Real& x) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", x.raw());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

Real real_from_hex(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    const char* c = s.c_str();
    char* end = nullptr;
    mpfr_strtofr(r.raw(), c, &end, 0, MPFR_RNDN);
    if (end == c || *end != '\0')
        fail(ErrorKind::CacheError, "unparseable hex float '" + s + "'");
    return r;
}

ZetaCache::ZetaCache(std::string path) : path_(std::move(path)) { load(); }

ZetaCache::Key ZetaCache::make_key(mpfr_prec_t bits, const Complex& s, long k) {
    return Key(static_cast<long>(bits), real_to_hex(s.re()), real_to_hex(s.im()), k);
}

void ZetaCache::load() {
    std::ifstream in(path_);
    if (!in.good()) return;  // absent file: fresh cache
    std::string line;
    if (!std::getline(in, line)) return;  // empty file
    if (line != kHeader) {
        // foreign or stale version: ignore everything, never migrate, and
        // do not append our own lines into it
        writable_ = false;
        return;
    }
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long bits = 0, k = 0;
        std::string sre, sim, zre, zim;
        if (!(ls >> bits >> k >> sre >> sim >> zre >> zim) || bits <= 1) continue;
        entries_[Key(bits, sre, sim, k)] = Entry{zre, zim, false, false};
    }
}

std::optional<Complex> ZetaCache::lookup(mpfr_prec_t bits, const Complex& s, long k) {
    auto it = entries_.find(make_key(bits, s, k));
    if (it == entries_.end() || it->second.dropped) return std::nullopt;
    Entry& e = it->second;

    Complex value(bits);
    try {
        value = Complex(real_from_hex(e.re_hex, bits), real_from_hex(e.im_hex, bits));
    } catch (const Error&) {
        e.dropped = true;
        return std::nullopt;
    }

    if (!e.validated) {
        // spot-check against a cheap low-precision recomputation before
        // trusting the stored digits
        PrecisionContext vctx(96, 32, 16);
        Real half_k = Real::ldexp(Real(k, s.re().prec() + 64), -1);
        Complex shifted(s.re().round_to(s.re().prec() + 64) + half_k, s.im());
        Complex fresh(96);
        try {
            fresh = zeta_range(shifted, 1, 1, vctx, nullptr)[0];
        } catch (const Error&) {
            e.dropped = true;
            return std::nullopt;
        }
        Real diff = (value.round_to(96) - fresh).abs(MPFR_RNDU);
        Real scale = Real::max(Real(1L, 96), fresh.abs(MPFR_RNDU));
        if (diff > Real::ldexp(scale, -24)) {
            e.dropped = true;
            return std::nullopt;
        }
        e.validated = true;
    }
    return value;
}

void ZetaCache::store(mpfr_prec_t bits, const Complex& s, long k, const Complex& value) {
    Key key = make_key(bits, s, k);
    auto it = entries_.find(key);
    if (it != entries_.end() && !it->second.dropped) return;
    // a dropped (corrupt) entry gets shadowed by a fresh appended line;
    // loading reads the file in order, so the last line for a key wins
    entries_[key] = Entry{real_to_hex(value.re()), real_to_hex(value.im()), true, false};
    if (!writable_) return;

    std::ostringstream line;
    line << static_cast<long>(bits) << ' ' << k << ' ' << std::get<1>(key) << ' '
         << std::get<2>(key) << ' ' << real_to_hex(value.re()) << ' ' << real_to_hex(value.im())
         << '\n';
    append_line(line.str());
}

void ZetaCache::append_line(const std::string& line) {
    int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
    if (fd < 0) fail(ErrorKind::CacheError, "cannot open cache file '" + path_ + "' for append");
    ::flock(fd, LOCK_EX);
    struct stat st{};
    std::string payload = line;
    if (::fstat(fd, &st) == 0 && st.st_size == 0) payload = std::string(kHeader) + "\n" + line;
    ssize_t unused = ::write(fd, payload.data(), payload.size());
    (void)unused;
    ::flock(fd, LOCK_UN);
    ::close(fd);
}

}  // namespace hz
