#include "tras/rng.hpp"

#include <cmath>
#include <sstream>

namespace tras {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

Rng Rng::stream(std::uint64_t master_seed, std::uint64_t stream_id) {
    return Rng(splitmix64(master_seed ^ splitmix64(stream_id)));
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x > limit);
    return x % n;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

std::string Rng::save_state() const {
    std::ostringstream os;
    os << engine_ << ' ' << has_spare_ << ' ';
    os.precision(17);
    os << spare_;
    return os.str();
}

void Rng::restore_state(const std::string& text) {
    std::istringstream is(text);
    is >> engine_ >> has_spare_ >> spare_;
}

}  // namespace tras
