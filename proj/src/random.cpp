#include "gridwlp/random.hpp"

namespace gridwlp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// FNV-1a; std::hash is not stable across standard libraries.
std::uint64_t hash_name(std::string_view name) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : name) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::uint64_t derive(std::uint64_t parent, std::string_view name, std::uint64_t index) {
    return splitmix64(splitmix64(parent ^ hash_name(name)) + index);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t key) : key_(key), engine_(key) {}

RandomStream::RandomStream(RandomSeed seed, std::string_view name, std::uint64_t index)
    : RandomStream(derive(splitmix64(seed.value), name, index)) {}

RandomStream RandomStream::substream(std::string_view name, std::uint64_t index) const {
    return RandomStream(derive(key_, name, index));
}

std::uint64_t RandomStream::uniform(std::uint64_t lo, std::uint64_t hi) {
    std::uniform_int_distribution<std::uint64_t> dist(lo, hi);
    return dist(engine_);
}

}  // namespace gridwlp
