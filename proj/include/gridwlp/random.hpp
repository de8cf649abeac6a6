#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gridwlp {

/// Root seed of a run. Identical seed and configuration reproduce every draw.
struct RandomSeed {
    std::uint64_t value = 0xC0FFEE;
};

/// Deterministic random stream keyed by (seed, name, index).
///
/// Streams never share state: a stream derived for "trial"/3 produces the same
/// draws whether or not other streams were consumed before it, so adding a new
/// probe to a run leaves all existing draws untouched.
class RandomStream {
public:
    RandomStream(RandomSeed seed, std::string_view name, std::uint64_t index = 0);

    RandomStream substream(std::string_view name, std::uint64_t index = 0) const;

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

    std::uint64_t key() const { return key_; }

private:
    explicit RandomStream(std::uint64_t key);

    std::uint64_t key_;
    std::mt19937_64 engine_;
};

}  // namespace gridwlp
