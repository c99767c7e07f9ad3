#pragma once

#include <cstdint>
#include <functional>

namespace mq {

// splitmix64: tiny deterministic generator, identical output on every
// platform (std::uniform_int_distribution is not portable across libs).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return bound ? next() % bound : 0; }

    int range(int lo, int hi) { // inclusive
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

// Runs fn(begin, end) on contiguous chunks of [0, count), possibly from
// several threads. Chunk boundaries depend only on (count, threads), so a
// caller that merges per-chunk results in chunk order is deterministic.
void parallel_chunks(std::uint64_t count, int threads,
                     const std::function<void(int chunk, std::uint64_t begin, std::uint64_t end)>& fn);

int resolve_thread_count(int requested); // 0 = auto

} // namespace mq
