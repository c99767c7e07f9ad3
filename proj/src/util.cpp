#include "monoquot/util.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace mq {

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_chunks(std::uint64_t count, int threads,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
    int t = resolve_thread_count(threads);
    if (count == 0) return;
    std::uint64_t nchunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(t), count);
    if (nchunks <= 1) {
        fn(0, 0, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nchunks);
    std::uint64_t per = count / nchunks, extra = count % nchunks, begin = 0;
    for (std::uint64_t i = 0; i < nchunks; ++i) {
        std::uint64_t len = per + (i < extra ? 1 : 0);
        pool.emplace_back(fn, static_cast<int>(i), begin, begin + len);
        begin += len;
    }
    for (auto& th : pool) th.join();
}

} // namespace mq
