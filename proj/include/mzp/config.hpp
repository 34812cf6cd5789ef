#ifndef MZP_CONFIG_HPP
#define MZP_CONFIG_HPP

#include <atomic>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mzp/orbit.hpp"

namespace mzp {

struct RunConfig {
    enum class Mode { Exact, Truncated, Both };
    enum class Format { Text, Csv, Json };

    Mode mode = Mode::Both;
    std::optional<unsigned long> precision; // starting K override for truncated runs
    Budget budget{};
    unsigned threads = 0; // 0: MZP_THREADS env var, then hardware concurrency
    std::string cache_dir;
    Format format = Format::Text;
    unsigned exact_max_m = 6;          // both-mode tables cross-check exactly up to this m
    unsigned max_precision_retries = 3;

    static Mode parse_mode(const std::string& s) {
        if (s == "exact") return Mode::Exact;
        if (s == "truncated") return Mode::Truncated;
        if (s == "both") return Mode::Both;
        throw precondition_violated("unknown mode: " + s);
    }
    static Format parse_format(const std::string& s) {
        if (s == "text") return Format::Text;
        if (s == "csv") return Format::Csv;
        if (s == "json") return Format::Json;
        throw precondition_violated("unknown format: " + s);
    }
};

inline unsigned effective_threads(const RunConfig& cfg) {
    if (cfg.threads) return cfg.threads;
    if (const char* env = std::getenv("MZP_THREADS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// run fn(i) for i in [0, count) on up to `threads` workers pulling from a
// shared counter; exceptions must be handled inside fn
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& fn) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; i++) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const unsigned nw = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    pool.reserve(nw);
    for (unsigned w = 0; w < nw; w++) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

} // namespace mzp

#endif
