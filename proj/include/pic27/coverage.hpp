#pragma once

#include <atomic>
#include <mutex>
#include <set>
#include <string>

namespace pic27::coverage {

// Registry of public operations that have been executed at least once in
// this process. The test suite uses it to assert that the full check list
// really exercises every operation.

inline std::set<std::string>& touched_set() {
    static std::set<std::string> s;
    return s;
}

inline std::mutex& touched_mutex() {
    static std::mutex m;
    return m;
}

inline void record(const char* name) {
    std::lock_guard<std::mutex> lock(touched_mutex());
    touched_set().insert(name);
}

inline std::set<std::string> snapshot() {
    std::lock_guard<std::mutex> lock(touched_mutex());
    return touched_set();
}

} // namespace pic27::coverage

// One relaxed atomic load per call after the first hit; cheap enough for
// arithmetic inner loops.
#define PIC27_COVER(name)                                                  \
    do {                                                                   \
        static std::atomic<bool> pic27_cover_done{false};                  \
        if (!pic27_cover_done.load(std::memory_order_relaxed)) {           \
            pic27_cover_done.store(true, std::memory_order_relaxed);       \
            ::pic27::coverage::record(name);                               \
        }                                                                  \
    } while (0)
