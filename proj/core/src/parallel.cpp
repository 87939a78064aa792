#include "quadgen/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace quadgen {

unsigned resolve_jobs(std::optional<unsigned> requested) {
    if (requested && *requested > 0) return *requested;
    if (const char* env = std::getenv("QUADGEN_JOBS")) {
        std::string_view text(env);
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec == std::errc{} && ptr == text.data() + text.size() && v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace quadgen
