#include "tricolor/rng.hpp"

namespace tricolor {

std::uint32_t CounterRng::below(std::uint32_t n) {
    std::uint64_t m = static_cast<std::uint64_t>((*this)() >> 32) * n;
    auto low = static_cast<std::uint32_t>(m);
    if (low < n) {
        const std::uint32_t threshold = static_cast<std::uint32_t>(-n) % n;
        while (low < threshold) {
            m = static_cast<std::uint64_t>((*this)() >> 32) * n;
            low = static_cast<std::uint32_t>(m);
        }
    }
    return static_cast<std::uint32_t>(m >> 32);
}

}  // namespace tricolor
