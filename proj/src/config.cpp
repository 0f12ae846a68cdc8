#include "hrpkit/config.hpp"

#include <atomic>

namespace hrpkit {

namespace {
std::atomic<long> g_start_bits{128};
std::atomic<long> g_ceiling_bits{1L << 27};
} // namespace

long default_start_bits() { return g_start_bits.load(); }
void set_default_start_bits(long bits) {
    if (bits >= 16)
        g_start_bits.store(bits);
}

long precision_ceiling_bits() { return g_ceiling_bits.load(); }
void set_precision_ceiling_bits(long bits) {
    if (bits >= 256)
        g_ceiling_bits.store(bits);
}

} // namespace hrpkit
