#include "actforge/config.hpp"

#include <atomic>

namespace actforge {

namespace {
std::atomic<std::size_t> g_size_cap{kDefaultSizeCap};
std::atomic<std::size_t> g_namap_cap{kDefaultNamapCap};
}  // namespace

std::size_t size_cap() { return g_size_cap.load(); }
void set_size_cap(std::size_t cap) { g_size_cap.store(cap); }

std::size_t namap_cap() { return g_namap_cap.load(); }
void set_namap_cap(std::size_t cap) { g_namap_cap.store(cap); }

}  // namespace actforge
