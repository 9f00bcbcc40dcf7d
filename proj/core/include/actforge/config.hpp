#ifndef ACTFORGE_CONFIG_HPP
#define ACTFORGE_CONFIG_HPP

#include <cstddef>

namespace actforge {

// Global cap on the number of elements of any constructed monoid or act.
// Exceeding it raises ActError(ErrorKind::SizeLimit); nothing is ever
// silently truncated.
std::size_t size_cap();
void set_size_cap(std::size_t cap);

// Separate cap on |N|^|A| wherever all maps A -> N are enumerated.
std::size_t namap_cap();
void set_namap_cap(std::size_t cap);

inline constexpr std::size_t kDefaultSizeCap  = 4096;
inline constexpr std::size_t kDefaultNamapCap = 512;

// Default bound on exhaustive subset searches (minimal generating sets,
// basis search).
inline constexpr std::size_t kDefaultSearchCap = 16;

// Default bound on |M| for the exhaustive square-generating-set search.
inline constexpr std::size_t kDefaultSquareSearchCap = 12;

}  // namespace actforge

#endif  // ACTFORGE_CONFIG_HPP
