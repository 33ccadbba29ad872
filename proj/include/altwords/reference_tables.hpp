#pragma once

#include <array>
#include <cstdint>

namespace altwords::reference {

// Reference counts of up-down words avoiding a consecutive pattern, rows k = 2..5 and
// columns n = 0..9.

inline constexpr std::array<std::array<std::uint64_t, 10>, 4> kConsecutive132{{
    {1, 2, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 3, 3, 4, 7, 8, 15, 16, 31, 32},
    {1, 4, 6, 10, 25, 33, 90, 106, 301, 333},
    {1, 5, 10, 20, 65, 98, 350, 456, 1701, 2034},
}};

inline constexpr std::array<std::array<std::uint64_t, 10>, 4> kConsecutive312{{
    {1, 2, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 3, 3, 5, 6, 11, 12, 23, 24, 47},
    {1, 4, 6, 14, 20, 53, 65, 182, 206, 593},
    {1, 5, 10, 30, 50, 173, 238, 874, 1080, 4089},
}};

}  // namespace altwords::reference
