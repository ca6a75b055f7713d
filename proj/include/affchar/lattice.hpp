#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace affchar {

inline constexpr std::size_t kMaxRank = 8;

/// Integral point of a lattice of dimension <= kMaxRank. Unused trailing
/// coordinates are zero, so points of a lower-dimensional lattice (including
/// the zero-dimensional one used for weight-free series) embed by padding.
using LatticeVec = std::array<std::int32_t, kMaxRank>;

inline LatticeVec operator+(const LatticeVec& a, const LatticeVec& b)
{
    LatticeVec r{};
    for (std::size_t i = 0; i < kMaxRank; ++i) r[i] = a[i] + b[i];
    return r;
}

inline LatticeVec operator-(const LatticeVec& a, const LatticeVec& b)
{
    LatticeVec r{};
    for (std::size_t i = 0; i < kMaxRank; ++i) r[i] = a[i] - b[i];
    return r;
}

inline LatticeVec operator-(const LatticeVec& a)
{
    LatticeVec r{};
    for (std::size_t i = 0; i < kMaxRank; ++i) r[i] = -a[i];
    return r;
}

inline LatticeVec operator*(std::int32_t k, const LatticeVec& a)
{
    LatticeVec r{};
    for (std::size_t i = 0; i < kMaxRank; ++i) r[i] = k * a[i];
    return r;
}

inline bool is_zero(const LatticeVec& a)
{
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

struct LatticeVecHash {
    std::size_t operator()(const LatticeVec& v) const noexcept
    {
        std::uint64_t h = 1469598103934665603ull;
        for (auto c : v) {
            h ^= static_cast<std::uint32_t>(c);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h ^ (h >> 29));
    }
};

} // namespace affchar
