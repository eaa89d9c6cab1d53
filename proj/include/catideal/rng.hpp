#pragma once

#include <cstdint>
#include <vector>

namespace catideal {

/// Deterministic splitmix64 stream. Used for all fuzz sampling so that
/// reports are byte-stable across platforms for a given seed (the standard
/// distributions make no such guarantee).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, n). n must be positive.
    std::int64_t below(std::int64_t n) {
        return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(n));
    }

    /// Picks an element of a non-empty vector.
    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(below(static_cast<std::int64_t>(v.size())))];
    }

  private:
    std::uint64_t state_;
};

}  // namespace catideal
