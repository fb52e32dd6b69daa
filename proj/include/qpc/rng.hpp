//---------------------------------------------------------------------------//
//! \file qpc/rng.hpp
//! Counter-based, splittable seeding for reproducible parallel sampling.
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace qpc
{
//---------------------------------------------------------------------------//
//! SplitMix64 finalizer: bijective 64-bit mixing.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

//---------------------------------------------------------------------------//
/*!
 * Derive a stream key h(seed, i0, i1, ...) from a master seed and a path of
 * counters.
 *
 * Each task in an experiment (sample index, n index, energy index) gets its
 * own key, so the random stream of a task depends only on its coordinates
 * and never on scheduling. This is what makes serial and threaded runs agree
 * bit for bit.
 */
constexpr std::uint64_t
derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
{
    std::uint64_t h = mix64(seed);
    for (std::uint64_t c : path)
        h = mix64(h ^ mix64(c + 0x632be59bd9b4e019ull));
    return h;
}

//---------------------------------------------------------------------------//
/*!
 * Per-task random generator.
 *
 * Wraps std::mt19937_64 seeded from a derived key. Uniform doubles are built
 * from the top 53 bits directly rather than through std distributions, whose
 * output is implementation-defined.
 */
class Rng
{
  public:
    explicit Rng(std::uint64_t key) : engine_(key) {}

    //! Stream for task path under a master seed.
    Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> path)
        : engine_(derive_seed(seed, path))
    {
    }

    std::uint64_t next_u64() { return engine_(); }

    //! Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qpc
