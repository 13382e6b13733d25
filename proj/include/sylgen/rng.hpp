#ifndef SYLGEN_RNG_HPP
#define SYLGEN_RNG_HPP

#include <cstdint>
#include <random>

namespace sylgen
{

// Seeded generator with a bounded sampler that does not depend on the
// standard library's distribution implementations, so streams are identical
// across platforms.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
  : _engine(seed)
  {}

  std::uint64_t next()
  { return _engine(); }

  // uniform in [0, n), n > 0
  std::uint64_t below(std::uint64_t n)
  {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      std::uint64_t x = _engine();
      if (x < limit)
        return x % n;
    }
  }

  // child stream, used to hand independent seeds to per-class tasks
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index)
  {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

private:
  std::mt19937_64 _engine;
};

} // namespace sylgen

#endif // SYLGEN_RNG_HPP
