#include "tsal/random.hpp"

#include <cmath>

namespace tsal
{

  namespace
  {
    std::uint64_t splitmix64(std::uint64_t& x)
    {
      std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
      return z ^ (z >> 31);
    }

    std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  }

  RandomStream::RandomStream(std::uint64_t seed)
  {
    for (auto& w : s_)
      w = splitmix64(seed);
  }

  std::uint64_t RandomStream::next()
  {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  double RandomStream::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double RandomStream::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::int64_t RandomStream::uniform_int(std::int64_t lo, std::int64_t hi)
  {
    if (hi <= lo)
      return lo;
    const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0)  // full 64-bit span
      return static_cast<std::int64_t>(next());
    // Rejection keeps the draw unbiased.
    const std::uint64_t threshold = (std::uint64_t{0} - range) % range;
    std::uint64_t x;
    do
      x = next();
    while (x < threshold);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
  }

  // Marsaglia polar method.
  double RandomStream::normal(double mean, double stdev)
  {
    if (spare_normal_)
    {
      double z = *spare_normal_;
      spare_normal_.reset();
      return mean + stdev * z;
    }
    double u, v, s;
    do
    {
      u = uniform(-1.0, 1.0);
      v = uniform(-1.0, 1.0);
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * m;
    return mean + stdev * u * m;
  }

  bool RandomStream::bernoulli(double p) { return uniform01() < p; }

  RandomStream RandomStream::split() { return RandomStream(next()); }

}  // namespace tsal
