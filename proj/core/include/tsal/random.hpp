#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tsal
{

  // xoshiro256** seeded through splitmix64. Every draw is defined here
  // rather than via <random> distributions so output is identical across
  // standard libraries.
  class RandomStream
  {
  public:
    explicit RandomStream(std::uint64_t seed);

    std::uint64_t next();

    double uniform01();                                    // [0, 1), 53 bits
    double uniform(double lo, double hi);                  // [lo, hi)
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // [lo, hi]
    double normal(double mean, double stdev);
    bool bernoulli(double p);

    // Independent child stream; advances this one.
    RandomStream split();

    template <class T>
    void shuffle(std::vector<T>& xs)
    {
      for (std::size_t i = xs.size(); i > 1; --i)
      {
        auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
        std::swap(xs[i - 1], xs[j]);
      }
    }

  private:
    std::array<std::uint64_t, 4> s_{};
    std::optional<double> spare_normal_;
  };

}  // namespace tsal
