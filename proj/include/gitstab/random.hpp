#pragma once

#include <cstdint>

namespace gitstab {

/// Counter-based pseudo-random stream: the sequence depends only on
/// (seed, stream, index), so trial i can be regenerated on its own. Output is
/// splitmix64 and bounded draws use rejection sampling, so results are
/// identical on every platform and standard library.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

}  // namespace gitstab
