#ifndef RGMINOR_RNG_HPP
#define RGMINOR_RNG_HPP

#include <cstdint>
#include <random>

namespace rgminor {

/// Replayable random stream identified by (seed, stream_id).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. All conversions to doubles and bounded integers are done here
/// rather than through <random> distributions, which are
/// implementation-defined, so a given (seed, stream_id) draws the same
/// sequence with any conforming standard library.
class RngStream {
public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits of precision.
  double uniform();

  /// Uniform on (0, 1); safe as a log() argument.
  double uniform_open();

  /// Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Independent substream, a pure function of (seed, stream_id, label).
  RngStream child(std::uint64_t label) const;

private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

} // namespace rgminor

#endif
