#ifndef INNSKIT_UTIL_HPP
#define INNSKIT_UTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace innskit {

// splitmix64: small deterministic PRNG for seeded choices (nonzerodivisor
// search, equal-degree splitting, sample generation). Reproducible across
// platforms; the seed is part of the operation's contract.
class rng {
public:
  explicit rng(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  // uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

private:
  std::uint64_t state_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep);

} // namespace innskit

#endif
