#ifndef FFRT_PRIME_HPP
#define FFRT_PRIME_HPP

#include <cstdint>

namespace ffrt {

/// Deterministic primality test for 64-bit integers (trial division for small
/// inputs, Miller-Rabin with a proven base set otherwise).
bool is_prime_u64(std::uint64_t n);

/// A validated prime characteristic.
class Prime {
  public:
    explicit Prime(std::uint64_t value);

    std::uint64_t value() const { return value_; }
    bool operator==(const Prime& other) const { return value_ == other.value_; }

  private:
    std::uint64_t value_;
};

} // namespace ffrt

#endif
