#ifndef FFRT_NUMBERS_HPP
#define FFRT_NUMBERS_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ffrt {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    return big_pow(BigInt(static_cast<unsigned long>(base)), exp);
}

inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    BigRat r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const BigRat& r) { return r.get_d(); }

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// p^e as a machine integer; throws on overflow of 63 bits.
std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp);

} // namespace ffrt

#endif
