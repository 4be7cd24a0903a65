#ifndef FFRT_SIGNATURE_HPP
#define FFRT_SIGNATURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ffrt/matfac.hpp"
#include "ffrt/monomial.hpp"
#include "ffrt/numbers.hpp"
#include "ffrt/poly.hpp"
#include "ffrt/prime.hpp"

namespace ffrt {

/// Bernoulli number B_j (B_0 = 1, B_1 = -1/2), computed by the standard
/// recurrence and cached.
BigRat bernoulli(std::uint32_t j);

/// Sum of r^s for r = 1..delta via the Bernoulli closed form; exact and
/// integral. s = 0 returns delta.
BigRat faulhaber_sum(std::uint32_t s, const BigInt& delta);

/// The symmetric-function weights entering the closed-form signature of
/// f + uv: entry s sums, over the size-s subsets T of the variables, the
/// product of (d - d_j) over T times the product of d_j off T. Computed by
/// the one-variable-at-a-time recurrence.
std::vector<BigRat> weight_vector(const BigRat& d, const std::vector<BigRat>& d_list);

/// Exact F-signature of S[[u,v]]/(x^d + uv) for a monomial x^d:
/// 2/d^(n+1) * sum_{j=0}^{n-1} W_j / (n+1-j) with d = max d_j.
BigRat signature_uv_closed(const std::vector<Exp>& d_list);

struct SignatureEstimate {
    std::uint32_t e = 0;
    BigInt free_rank;  // a_e
    BigRat ratio;      // a_e / p^(e * dimension)
};

struct SignatureReport {
    std::optional<BigRat> exact;
    std::vector<SignatureEstimate> estimates;
    std::uint32_t dimension = 0;
    std::uint32_t alpha = 0; // prime coefficient field
};

/// Free-rank count a_e of the e-th pushforward of S[[u,v]]/(x^d + uv):
/// q^n plus twice the window sum of prod_j (q - d_j q + d_j k) over the k
/// with all factors positive. The window sum is evaluated by expanding the
/// product as a polynomial in the window offset and applying the Faulhaber
/// closed form, so large e stay cheap.
BigInt uv_free_rank(const std::vector<Exp>& d_list, const Prime& p, std::uint32_t e);

/// Empirical signature sequence for f + uv, ratios over p^(e(n+1)), with the
/// exact closed form attached.
SignatureReport signature_uv_empirical(const std::vector<Exp>& d_list, const Prime& p,
                                       std::uint32_t e_min, std::uint32_t e_max);

/// Signature of S[[z]]/(x^d + z^2), p odd: exactly 1/2^(n-1) when every
/// d_j = 1 and 0 otherwise. Estimates use the two middle powers
/// k = (q-1)/2, (q+1)/2, ratios over p^(en).
SignatureReport signature_plus_z2(const std::vector<Exp>& d_list, const Prime& p,
                                  std::uint32_t e_min, std::uint32_t e_max);

struct ArtinSchreierResult {
    BigRat signature;
    std::uint64_t free_rank = 0; // free-rank count of one diagonal block
    Exp precision_used = 0;
};

/// Exact F-signature of S[[y]]/(y^(p^d) + f) from the single level d: the
/// level-d matrix is block diagonal with p^d copies of yI + A, A the matrix
/// of relations of f at level d, so the signature equals p^d t / p^(nd) with
/// t the free rank of one block, obtained by truncated pivoting.
ArtinSchreierResult signature_artin_schreier(const Poly& f, std::uint32_t d,
                                             std::optional<Exp> precision = std::nullopt);

struct ExtensionCountCheck {
    BigInt extended_count; // free rank over S[[y]]/f, from pivoting
    BigInt base_count;     // free rank over S/f, from the closed form
    BigInt expected;       // q * base_count
    bool equal = false;
    Exp precision_used = 0;
};

/// Verifies, by two independent routes, that adjoining a variable multiplies
/// the free-rank count by q for a monomial f: the left side pivots the
/// block-diagonal q-copy matrix over the extended ring, the right side
/// evaluates the closed-form count.
ExtensionCountCheck verify_extension_count_identity(const std::vector<Exp>& d_list, const Prime& p,
                                                    std::uint32_t e,
                                                    std::optional<Exp> precision = std::nullopt);

} // namespace ffrt

#endif
