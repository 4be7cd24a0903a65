#ifndef FFRT_FEDDER_HPP
#define FFRT_FEDDER_HPP

#include <optional>
#include <vector>

#include "ffrt/poly.hpp"
#include "ffrt/prime.hpp"

namespace ffrt {

/// F-purity verdict: when f_pure holds, the witness is a monomial of the
/// colon ideal that avoids every x_i^p.
struct PurityVerdict {
    bool f_pure = false;
    std::optional<Monomial> witness;
};

/// Fedder's criterion for a hypersurface S/fS: F-pure iff some monomial of
/// f^(p-1) is divisible by no x_i^p. f must be a nonzero nonunit.
PurityVerdict fedder_principal(const Poly& f);

/// Fedder's criterion for a monomial ideal: the colon (I^[p] : I) is computed
/// combinatorially and the quotient is F-pure iff some minimal generator of
/// the colon avoids every x_i^p.
PurityVerdict fedder_monomial_ideal(const std::vector<Monomial>& gens, const Prime& p);

/// Monomial-ideal plumbing (exponentwise, Groebner-free).
bool monomial_ideal_contains(const std::vector<Monomial>& gens, const Monomial& m);
std::vector<Monomial> monomial_colon_by_monomial(const std::vector<Monomial>& gens, const Monomial& m);
std::vector<Monomial> monomial_intersect(const std::vector<Monomial>& a, const std::vector<Monomial>& b);
/// (I^[p] : I) for a monomial ideal I, as a minimal generating set.
std::vector<Monomial> frobenius_colon(const std::vector<Monomial>& gens, std::uint64_t p);

} // namespace ffrt

#endif
