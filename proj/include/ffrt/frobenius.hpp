#ifndef FFRT_FROBENIUS_HPP
#define FFRT_FROBENIUS_HPP

#include <cstdint>
#include <map>
#include <memory>

#include "ffrt/numbers.hpp"
#include "ffrt/poly.hpp"

namespace ffrt {

/// The free monomial basis of the e-th Frobenius pushforward of the ambient
/// ring: all x^a with exponents in [0, q), q = p^e. Over the prime field the
/// coefficient part of the basis is trivial, so the basis has exactly q^n
/// elements.
///
/// Index order is ascending graded-lex, lowest first. The index <-> monomial
/// maps materialize the whole basis and are only available at desk scale;
/// coordinates() works for any size.
class FrobeniusBasis {
  public:
    FrobeniusBasis(RingPtr ring, std::uint32_t level);

    const RingPtr& ring() const { return ring_; }
    std::uint32_t level() const { return level_; }
    std::uint64_t q() const { return q_; }
    std::size_t var_count() const { return ring_->var_count(); }

    /// q^n, exact.
    BigInt rank_count() const;

    /// Materialized size; throws domain_error when q^n exceeds the guard.
    std::size_t size() const;
    std::size_t index(const Monomial& m) const;
    const Monomial& monomial(std::size_t i) const;

    /// Frobenius coordinate decomposition: g = sum over rho of h_rho^q x^rho.
    /// Each term c x^a routes to rho = a mod q with contribution c x^(a div q);
    /// over F_p the q-th root of c is c itself.
    std::map<Monomial, Poly, GrlexLess> coordinates(const Poly& g) const;

    static constexpr std::size_t kMaterializeGuard = 4u << 20;

  private:
    void materialize() const;

    RingPtr ring_;
    std::uint32_t level_;
    std::uint64_t q_;
    mutable std::shared_ptr<const std::pair<std::vector<Monomial>, std::map<Monomial, std::size_t, GrlexLess>>> table_;
};

} // namespace ffrt

#endif
