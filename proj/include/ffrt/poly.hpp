#ifndef FFRT_POLY_HPP
#define FFRT_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffrt/ring.hpp"

namespace ffrt {

/// Sparse multivariate polynomial over F_p, keyed by exponent vector.
///
/// Terms are kept sorted in ascending graded-lex order with coefficients in
/// [1, p-1]; when the ambient ring carries a truncation bound N, every stored
/// term has total degree < N. Values are immutable after construction and all
/// operations are pure.
class Poly {
  public:
    struct Term {
        Monomial mono;
        std::uint64_t coeff; // in [1, p-1]
    };

    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(const RingPtr& ring) { return Poly(ring); }
    static Poly constant(const RingPtr& ring, std::int64_t value);
    static Poly variable(const RingPtr& ring, std::size_t var, Exp power = 1);
    static Poly from_monomial(const RingPtr& ring, const Monomial& m, std::int64_t coeff = 1);
    static Poly from_terms(const RingPtr& ring, std::vector<std::pair<Monomial, std::int64_t>> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Exp degree() const; // 0 for the zero polynomial

    std::uint64_t constant_term() const;
    /// True iff the constant coefficient is nonzero (unit of the local ring).
    bool is_local_unit() const;
    bool is_constant() const;
    bool is_one() const;
    /// True iff exactly one term with coefficient 1.
    bool is_monic_monomial() const;

    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator-() const;
    Poly operator*(const Poly& other) const;
    Poly scaled(std::int64_t c) const;
    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    /// Move to a structurally different but compatible ring instance, or add
    /// or remove a truncation bound (terms above the bound are dropped).
    Poly converted(const RingPtr& target) const;
    /// Embed into a ring with more variables; var_map[i] gives the index of
    /// old variable i in the target ring.
    Poly lifted(const RingPtr& target, const std::vector<std::size_t>& var_map) const;

    std::string str() const;

  private:
    friend Poly poly_from_accumulator(const RingPtr&, std::map<Monomial, std::uint64_t, GrlexLess>&&);

    RingPtr ring_;
    std::vector<Term> terms_;
};

Poly pow(const Poly& a, std::uint64_t k);

/// Inverse of a local unit, truncated so that a * local_inverse(a, N) = 1 up
/// to terms of total degree >= N. Throws domain_error for non-units.
Poly local_inverse(const Poly& a, Exp bound);

std::string to_string(const Poly& p);

} // namespace ffrt

#endif
