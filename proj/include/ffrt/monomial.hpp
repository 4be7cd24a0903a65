#ifndef FFRT_MONOMIAL_HPP
#define FFRT_MONOMIAL_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "ffrt/numbers.hpp"
#include "ffrt/prime.hpp"
#include "ffrt/relmat.hpp"

namespace ffrt {

/// Multiset of diagonal entries x^c (keyed by the exponent vector c) together
/// with their multiplicities. The multiplicities of all c in the box
/// prod [0, d_j] add up to q^n.
using DiagonalCounts = std::map<Monomial, BigInt, GrlexLess>;

/// Closed-form multiplicity multiset for the diagonalization of the matrix of
/// relations of (x^d)^k at level e: the entry x^c occurs
/// prod_j (q - |c_j q - k d_j|) times, the product taken over factors with
/// |c_j q - k d_j| < q and the whole count zero otherwise. Iterates the box
/// prod [0, d_j] directly, never touching a q^n-sized matrix.
DiagonalCounts diagonal_entry_counts(const std::vector<Exp>& d, std::uint64_t k,
                                     const Prime& p, std::uint32_t level);

/// The c = d entry of the multiset: the number of free summands of the
/// cokernel, prod_j (q - d_j q + d_j k) when every factor is positive.
BigInt free_rank_formula(const std::vector<Exp>& d, std::uint64_t k,
                         const Prime& p, std::uint32_t level);

/// Exact reduction of a matrix whose rows and columns each carry exactly one
/// nonzero entry, itself a coefficient-1 monomial: permuting rows and columns
/// makes it diagonal, and the returned multiset lists the diagonal entries.
/// Serves as the brute-force oracle for diagonal_entry_counts. Throws
/// domain_error when the matrix does not have that shape.
DiagonalCounts diagonalize_monomial_matrix(const RelationMatrix& A);

/// Canonical monomial ideal: sorted minimal generating set. The unit ideal is
/// represented by the single generator 1 (the zero exponent vector).
using MonomialIdeal = std::vector<Monomial>;

bool is_unit_ideal(const MonomialIdeal& ideal);

/// Minimal generating set: duplicates and generators divisible by another
/// generator are removed; any generator 1 collapses the ideal to (1).
MonomialIdeal minimal_generators(std::vector<Monomial> gens);

struct IdealDecomposition {
    std::map<MonomialIdeal, BigInt> multiplicities;
    BigInt total; // q^n
};

/// Direct-sum decomposition of the e-th Frobenius pushforward of S/I for a
/// monomial ideal I = (x^(d_1), ..., x^(d_t)): each basis exponent u in
/// [0,q)^n contributes the cyclic summand S/J_u, where J_u collects, for each
/// generator d_j, the monomial with exponents (beta_i + d_ij) div q and
/// beta_i = (u_i - d_ij) mod q. Multiplicities are aggregated over canonical
/// ideals and always total q^n.
IdealDecomposition decompose_monomial_quotient(const std::vector<Monomial>& gens,
                                               const Prime& p, std::uint32_t level);

} // namespace ffrt

#endif
