#ifndef FFRT_MATFAC_HPP
#define FFRT_MATFAC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ffrt/polymat.hpp"
#include "ffrt/relmat.hpp"

namespace ffrt {

/// A matrix factorization of f: square matrices (phi, psi) of equal size with
/// phi psi = psi phi = f I. The defining identity is checked at construction;
/// when the ambient ring carries a truncation bound the check is performed
/// modulo the truncated tail.
class MatrixFactorization {
  public:
    MatrixFactorization(Poly f, SparsePolyMat phi, SparsePolyMat psi);

    const Poly& factored() const { return f_; }
    const SparsePolyMat& phi() const { return phi_; }
    const SparsePolyMat& psi() const { return psi_; }
    std::size_t size() const { return phi_.size(); }

    /// (M(f^k,e), M(f^(q-k),e)) for 1 <= k <= q-1.
    static MatrixFactorization from_power(const Poly& f, std::uint64_t k, std::uint32_t level);

    /// Size-doubling factorization of f + uv over the ring with two extra
    /// variables: ([phi, -vI; uI, psi], [psi, vI; -uI, phi]).
    MatrixFactorization plus_uv() const;

    /// Size-doubling factorization of f + z^2 over the ring with one extra
    /// variable: ([phi, -zI; zI, psi], [psi, zI; -zI, phi]).
    MatrixFactorization plus_z_squared() const;

    /// Direct sum.
    MatrixFactorization operator|(const MatrixFactorization& other) const;

  private:
    Poly f_;
    SparsePolyMat phi_;
    SparsePolyMat psi_;
};

/// Outcome of splitting the trivial blocks off a matrix factorization:
/// t copies of (f, 1), r copies of (1, f), and a reduced remainder whose
/// entries all lie in the maximal ideal. t + r + reduced_size equals the
/// input size.
struct SplitResult {
    std::uint64_t t = 0;
    std::uint64_t r = 0;
    std::uint64_t reduced_size = 0;
    Exp precision_used = 0;
    /// Surviving entries of both reduced factors, for inspection; left empty
    /// for very large inputs. All entries are checked to lie in the maximal
    /// ideal either way.
    std::vector<Poly> reduced_entries;
};

/// Default total-degree bound for truncated pivoting: 4 q (1 + deg f).
Exp default_precision(const Poly& f, std::uint64_t q);

/// Split (f,1) and (1,f) blocks off by unit pivoting at a finite truncation
/// bound. Unit entries of phi split off (1,f) blocks; once phi is reduced,
/// unit entries of the synchronized complementary factor split off (f,1)
/// blocks. The computation runs at precision N and again at 2N and must
/// agree; on disagreement the bound doubles up to `max_doublings` times
/// before an instability_error is thrown. f must lie in the maximal ideal.
SplitResult split_trivial(const MatrixFactorization& mf, Exp precision, unsigned max_doublings = 3);

/// Number of free direct summands of the cokernel of phi over S/fS, i.e. the
/// (f,1) block count of the factorization.
std::uint64_t count_free_summands(const MatrixFactorization& mf, Exp precision, unsigned max_doublings = 3);

/// Convenience wrapper: split the factorization (M(f^k,e), M(f^(q-k),e)).
SplitResult split_power_factorization(const Poly& f, std::uint64_t k, std::uint32_t level,
                                      std::optional<Exp> precision = std::nullopt);

} // namespace ffrt

#endif
