#ifndef FFRT_RELMAT_HPP
#define FFRT_RELMAT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ffrt/frobenius.hpp"
#include "ffrt/polymat.hpp"

namespace ffrt {

/// The matrix of relations of f at level e: the square matrix over the
/// ambient ring that presents the e-th Frobenius pushforward of S/fS with
/// respect to the monomial basis. Column j collects the Frobenius coordinates
/// of x^(m_j) * f, so entry (i, j) is the coefficient of basis element m_i.
class RelationMatrix {
  public:
    static RelationMatrix build(const Poly& f, std::uint32_t level);

    /// Block construction for g = g_0 + g_1 t + ... + g_d t^d over the ring
    /// with one extra variable t, assembled from the base-ring matrices of the
    /// coefficients: the matrix of g_k occupies the k-th subdiagonal band of
    /// blocks and wraps into the upper right corner with an extra factor t.
    /// Requires d < q. Rows and columns are grouped by the power of t (block
    /// v, base index inside), which differs from the extended ring's
    /// graded-lex order by a permutation.
    static RelationMatrix block_extension(const std::vector<Poly>& coeffs, std::uint32_t level,
                                          const std::string& new_var_name = "y");

    const FrobeniusBasis& basis() const { return basis_; }
    const RingPtr& ring() const { return mat_.ring(); }
    std::uint32_t level() const { return basis_.level(); }
    std::size_t size() const { return mat_.size(); }
    const SparsePolyMat& mat() const { return mat_; }

    RelationMatrix operator*(const RelationMatrix& other) const;
    RelationMatrix operator+(const RelationMatrix& other) const;
    bool operator==(const RelationMatrix& other) const;

    Poly entry(std::size_t row, std::size_t col) const { return mat_.entry(row, col); }

    std::string to_text() const;

  private:
    RelationMatrix(FrobeniusBasis basis, SparsePolyMat mat);

    void require_same_basis(const RelationMatrix& other) const;

    FrobeniusBasis basis_;
    SparsePolyMat mat_;
};

} // namespace ffrt

#endif
