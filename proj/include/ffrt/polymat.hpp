#ifndef FFRT_POLYMAT_HPP
#define FFRT_POLYMAT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "ffrt/poly.hpp"

namespace ffrt {

/// Column-major sparse square matrix with Poly entries.
class SparsePolyMat {
  public:
    using Entry = std::pair<std::uint32_t, Poly>; // (row, value), rows ascending
    using Column = std::vector<Entry>;

    SparsePolyMat(RingPtr ring, std::size_t n);

    const RingPtr& ring() const { return ring_; }
    std::size_t size() const { return cols_.size(); }
    const Column& column(std::size_t j) const { return cols_[j]; }
    std::size_t entry_count() const;

    /// Inserts or accumulates; zero results are dropped.
    void add_entry(std::size_t row, std::size_t col, const Poly& value);
    void set_entry(std::size_t row, std::size_t col, Poly value);
    /// Zero when absent.
    Poly entry(std::size_t row, std::size_t col) const;

    SparsePolyMat operator*(const SparsePolyMat& other) const;
    SparsePolyMat operator+(const SparsePolyMat& other) const;
    bool operator==(const SparsePolyMat& other) const;

    static SparsePolyMat diagonal(const RingPtr& ring, std::size_t n, const Poly& value);
    static SparsePolyMat identity(const RingPtr& ring, std::size_t n);

    bool is_scalar(const Poly& value) const;

    /// Entrywise ring conversion (e.g. imposing a truncation bound).
    SparsePolyMat converted(const RingPtr& target) const;
    /// Entrywise embedding into a larger ring.
    SparsePolyMat lifted(const RingPtr& target, const std::vector<std::size_t>& var_map) const;
    SparsePolyMat scaled(const Poly& factor) const;

    /// Block-diagonal sum of `copies` copies of `block`.
    static SparsePolyMat block_diagonal(const SparsePolyMat& block, std::size_t copies);

    void for_each_entry(const std::function<void(std::size_t, std::size_t, const Poly&)>& fn) const;

  private:
    RingPtr ring_;
    std::vector<Column> cols_;
};

} // namespace ffrt

#endif
