#include "ffrt/matfac.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ffrt/errors.hpp"

namespace ffrt {

MatrixFactorization::MatrixFactorization(Poly f, SparsePolyMat phi, SparsePolyMat psi)
    : f_(std::move(f)), phi_(std::move(phi)), psi_(std::move(psi)) {
    if (phi_.size() != psi_.size()) throw domain_error("matrix factorization factors differ in size");
    if (!phi_.ring()->compatible(*f_.ring()) || !psi_.ring()->compatible(*f_.ring())) {
        throw domain_error("matrix factorization entries live outside the ambient ring");
    }
    if (!(phi_ * psi_).is_scalar(f_) || !(psi_ * phi_).is_scalar(f_)) {
        throw domain_error("phi psi = psi phi = f I fails");
    }
}

MatrixFactorization MatrixFactorization::from_power(const Poly& f, std::uint64_t k, std::uint32_t level) {
    FrobeniusBasis basis(f.ring(), level);
    std::uint64_t q = basis.q();
    if (k < 1 || k > q - 1) throw domain_error("power must lie in [1, q-1]");
    RelationMatrix phi = RelationMatrix::build(pow(f, k), level);
    RelationMatrix psi = RelationMatrix::build(pow(f, q - k), level);
    return MatrixFactorization(f, phi.mat(), psi.mat());
}

namespace {

/// [phi, -aI; bI, psi] with a, b single variables of the extended ring.
SparsePolyMat corner_block(const SparsePolyMat& phi, const SparsePolyMat& psi,
                           const Poly& top_right, const Poly& bottom_left) {
    std::size_t n = phi.size();
    SparsePolyMat out(phi.ring(), 2 * n);
    phi.for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) { out.set_entry(i, j, v); });
    psi.for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) { out.set_entry(n + i, n + j, v); });
    for (std::size_t i = 0; i < n; ++i) {
        out.set_entry(i, n + i, top_right);
        out.set_entry(n + i, i, bottom_left);
    }
    return out;
}

std::vector<std::size_t> identity_map(std::size_t n) {
    std::vector<std::size_t> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = i;
    return m;
}

} // namespace

MatrixFactorization MatrixFactorization::plus_uv() const {
    RingPtr ext = f_.ring()->adjoin("u")->adjoin("v");
    auto map = identity_map(f_.ring()->var_count());
    Poly u = Poly::variable(ext, ext->var_count() - 2);
    Poly v = Poly::variable(ext, ext->var_count() - 1);
    SparsePolyMat phi = phi_.lifted(ext, map);
    SparsePolyMat psi = psi_.lifted(ext, map);
    Poly g = f_.lifted(ext, map) + u * v;
    return MatrixFactorization(g, corner_block(phi, psi, -v, u), corner_block(psi, phi, v, -u));
}

MatrixFactorization MatrixFactorization::plus_z_squared() const {
    RingPtr ext = f_.ring()->adjoin("z");
    auto map = identity_map(f_.ring()->var_count());
    Poly z = Poly::variable(ext, ext->var_count() - 1);
    SparsePolyMat phi = phi_.lifted(ext, map);
    SparsePolyMat psi = psi_.lifted(ext, map);
    Poly g = f_.lifted(ext, map) + z * z;
    return MatrixFactorization(g, corner_block(phi, psi, -z, z), corner_block(psi, phi, z, -z));
}

MatrixFactorization MatrixFactorization::operator|(const MatrixFactorization& other) const {
    if (!(f_ == other.f_)) throw domain_error("direct sum of factorizations of different elements");
    std::size_t n = size(), m = other.size();
    SparsePolyMat phi(phi_.ring(), n + m);
    SparsePolyMat psi(psi_.ring(), n + m);
    phi_.for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) { phi.set_entry(i, j, v); });
    other.phi_.for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) { phi.set_entry(n + i, n + j, v); });
    psi_.for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) { psi.set_entry(i, j, v); });
    other.psi_.for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) { psi.set_entry(n + i, n + j, v); });
    return MatrixFactorization(f_, std::move(phi), std::move(psi));
}

Exp default_precision(const Poly& f, std::uint64_t q) {
    std::uint64_t n = 4 * q * (1 + static_cast<std::uint64_t>(f.degree()));
    if (n > (std::uint64_t(1) << 24)) n = std::uint64_t(1) << 24;
    return static_cast<Exp>(n);
}

namespace {

/// Mutable sparse matrix for synchronized unit pivoting. Columns and row
/// occupancy lists are kept as sorted vectors; unit positions live in an
/// ordered set so pivot selection is deterministic.
class PivotMatrix {
  public:
    using Entry = std::pair<std::uint32_t, Poly>;

    PivotMatrix(const SparsePolyMat& src, const RingPtr& target)
        : ring_(target), cols_(src.size()), rows_(src.size()) {
        src.for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) {
            Poly w = v.converted(target);
            if (w.is_zero()) return;
            if (w.is_local_unit()) units_.insert({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(i)});
            cols_[j].emplace_back(static_cast<std::uint32_t>(i), std::move(w));
            rows_[i].push_back(static_cast<std::uint32_t>(j));
        });
        // for_each_entry walks columns with ascending rows, so cols_ are
        // sorted already; rows_ need a pass.
        for (auto& row : rows_) std::sort(row.begin(), row.end());
    }

    /// Next unit entry: smallest column index first, smallest row inside it.
    bool find_unit(std::uint32_t& out_i, std::uint32_t& out_j) {
        if (units_.empty()) return false;
        auto [j, i] = *units_.begin();
        out_i = i;
        out_j = j;
        return true;
    }

    Poly get(std::uint32_t i, std::uint32_t j) const {
        const auto* e = find(j, i);
        return e ? e->second : Poly::zero(ring_);
    }

    /// Borrowed view; invalidated by any mutation.
    const Poly* get_ptr(std::uint32_t i, std::uint32_t j) const {
        const auto* e = find(j, i);
        return e ? &e->second : nullptr;
    }

    void scale_row(std::uint32_t i, const Poly& c) {
        for (std::uint32_t j : row_cols(i)) update(i, j, get(i, j) * c);
    }

    void scale_col(std::uint32_t j, const Poly& c) {
        for (std::uint32_t i : col_rows(j)) update(i, j, get(i, j) * c);
    }

    /// row_dst += c * row_src
    void add_row(std::uint32_t dst, std::uint32_t src, const Poly& c) {
        for (std::uint32_t j : row_cols(src)) update(dst, j, get(dst, j) + get(src, j) * c);
    }

    /// col_dst += c * col_src
    void add_col(std::uint32_t dst, std::uint32_t src, const Poly& c) {
        for (std::uint32_t i : col_rows(src)) update(i, dst, get(i, dst) + get(i, src) * c);
    }

    std::vector<std::uint32_t> col_rows(std::uint32_t j) const {
        std::vector<std::uint32_t> out;
        out.reserve(cols_[j].size());
        for (const auto& [i, v] : cols_[j]) out.push_back(i);
        return out;
    }

    std::vector<std::uint32_t> row_cols(std::uint32_t i) const { return rows_[i]; }

    void kill(std::uint32_t i, std::uint32_t j) {
        while (!rows_[i].empty()) remove(i, rows_[i].back());
        while (!cols_[j].empty()) remove(cols_[j].back().first, j);
    }

    template <typename Fn>
    void for_each_live_entry(Fn&& fn) const {
        for (std::uint32_t j = 0; j < cols_.size(); ++j) {
            for (const auto& [i, v] : cols_[j]) fn(i, j, v);
        }
    }

    std::size_t live_entry_count() const {
        std::size_t total = 0;
        for (const auto& col : cols_) total += col.size();
        return total;
    }

    bool has_unit_entry() const {
        for (const auto& col : cols_) {
            for (const auto& [i, v] : col) {
                if (v.is_local_unit()) return true;
            }
        }
        return false;
    }

  private:
    const Entry* find(std::uint32_t j, std::uint32_t i) const {
        const auto& col = cols_[j];
        auto it = std::lower_bound(col.begin(), col.end(), i,
                                   [](const Entry& e, std::uint32_t row) { return e.first < row; });
        return it != col.end() && it->first == i ? &*it : nullptr;
    }

    void remove(std::uint32_t i, std::uint32_t j) {
        auto& col = cols_[j];
        auto it = std::lower_bound(col.begin(), col.end(), i,
                                   [](const Entry& e, std::uint32_t row) { return e.first < row; });
        if (it == col.end() || it->first != i) return;
        col.erase(it);
        auto& row = rows_[i];
        row.erase(std::lower_bound(row.begin(), row.end(), j));
        units_.erase({j, i});
    }

    void update(std::uint32_t i, std::uint32_t j, Poly value) {
        if (value.is_zero()) {
            remove(i, j);
            return;
        }
        if (value.is_local_unit()) {
            units_.insert({j, i});
        } else {
            units_.erase({j, i});
        }
        auto& col = cols_[j];
        auto it = std::lower_bound(col.begin(), col.end(), i,
                                   [](const Entry& e, std::uint32_t row) { return e.first < row; });
        if (it != col.end() && it->first == i) {
            it->second = std::move(value);
        } else {
            col.insert(it, Entry{i, std::move(value)});
            auto& row = rows_[i];
            row.insert(std::lower_bound(row.begin(), row.end(), j), j);
        }
    }

    RingPtr ring_;
    std::vector<std::vector<Entry>> cols_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::set<std::pair<std::uint32_t, std::uint32_t>> units_; // (col, row)

    friend struct PivotPair;
};

/// One factor being pivoted together with its complementary factor. Row and
/// column operations on the active factor are mirrored by the inverse
/// operations on the partner so the pair stays a matrix factorization.
struct PivotPair {
    PivotMatrix& active;
    PivotMatrix& partner;

    /// Splits off the trivial block at a unit pivot (i0, j0).
    void pivot(std::uint32_t i0, std::uint32_t j0, Exp bound) {
        const Poly* u_view = active.get_ptr(i0, j0);
        if (u_view == nullptr) throw std::logic_error("pivot candidate vanished");
        if (!u_view->is_one()) {
            // Normalize the pivot to 1; partner column i0 picks up u.
            Poly u = *u_view; // the view dies on the first mutation
            Poly uinv = local_inverse(u, bound);
            active.scale_row(i0, uinv);
            partner.scale_col(i0, u);
        }

        // Clear the pivot column.
        for (std::uint32_t i : active.col_rows(j0)) {
            if (i == i0) continue;
            Poly a = active.get(i, j0);
            if (a.is_zero()) continue;
            active.add_row(i, i0, -a);
            partner.add_col(i0, i, a);
        }
        // Clear the pivot row.
        for (std::uint32_t j : active.row_cols(i0)) {
            if (j == j0) continue;
            Poly b = active.get(i0, j);
            if (b.is_zero()) continue;
            active.add_col(j, j0, -b);
            partner.add_row(j0, j, b);
        }

        active.kill(i0, j0);
        partner.kill(j0, i0);
    }
};

constexpr std::size_t kReducedEntryCap = 1u << 16;

struct SplitCounts {
    std::uint64_t t = 0, r = 0, reduced = 0;
    std::vector<Poly> reduced_entries;

    bool same_as(const SplitCounts& other) const {
        return t == other.t && r == other.r && reduced == other.reduced;
    }
};

SplitCounts run_split(const MatrixFactorization& mf, Exp bound) {
    RingPtr target = mf.factored().ring()->truncated(bound);
    PivotMatrix phi(mf.phi(), target);
    PivotMatrix psi(mf.psi(), target);

    SplitCounts counts;
    std::uint32_t i, j;

    // Unit pivots of phi split off (1, f) blocks.
    {
        PivotPair pair{phi, psi};
        while (phi.find_unit(i, j)) {
            pair.pivot(i, j, bound);
            ++counts.r;
        }
    }
    // Unit pivots of the complementary factor split off (f, 1) blocks.
    {
        PivotPair pair{psi, phi};
        while (psi.find_unit(i, j)) {
            pair.pivot(i, j, bound);
            ++counts.t;
        }
    }

    counts.reduced = mf.size() - counts.t - counts.r;
    if (phi.has_unit_entry() || psi.has_unit_entry()) {
        throw instability_error("reduced part kept a unit entry; pivoting is inconsistent");
    }
    if (phi.live_entry_count() + psi.live_entry_count() <= kReducedEntryCap) {
        phi.for_each_live_entry([&](std::uint32_t, std::uint32_t, const Poly& v) {
            counts.reduced_entries.push_back(v);
        });
        psi.for_each_live_entry([&](std::uint32_t, std::uint32_t, const Poly& v) {
            counts.reduced_entries.push_back(v);
        });
    }
    return counts;
}

} // namespace

SplitResult split_trivial(const MatrixFactorization& mf, Exp precision, unsigned max_doublings) {
    if (mf.factored().is_local_unit()) throw domain_error("split requires f in the maximal ideal");
    if (mf.factored().is_zero()) throw domain_error("split requires a nonzero f");
    if (precision < 1) throw domain_error("precision must be >= 1");

    Exp bound = precision;
    SplitCounts at_bound = run_split(mf, bound);
    SplitCounts at_double = run_split(mf, bound * 2);
    for (unsigned round = 0;; ++round) {
        if (bound > (Exp(1) << 26)) throw instability_error("precision cap exceeded");
        if (at_bound.same_as(at_double)) {
            SplitResult out;
            out.t = at_bound.t;
            out.r = at_bound.r;
            out.reduced_size = at_bound.reduced;
            out.precision_used = bound;
            out.reduced_entries = std::move(at_bound.reduced_entries);
            return out;
        }
        if (round + 1 >= max_doublings) {
            throw instability_error("split counts disagree between precision " + std::to_string(bound) +
                                    " and " + std::to_string(bound * 2));
        }
        bound *= 2;
        at_bound = std::move(at_double);
        at_double = run_split(mf, bound * 2);
    }
}

std::uint64_t count_free_summands(const MatrixFactorization& mf, Exp precision, unsigned max_doublings) {
    return split_trivial(mf, precision, max_doublings).t;
}

SplitResult split_power_factorization(const Poly& f, std::uint64_t k, std::uint32_t level,
                                      std::optional<Exp> precision) {
    MatrixFactorization mf = MatrixFactorization::from_power(f, k, level);
    std::uint64_t q = checked_pow_u64(f.ring()->p(), level);
    Exp bound = precision ? *precision : default_precision(f, q);
    return split_trivial(mf, bound);
}

} // namespace ffrt
