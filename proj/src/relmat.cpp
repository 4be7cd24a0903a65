#include "ffrt/relmat.hpp"

#include <sstream>

#include "ffrt/errors.hpp"

namespace ffrt {

RelationMatrix::RelationMatrix(FrobeniusBasis basis, SparsePolyMat mat)
    : basis_(std::move(basis)), mat_(std::move(mat)) {}

RelationMatrix RelationMatrix::build(const Poly& f, std::uint32_t level) {
    if (f.is_zero()) throw domain_error("matrix of relations of the zero polynomial");
    FrobeniusBasis basis(f.ring(), level);
    std::size_t n = basis.size();
    SparsePolyMat mat(f.ring(), n);
    for (std::size_t j = 0; j < n; ++j) {
        Poly shifted = Poly::from_monomial(f.ring(), basis.monomial(j)) * f;
        for (const auto& [rho, h] : basis.coordinates(shifted)) {
            mat.set_entry(basis.index(rho), j, h);
        }
    }
    return RelationMatrix(std::move(basis), std::move(mat));
}

void RelationMatrix::require_same_basis(const RelationMatrix& other) const {
    if (basis_.level() != other.basis_.level() || !ring()->compatible(*other.ring()) ||
        size() != other.size()) {
        throw domain_error("basis mismatch between relation matrices");
    }
}

RelationMatrix RelationMatrix::operator*(const RelationMatrix& other) const {
    require_same_basis(other);
    return RelationMatrix(basis_, mat_ * other.mat_);
}

RelationMatrix RelationMatrix::operator+(const RelationMatrix& other) const {
    require_same_basis(other);
    return RelationMatrix(basis_, mat_ + other.mat_);
}

bool RelationMatrix::operator==(const RelationMatrix& other) const {
    return basis_.level() == other.basis_.level() && mat_ == other.mat_;
}

RelationMatrix RelationMatrix::block_extension(const std::vector<Poly>& coeffs, std::uint32_t level,
                                               const std::string& new_var_name) {
    if (coeffs.empty()) throw domain_error("block extension needs at least one coefficient");
    const RingPtr& base = coeffs.front().ring();
    for (const Poly& g : coeffs) {
        if (!g.ring()->compatible(*base)) throw domain_error("coefficients live in different rings");
    }

    FrobeniusBasis base_basis(base, level);
    std::uint64_t q = base_basis.q();
    std::size_t d = coeffs.size() - 1;
    if (static_cast<std::uint64_t>(d) >= q) throw domain_error("coefficient degree must stay below q");

    RingPtr ext = base->adjoin(new_var_name);
    std::vector<std::size_t> var_map(base->var_count());
    for (std::size_t v = 0; v < var_map.size(); ++v) var_map[v] = v;
    Poly new_var = Poly::variable(ext, ext->var_count() - 1);

    std::size_t r = base_basis.size();
    std::size_t total = static_cast<std::size_t>(q) * r;
    SparsePolyMat mat(ext, total);

    // The extended basis is grouped by the power v of the new variable:
    // global index v*r + inner. The coefficient of t^s lands on block row
    // v = s + m for column block m, wrapping into the top right corner with
    // one extra factor of the new variable.
    for (std::size_t s = 0; s <= d; ++s) {
        if (coeffs[s].is_zero()) continue;
        SparsePolyMat block = RelationMatrix::build(coeffs[s], level).mat_.lifted(ext, var_map);
        SparsePolyMat wrapped = block.scaled(new_var);
        for (std::size_t m = 0; m < q; ++m) {
            bool wraps = s + m >= q;
            std::size_t k = wraps ? s + m - q : s + m;
            const SparsePolyMat& src = wraps ? wrapped : block;
            std::size_t row_off = k * r;
            std::size_t col_off = m * r;
            src.for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) {
                mat.add_entry(row_off + i, col_off + j, v);
            });
        }
    }

    FrobeniusBasis ext_basis(ext->exact(), level);
    return RelationMatrix(std::move(ext_basis), std::move(mat));
}

std::string RelationMatrix::to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            if (j) os << "  ";
            os << to_string(mat_.entry(i, j));
        }
        os << "\n";
    }
    return os.str();
}

} // namespace ffrt
