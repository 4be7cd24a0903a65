#include "ffrt/monomial.hpp"

#include <algorithm>

#include "ffrt/errors.hpp"

namespace ffrt {

namespace {

/// q - |c q - k d| when that is positive, else 0.
BigInt eta_factor(std::uint64_t q, Exp c, std::uint64_t k, Exp d) {
    BigInt cq = BigInt(static_cast<unsigned long>(c)) * BigInt(static_cast<unsigned long>(q));
    BigInt kd = BigInt(static_cast<unsigned long>(k)) * BigInt(static_cast<unsigned long>(d));
    BigInt dist = abs(cq - kd);
    if (dist >= BigInt(static_cast<unsigned long>(q))) return 0;
    return BigInt(static_cast<unsigned long>(q)) - dist;
}

void require_power_range(std::uint64_t k, std::uint64_t q) {
    if (k < 1 || k > q - 1) throw domain_error("power must lie in [1, q-1]");
}

} // namespace

DiagonalCounts diagonal_entry_counts(const std::vector<Exp>& d, std::uint64_t k,
                                     const Prime& p, std::uint32_t level) {
    if (d.empty()) throw domain_error("need at least one exponent");
    for (Exp dj : d) {
        if (dj == 0) throw domain_error("exponents must be >= 1");
    }
    std::uint64_t q = checked_pow_u64(p.value(), level);
    require_power_range(k, q);

    DiagonalCounts out;
    Monomial c(d.size(), 0);
    while (true) {
        BigInt mult = 1;
        for (std::size_t j = 0; j < d.size() && mult != 0; ++j) {
            mult *= eta_factor(q, c[j], k, d[j]);
        }
        if (mult != 0) out.emplace(c, std::move(mult));
        // Odometer over the box prod [0, d_j].
        std::size_t v = d.size();
        while (v > 0) {
            --v;
            if (c[v] < d[v]) {
                ++c[v];
                break;
            }
            c[v] = 0;
            if (v == 0) return out;
        }
    }
}

BigInt free_rank_formula(const std::vector<Exp>& d, std::uint64_t k, const Prime& p, std::uint32_t level) {
    std::uint64_t q = checked_pow_u64(p.value(), level);
    require_power_range(k, q);
    BigInt mult = 1;
    for (Exp dj : d) {
        if (dj == 0) throw domain_error("exponents must be >= 1");
        mult *= eta_factor(q, dj, k, dj);
        if (mult == 0) return 0;
    }
    return mult;
}

DiagonalCounts diagonalize_monomial_matrix(const RelationMatrix& A) {
    std::size_t n = A.size();
    std::vector<bool> row_seen(n, false);
    DiagonalCounts out;
    for (std::size_t j = 0; j < n; ++j) {
        const auto& col = A.mat().column(j);
        if (col.size() != 1) {
            throw domain_error("column " + std::to_string(j) + " does not have exactly one entry");
        }
        const auto& [i, v] = col.front();
        if (!v.is_monic_monomial()) {
            throw domain_error("entry at (" + std::to_string(i) + "," + std::to_string(j) +
                               ") is not a coefficient-1 monomial");
        }
        if (row_seen[i]) {
            throw domain_error("row " + std::to_string(i) + " carries two entries");
        }
        row_seen[i] = true;
        out[v.terms().front().mono] += 1;
    }
    return out;
}

bool is_unit_ideal(const MonomialIdeal& ideal) {
    return ideal.size() == 1 && total_degree(ideal.front()) == 0;
}

MonomialIdeal minimal_generators(std::vector<Monomial> gens) {
    if (gens.empty()) throw domain_error("empty generator list");
    for (const Monomial& g : gens) {
        if (total_degree(g) == 0) return MonomialIdeal{Monomial(g.size(), 0)};
    }
    std::sort(gens.begin(), gens.end(), GrlexLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    MonomialIdeal out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i != j && divides(gens[j], gens[i])) {
                // Equal monomials were deduplicated, so this is strict.
                redundant = true;
            }
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

IdealDecomposition decompose_monomial_quotient(const std::vector<Monomial>& gens,
                                               const Prime& p, std::uint32_t level) {
    if (gens.empty()) throw domain_error("empty generator list");
    std::size_t n = gens.front().size();
    for (const Monomial& g : gens) {
        if (g.size() != n) throw domain_error("generators have mixed variable counts");
        if (total_degree(g) == 0) throw domain_error("generators must be nonunits");
    }
    std::uint64_t q = checked_pow_u64(p.value(), level);
    BigInt total = big_pow(q, n);
    if (total > BigInt(static_cast<unsigned long>(FrobeniusBasis::kMaterializeGuard))) {
        throw domain_error("q^n too large to enumerate");
    }

    IdealDecomposition out;
    out.total = total;

    std::vector<Monomial> pieces(gens.size(), Monomial(n, 0));
    Monomial u(n, 0);
    while (true) {
        // Row u of the concatenated presentation picks up, for generator d,
        // the monomial with exponents ((u - d) mod q + d) div q.
        for (std::size_t g = 0; g < gens.size(); ++g) {
            for (std::size_t v = 0; v < n; ++v) {
                std::uint64_t beta =
                    (static_cast<std::uint64_t>(u[v]) + q * gens[g][v] - gens[g][v]) % q;
                pieces[g][v] = static_cast<Exp>((beta + gens[g][v]) / q);
            }
        }
        out.multiplicities[minimal_generators(pieces)] += 1;

        std::size_t v = n;
        while (v > 0) {
            --v;
            if (u[v] + 1 < q) {
                ++u[v];
                break;
            }
            u[v] = 0;
            if (v == 0) goto done;
        }
    }
done:
    BigInt check = 0;
    for (const auto& [ideal, mult] : out.multiplicities) check += mult;
    if (check != out.total) throw domain_error("multiplicity bookkeeping lost a column");
    return out;
}

} // namespace ffrt
