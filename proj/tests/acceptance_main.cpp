// Acceptance suite: runs every shipping criterion end to end and prints one
// pass/fail line each. Exits nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_util.hpp"

#include "ffrt/cli.hpp"
#include "ffrt/errors.hpp"
#include "ffrt/fedder.hpp"
#include "ffrt/matfac.hpp"
#include "ffrt/monomial.hpp"
#include "ffrt/parse.hpp"
#include "ffrt/relmat.hpp"
#include "ffrt/signature.hpp"

using namespace ffrt;

namespace {

struct Criterion {
    int id;
    std::string name;
    double time_limit_seconds;
    std::function<void(std::ostream&)> body; // throws on failure
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

// Monomial grid shared by criteria 6, 8 and 12: p in {2,3,5}, q <= 25,
// max d_j + 1 < q, n <= 3 variables, d_j <= 3.
struct GridPoint {
    std::uint64_t p;
    std::uint32_t e;
    std::vector<Exp> d;
};

std::vector<GridPoint> monomial_grid(std::size_t max_vars) {
    std::vector<GridPoint> grid;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (std::uint32_t e = 1; checked_pow_u64(p, e) <= 25; ++e) {
            std::uint64_t q = checked_pow_u64(p, e);
            for (std::size_t n = 1; n <= max_vars; ++n) {
                std::vector<Exp> d(n, 1);
                for (;;) {
                    Exp maxd = *std::max_element(d.begin(), d.end());
                    if (static_cast<std::uint64_t>(maxd) + 1 < q) grid.push_back({p, e, d});
                    std::size_t v = 0;
                    while (v < n && d[v] == 3) d[v++] = 1;
                    if (v == n) break;
                    ++d[v];
                }
            }
        }
    }
    return grid;
}

// The printed 9x9 matrix of relations of x^2 + xy at p = 3, in the order
// 1, x, x^2, y, yx, yx^2, y^2, y^2x, y^2x^2.
const std::array<std::array<const char*, 9>, 9> kWorkedMatrix = {{
    {"0", "x", "0", "0", "0", "0", "0", "0", "y*x"},
    {"0", "0", "x", "0", "0", "0", "y", "0", "0"},
    {"1", "0", "0", "0", "0", "0", "0", "y", "0"},
    {"0", "0", "x", "0", "x", "0", "0", "0", "0"},
    {"1", "0", "0", "0", "0", "x", "0", "0", "0"},
    {"0", "1", "0", "1", "0", "0", "0", "0", "0"},
    {"0", "0", "0", "0", "0", "x", "0", "x", "0"},
    {"0", "0", "0", "1", "0", "0", "0", "0", "x"},
    {"0", "0", "0", "0", "1", "0", "1", "0", "0"},
}};

const std::array<Monomial, 9> kWorkedOrder = {{
    {0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {2, 2},
}};

void criterion_matrix_fidelity(std::ostream&) {
    auto r = Ring::make(Prime(3), 2);
    RelationMatrix m = RelationMatrix::build(parse_poly("x^2+x*y", r), 1);
    require(m.size() == 9, "size");
    std::array<std::size_t, 9> perm{};
    for (std::size_t i = 0; i < 9; ++i) perm[i] = m.basis().index(kWorkedOrder[i]);
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            require(m.entry(perm[i], perm[j]) == parse_poly(kWorkedMatrix[i][j], r),
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

void criterion_block_fidelity(std::ostream&) {
    auto base = Ring::make(Prime(3), std::vector<std::string>{"x"});
    RelationMatrix blocks =
        RelationMatrix::block_extension({parse_poly("x^2", base), parse_poly("x", base)}, 1, "y");
    require(blocks.size() == 9, "size");

    auto ext = base->adjoin("y");
    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = 0; j < 9; ++j) {
            require(blocks.entry(i, j) == parse_poly(kWorkedMatrix[i][j], ext),
                    "block entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }

    // Direct two-variable construction, matched through the basis permutation.
    auto two = Ring::make(Prime(3), 2);
    RelationMatrix direct = RelationMatrix::build(parse_poly("x^2+x*y", two), 1);
    FrobeniusBasis base_basis(base, 1);
    std::vector<std::size_t> perm(9);
    for (std::size_t v = 0; v < 3; ++v) {
        for (std::size_t i = 0; i < 3; ++i) {
            Monomial m = base_basis.monomial(i);
            m.push_back(static_cast<Exp>(v));
            perm[v * 3 + i] = direct.basis().index(m);
        }
    }
    bool same = true;
    std::size_t seen = 0;
    blocks.mat().for_each_entry([&](std::size_t i, std::size_t j, const Poly& v) {
        ++seen;
        same = same && to_string(direct.entry(perm[i], perm[j])) == to_string(v);
    });
    require(same && seen == direct.mat().entry_count(), "direct-construction match");
}

void criterion_uv_2_3(std::ostream&) {
    require(signature_uv_closed({1, 1}) == BigRat(2, 3), "closed form");
    SignatureReport r = signature_uv_empirical({1, 1}, Prime(5), 1, 8);
    BigRat err = r.estimates.back().ratio - BigRat(2, 3);
    if (err < 0) err = -err;
    require(err < BigRat(1, 100), "|ratio - 2/3| < 1e-2 at e=8");
}

void criterion_uv_1_over_d(std::ostream&) {
    for (Exp d = 2; d <= 10; ++d) {
        require(signature_uv_closed({d}) == BigRat(1, d), "closed form at d=" + std::to_string(d));
        SignatureReport r = signature_uv_empirical({d}, Prime(3), 10, 10);
        BigRat err = r.estimates.back().ratio - BigRat(1, d);
        if (err < 0) err = -err;
        require(err < BigRat(1, 100), "empirical agreement at d=" + std::to_string(d));
    }
}

void criterion_sharp(std::ostream&) {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Exp> d(n, 1);
        SignatureReport r = signature_plus_z2(d, Prime(3), 1, 6);
        require(r.exact && *r.exact == make_rat(1, big_pow(BigInt(2), n - 1)),
                "exact 1/2^(n-1) at n=" + std::to_string(n));
        for (const SignatureEstimate& est : r.estimates) {
            std::uint64_t q = checked_pow_u64(3, est.e);
            BigInt expected = big_pow((q - 1) / 2, n) + big_pow((q + 1) / 2, n);
            require(est.free_rank == expected, "count formula at n=" + std::to_string(n) +
                                                   ", e=" + std::to_string(est.e));
        }
    }
    // max d_j >= 2: signature 0 and counts within the proof's bound.
    for (std::vector<Exp> d : {std::vector<Exp>{2}, {2, 1}, {3, 1, 1}}) {
        SignatureReport r = signature_plus_z2(d, Prime(5), 1, 5);
        require(r.exact && *r.exact == BigRat(0), "exact 0 when max d >= 2");
        Exp maxd = *std::max_element(d.begin(), d.end());
        for (const SignatureEstimate& est : r.estimates) {
            std::uint64_t q = checked_pow_u64(5, est.e);
            BigInt bound = maxd == 2 ? big_pow((q + 1) / 2, d.size() - 1) : BigInt(0);
            require(est.free_rank <= bound, "count bound when max d >= 2");
        }
    }
}

void criterion_diagonalization(std::ostream& log) {
    std::size_t cases = 0;
    for (const GridPoint& g : monomial_grid(3)) {
        std::uint64_t q = checked_pow_u64(g.p, g.e);
        RingPtr ring = Ring::make(Prime(g.p), g.d.size());
        Poly f = Poly::from_monomial(ring, Monomial(g.d.begin(), g.d.end()));
        for (std::uint64_t k = 1; k < q; ++k) {
            RelationMatrix A = RelationMatrix::build(pow(f, k), g.e);
            require(diagonalize_monomial_matrix(A) == diagonal_entry_counts(g.d, k, Prime(g.p), g.e),
                    "multiset mismatch at p=" + std::to_string(g.p) + " e=" + std::to_string(g.e) +
                        " k=" + std::to_string(k));
            ++cases;
        }
    }
    log << cases << " (f,k) cases; ";
}

void criterion_algebra_laws(std::ostream& log) {
    std::mt19937 rng(1789);
    std::size_t cases = 0;
    for (std::uint64_t p : {2ull, 3ull}) {
        for (std::size_t n : {1u, 2u}) {
            auto r = Ring::make(Prime(p), n);
            FrobeniusBasis basis(r, 1);
            std::uint64_t q = basis.q();
            for (int i = 0; i < 60; ++i) {
                Poly f = ffrt::testing::random_nonzero_poly(rng, r, 4, 3);
                Poly g = ffrt::testing::random_nonzero_poly(rng, r, 4, 3);
                RelationMatrix mf = RelationMatrix::build(f, 1);
                RelationMatrix mg = RelationMatrix::build(g, 1);
                if (!(f + g).is_zero()) {
                    require(RelationMatrix::build(f + g, 1) == mf + mg, "additivity");
                }
                require(RelationMatrix::build(f * g, 1) == mf * mg, "multiplicativity");
                std::uint64_t k = 1 + static_cast<std::uint64_t>(i) % (q - 1 > 0 ? q - 1 : 1);
                RelationMatrix mk = RelationMatrix::build(pow(f, k), 1);
                RelationMatrix mqk = RelationMatrix::build(pow(f, q - k), 1);
                require((mk * mqk).mat().is_scalar(f), "factorization identity");
                ++cases;
            }
        }
    }
    require(cases >= 200, "enough cases");
    log << cases << " triples; ";
}

void criterion_pivot_bridge(std::ostream& log) {
    std::size_t cases = 0;
    for (const GridPoint& g : monomial_grid(3)) {
        std::uint64_t q = checked_pow_u64(g.p, g.e);
        RingPtr ring = Ring::make(Prime(g.p), g.d.size());
        Poly f = Poly::from_monomial(ring, Monomial(g.d.begin(), g.d.end()));
        for (std::uint64_t k = 1; k < q; ++k) {
            SplitResult s = split_power_factorization(f, k, g.e);
            require(BigInt(static_cast<unsigned long>(s.t)) == free_rank_formula(g.d, k, Prime(g.p), g.e),
                    "pivot count vs closed form at p=" + std::to_string(g.p) + " e=" + std::to_string(g.e) +
                        " k=" + std::to_string(k));
            ++cases;
        }
    }
    log << cases << " splits; ";
}

void criterion_decomposition(std::ostream&) {
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 30; ++trial) {
        std::uint64_t p = trial % 2 ? 2 : 3;
        std::uint32_t e = 1 + trial % 2;
        std::size_t n = 1 + trial % 3;
        std::vector<Monomial> gens;
        std::size_t count = 1 + trial % 3;
        for (std::size_t i = 0; i < count; ++i) {
            Monomial m(n);
            bool nonzero = false;
            for (Exp& x : m) {
                x = rng() % 3;
                nonzero |= x > 0;
            }
            if (!nonzero) m[0] = 1;
            gens.push_back(std::move(m));
        }
        IdealDecomposition dec = decompose_monomial_quotient(gens, Prime(p), e);
        BigInt total = 0;
        for (const auto& [ideal, mult] : dec.multiplicities) total += mult;
        require(total == big_pow(checked_pow_u64(p, e), n), "conservation");
    }

    // The worked case, checked against the concatenated-matrix oracle.
    std::vector<Monomial> gens{Monomial{2, 0}, Monomial{1, 1}};
    IdealDecomposition dec = decompose_monomial_quotient(gens, Prime(2), 1);
    require(dec.multiplicities.at(MonomialIdeal{Monomial{1, 0}}) == 2, "(x) multiplicity");
    require(dec.multiplicities.at(MonomialIdeal{Monomial{0, 1}, Monomial{1, 0}}) == 1, "(x,y) multiplicity");
    require(dec.multiplicities.at(MonomialIdeal{Monomial{0, 0}}) == 1, "(1) multiplicity");

    RingPtr ring = Ring::make(Prime(2), 2);
    std::vector<std::vector<Monomial>> per_row(4);
    for (const Monomial& g : gens) {
        RelationMatrix m = RelationMatrix::build(Poly::from_monomial(ring, g), 1);
        m.mat().for_each_entry([&](std::size_t i, std::size_t, const Poly& v) {
            per_row[i].push_back(v.terms().front().mono);
        });
    }
    std::map<MonomialIdeal, BigInt> oracle;
    for (auto& row : per_row) {
        require(row.size() == gens.size(), "oracle row arity");
        oracle[minimal_generators(row)] += 1;
    }
    require(oracle == dec.multiplicities, "oracle equality");
}

void criterion_artin_schreier(std::ostream&) {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        auto r = Ring::make(Prime(p), 1);
        ArtinSchreierResult result = signature_artin_schreier(parse_poly("x", r), 1);
        require(result.signature == BigRat(1), "regular signature at p=" + std::to_string(p));
    }
}

void criterion_fedder(std::ostream&) {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            auto r = Ring::make(Prime(p), n);
            require(fedder_principal(Poly::from_monomial(r, Monomial(n, 1))).f_pure,
                    "product of variables is F-pure");
        }
    }
    auto r2 = Ring::make(Prime(2), 1);
    require(!fedder_principal(parse_poly("x^2", r2)).f_pure, "x^2 at p=2 is not F-pure");

    std::mt19937 rng(100);
    int checked = 0;
    while (checked < 100) {
        std::uint64_t p = (checked % 3 == 0) ? 2 : (checked % 3 == 1 ? 3 : 5);
        std::size_t n = 1 + checked % 3;
        Monomial m(n);
        bool nonzero = false;
        for (Exp& x : m) {
            x = rng() % 4;
            nonzero |= x > 0;
        }
        if (!nonzero) continue;
        ++checked;
        auto r = Ring::make(Prime(p), n);
        PurityVerdict a = fedder_principal(Poly::from_monomial(r, m));
        PurityVerdict b = fedder_monomial_ideal({m}, Prime(p));
        require(a.f_pure == b.f_pure, "principal/ideal agreement");
        if (a.f_pure) require(*a.witness == *b.witness, "witness agreement");
    }
}

void criterion_extension_identity(std::ostream& log) {
    std::size_t cases = 0;
    for (const GridPoint& g : monomial_grid(3)) {
        ExtensionCountCheck check = verify_extension_count_identity(g.d, Prime(g.p), g.e);
        require(check.equal, "identity at p=" + std::to_string(g.p) + " e=" + std::to_string(g.e));
        ++cases;
    }
    log << cases << " grid points; ";
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "worked 9x9 matrix fidelity (p=3)", 1.0, criterion_matrix_fidelity},
        {2, "block-structure fidelity", 1.0, criterion_block_fidelity},
        {3, "uv signature 2/3", 1.0, criterion_uv_2_3},
        {4, "uv signature 1/d, d=2..10", 1.0, criterion_uv_1_over_d},
        {5, "plus-z2 signature 1/2^(n-1) and 0", 1.0, criterion_sharp},
        {6, "monomial diagonalization oracle", 120.0, criterion_diagonalization},
        {7, "relation-matrix algebra laws", 60.0, criterion_algebra_laws},
        {8, "pivoting engine vs closed form", 120.0, criterion_pivot_bridge},
        {9, "monomial-ideal decomposition", 10.0, criterion_decomposition},
        {10, "artin-schreier regular case", 10.0, criterion_artin_schreier},
        {11, "fedder criterion suite", 10.0, criterion_fedder},
        {12, "variable-extension count identity", 60.0, criterion_extension_identity},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::ostringstream log;
        auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.body(log);
        } catch (const std::exception& e) {
            failure = e.what();
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = failure.empty();
        if (ok && seconds > c.time_limit_seconds) {
            ok = false;
            failure = "exceeded " + std::to_string(c.time_limit_seconds) + "s";
        }
        if (!ok) ++failures;
        std::printf("[%s] criterion %2d: %s (%s%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    log.str().c_str(), seconds, failure.empty() ? "" : " -- ", failure.c_str());
    }
    return failures == 0 ? 0 : 1;
}
