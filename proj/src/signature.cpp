#include "ffrt/signature.hpp"

#include <algorithm>
#include <mutex>

#include "ffrt/errors.hpp"

namespace ffrt {

namespace {

BigInt binomial(std::uint32_t n, std::uint32_t k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

std::uint64_t max_exp(const std::vector<Exp>& d_list) {
    if (d_list.empty()) throw domain_error("need at least one exponent");
    Exp d = 0;
    for (Exp dj : d_list) {
        if (dj == 0) throw domain_error("exponents must be >= 1");
        d = std::max(d, dj);
    }
    return d;
}

} // namespace

BigRat bernoulli(std::uint32_t j) {
    static std::mutex mu;
    static std::vector<BigRat> cache{BigRat(1), BigRat(-1, 2)};
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= j) {
        std::uint32_t m = static_cast<std::uint32_t>(cache.size());
        // sum_{i=0}^{m} C(m+1, i) B_i = 0
        BigRat acc(0);
        for (std::uint32_t i = 0; i < m; ++i) {
            acc += BigRat(binomial(m + 1, i)) * cache[i];
        }
        BigRat bm = -acc / BigRat(static_cast<long>(m) + 1);
        bm.canonicalize();
        cache.push_back(bm);
    }
    return cache[j];
}

BigRat faulhaber_sum(std::uint32_t s, const BigInt& delta) {
    if (delta <= 0) return BigRat(0);
    if (s == 0) return BigRat(delta);
    BigRat acc(0);
    for (std::uint32_t j = 0; j <= s; ++j) {
        BigRat term = BigRat(binomial(s + 1, j)) * bernoulli(j) * BigRat(big_pow(delta, s + 1 - j));
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    acc /= BigRat(static_cast<long>(s) + 1);
    acc.canonicalize();
    return acc;
}

std::vector<BigRat> weight_vector(const BigRat& d, const std::vector<BigRat>& d_list) {
    if (d_list.empty()) throw domain_error("need at least one exponent");
    // One variable: (d_1, d - d_1); then absorb one variable at a time.
    std::vector<BigRat> w{d_list[0], d - d_list[0]};
    for (std::size_t m = 1; m < d_list.size(); ++m) {
        const BigRat& dm = d_list[m];
        BigRat co = d - dm;
        std::vector<BigRat> next(w.size() + 1);
        next[0] = dm * w[0];
        for (std::size_t j = 1; j < w.size(); ++j) next[j] = dm * w[j] + co * w[j - 1];
        next[w.size()] = co * w.back();
        w = std::move(next);
    }
    for (BigRat& v : w) v.canonicalize();
    return w;
}

BigRat signature_uv_closed(const std::vector<Exp>& d_list) {
    std::uint64_t d = max_exp(d_list);
    std::vector<BigRat> ds;
    ds.reserve(d_list.size());
    for (Exp dj : d_list) ds.emplace_back(static_cast<unsigned long>(dj));
    std::vector<BigRat> w = weight_vector(BigRat(static_cast<unsigned long>(d)), ds);

    std::size_t n = d_list.size();
    BigRat acc(0);
    for (std::size_t j = 0; j <= n; ++j) {
        acc += w[j] / BigRat(static_cast<unsigned long>(n + 1 - j));
    }
    BigRat out = BigRat(2) * acc / BigRat(big_pow(d, static_cast<std::uint64_t>(n) + 1));
    out.canonicalize();
    return out;
}

BigInt uv_free_rank(const std::vector<Exp>& d_list, const Prime& p, std::uint32_t e) {
    std::uint64_t d = max_exp(d_list);
    std::uint64_t q = checked_pow_u64(p.value(), e);
    std::size_t n = d_list.size();

    BigInt out = big_pow(q, n); // the q^n free copies

    // Counts vanish outside k > q(d-1)/d; on the window substitute
    // k = k_min + r and expand prod_j (a_j + d_j r) as a polynomial in r.
    std::uint64_t k_min = q - (q + d - 1) / d + 1; // smallest k with d(q-k) < q
    if (k_min > q - 1) return out;
    BigInt delta(static_cast<unsigned long>(q - 1 - k_min));

    std::vector<BigInt> coeffs{BigInt(1)}; // coefficients in r, low to high
    for (Exp dj : d_list) {
        BigInt a = BigInt(static_cast<unsigned long>(q)) -
                   BigInt(static_cast<unsigned long>(dj)) * BigInt(static_cast<unsigned long>(q - k_min));
        std::vector<BigInt> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += coeffs[i] * a;
            next[i + 1] += coeffs[i] * static_cast<unsigned long>(dj);
        }
        coeffs = std::move(next);
    }

    BigRat window(0);
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
        // sum_{r=0}^{delta} r^s
        BigRat power_sum = faulhaber_sum(static_cast<std::uint32_t>(s), delta);
        if (s == 0) power_sum += 1;
        window += BigRat(coeffs[s]) * power_sum;
    }
    window.canonicalize();
    if (window.get_den() != 1) throw domain_error("window sum must be integral");

    out += 2 * window.get_num();
    return out;
}

SignatureReport signature_uv_empirical(const std::vector<Exp>& d_list, const Prime& p,
                                       std::uint32_t e_min, std::uint32_t e_max) {
    if (e_min < 1 || e_min > e_max) throw domain_error("empty level range");
    SignatureReport report;
    report.dimension = static_cast<std::uint32_t>(d_list.size()) + 1;
    report.exact = signature_uv_closed(d_list);
    for (std::uint32_t e = e_min; e <= e_max; ++e) {
        BigInt a_e = uv_free_rank(d_list, p, e);
        BigInt denom = big_pow(p.value(), static_cast<std::uint64_t>(e) * report.dimension);
        report.estimates.push_back({e, a_e, make_rat(a_e, denom)});
    }
    return report;
}

SignatureReport signature_plus_z2(const std::vector<Exp>& d_list, const Prime& p,
                                  std::uint32_t e_min, std::uint32_t e_max) {
    if (p.value() == 2) throw domain_error("characteristic must be odd");
    if (e_min < 1 || e_min > e_max) throw domain_error("empty level range");
    std::uint64_t d = max_exp(d_list);
    std::size_t n = d_list.size();

    SignatureReport report;
    report.dimension = static_cast<std::uint32_t>(n);
    if (d == 1) {
        report.exact = make_rat(BigInt(1), big_pow(BigInt(2), n - 1));
    } else {
        report.exact = BigRat(0);
    }
    for (std::uint32_t e = e_min; e <= e_max; ++e) {
        std::uint64_t q = checked_pow_u64(p.value(), e);
        BigInt a_e = free_rank_formula(d_list, (q - 1) / 2, p, e) +
                     free_rank_formula(d_list, (q + 1) / 2, p, e);
        BigInt denom = big_pow(p.value(), static_cast<std::uint64_t>(e) * n);
        report.estimates.push_back({e, a_e, make_rat(a_e, denom)});
    }
    return report;
}

ArtinSchreierResult signature_artin_schreier(const Poly& f, std::uint32_t d,
                                             std::optional<Exp> precision) {
    if (f.is_zero()) throw domain_error("f must be nonzero");
    if (f.is_local_unit()) throw domain_error("f must have zero constant term");
    if (d < 1) throw domain_error("level must be >= 1");

    std::uint64_t P = checked_pow_u64(f.ring()->p(), d); // p^d
    std::size_t n = f.ring()->var_count();

    // At level d the matrix over the extended ring is block diagonal with
    // p^d copies of yI + A, so one block determines the count.
    RelationMatrix A = RelationMatrix::build(f, d);
    RingPtr ext = f.ring()->adjoin("y");
    std::vector<std::size_t> var_map(n);
    for (std::size_t v = 0; v < n; ++v) var_map[v] = v;
    Poly y = Poly::variable(ext, ext->var_count() - 1);

    std::size_t size = A.size();
    SparsePolyMat phi = A.mat().lifted(ext, var_map) + SparsePolyMat::diagonal(ext, size, y);

    // Complement: sum_{i<P} (-1)^i y^(P-1-i) A^i, a telescoping cofactor of
    // yI + A against y^P I + A^P = (y^P + f) I.
    SparsePolyMat psi(ext, size);
    SparsePolyMat a_power = SparsePolyMat::identity(ext, size);
    SparsePolyMat a_lifted = A.mat().lifted(ext, var_map);
    for (std::uint64_t i = 0; i < P; ++i) {
        Poly scale = pow(y, P - 1 - i);
        if (i % 2 == 1) scale = -scale;
        psi = psi + a_power.scaled(scale);
        if (i + 1 < P) a_power = a_power * a_lifted;
    }

    Poly g = pow(y, P) + f.lifted(ext, var_map);
    MatrixFactorization mf(g, std::move(phi), std::move(psi));

    Exp bound = precision ? *precision : default_precision(g, P);
    SplitResult split = split_trivial(mf, bound);

    ArtinSchreierResult out;
    out.free_rank = split.t;
    out.precision_used = split.precision_used;
    // p^d blocks, each contributing t, over p^(e(dim)) at e = d, dim = n.
    out.signature = make_rat(BigInt(static_cast<unsigned long>(P)) * BigInt(static_cast<unsigned long>(split.t)),
                             big_pow(f.ring()->p(), static_cast<std::uint64_t>(n) * d));
    return out;
}

ExtensionCountCheck verify_extension_count_identity(const std::vector<Exp>& d_list, const Prime& p,
                                                    std::uint32_t e, std::optional<Exp> precision) {
    max_exp(d_list);
    std::uint64_t q = checked_pow_u64(p.value(), e);
    std::size_t n = d_list.size();

    RingPtr base = Ring::make(p, n);
    Monomial dm(d_list.begin(), d_list.end());
    Poly f = Poly::from_monomial(base, dm);

    // Left route: the matrix over the extended ring is block diagonal with q
    // copies of the base matrix; pivot it.
    RelationMatrix A = RelationMatrix::build(f, e);
    RelationMatrix B = RelationMatrix::build(pow(f, q - 1), e);
    RingPtr ext = base->adjoin("y");
    std::vector<std::size_t> var_map(n);
    for (std::size_t v = 0; v < n; ++v) var_map[v] = v;

    SparsePolyMat phi = SparsePolyMat::block_diagonal(A.mat().lifted(ext, var_map), q);
    SparsePolyMat psi = SparsePolyMat::block_diagonal(B.mat().lifted(ext, var_map), q);
    Poly g = f.lifted(ext, var_map);
    MatrixFactorization mf(g, std::move(phi), std::move(psi));

    Exp bound = precision ? *precision : default_precision(g, q);
    SplitResult split = split_trivial(mf, bound);

    ExtensionCountCheck check;
    check.extended_count = BigInt(static_cast<unsigned long>(split.t));
    check.base_count = free_rank_formula(d_list, 1, p, e);
    check.expected = BigInt(static_cast<unsigned long>(q)) * check.base_count;
    check.equal = check.extended_count == check.expected;
    check.precision_used = split.precision_used;
    return check;
}

} // namespace ffrt
