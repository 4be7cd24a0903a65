#include "ffrt/fedder.hpp"

#include <algorithm>

#include "ffrt/errors.hpp"
#include "ffrt/monomial.hpp"

namespace ffrt {

namespace {

bool avoids_every_pth_power(const Monomial& m, std::uint64_t p) {
    return std::all_of(m.begin(), m.end(), [p](Exp e) { return e < p; });
}

} // namespace

bool monomial_ideal_contains(const std::vector<Monomial>& gens, const Monomial& m) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return divides(g, m); });
}

std::vector<Monomial> monomial_colon_by_monomial(const std::vector<Monomial>& gens, const Monomial& m) {
    std::vector<Monomial> out;
    out.reserve(gens.size());
    for (const Monomial& g : gens) {
        Monomial q(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) q[v] = g[v] > m[v] ? g[v] - m[v] : 0;
        out.push_back(std::move(q));
    }
    return minimal_generators(std::move(out));
}

std::vector<Monomial> monomial_intersect(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
    std::vector<Monomial> out;
    out.reserve(a.size() * b.size());
    for (const Monomial& g : a) {
        for (const Monomial& h : b) {
            Monomial l(g.size());
            for (std::size_t v = 0; v < g.size(); ++v) l[v] = std::max(g[v], h[v]);
            out.push_back(std::move(l));
        }
    }
    return minimal_generators(std::move(out));
}

std::vector<Monomial> frobenius_colon(const std::vector<Monomial>& gens, std::uint64_t p) {
    if (gens.empty()) throw domain_error("empty generator list");
    std::vector<Monomial> bracket;
    bracket.reserve(gens.size());
    for (const Monomial& g : gens) {
        Monomial gp(g.size());
        for (std::size_t v = 0; v < g.size(); ++v) gp[v] = g[v] * static_cast<Exp>(p);
        bracket.push_back(std::move(gp));
    }
    // (I^[p] : I) as the intersection of the colons by each generator.
    std::vector<Monomial> colon = monomial_colon_by_monomial(bracket, gens.front());
    for (std::size_t g = 1; g < gens.size(); ++g) {
        colon = monomial_intersect(colon, monomial_colon_by_monomial(bracket, gens[g]));
    }
    return colon;
}

PurityVerdict fedder_principal(const Poly& f) {
    if (f.is_zero()) throw domain_error("f must be nonzero");
    if (f.is_local_unit()) throw domain_error("f must have zero constant term");
    std::uint64_t p = f.ring()->p();
    Poly power = pow(f, p - 1);

    PurityVerdict verdict;
    for (const Poly::Term& t : power.terms()) { // ascending graded-lex
        if (avoids_every_pth_power(t.mono, p)) {
            verdict.f_pure = true;
            verdict.witness = t.mono;
            break;
        }
    }
    return verdict;
}

PurityVerdict fedder_monomial_ideal(const std::vector<Monomial>& gens, const Prime& p) {
    if (gens.empty()) throw domain_error("empty generator list");
    for (const Monomial& g : gens) {
        if (total_degree(g) == 0) throw domain_error("generators must be nonunits");
    }
    std::vector<Monomial> colon = frobenius_colon(gens, p.value());

    PurityVerdict verdict;
    for (const Monomial& g : colon) { // minimal_generators returns ascending order
        if (avoids_every_pth_power(g, p.value())) {
            verdict.f_pure = true;
            verdict.witness = g;
            break;
        }
    }
    return verdict;
}

} // namespace ffrt
