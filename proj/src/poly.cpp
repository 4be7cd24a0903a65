#include "ffrt/poly.hpp"

#include <sstream>

#include "ffrt/errors.hpp"

namespace ffrt {

namespace {

std::uint64_t reduce_mod(std::int64_t value, std::uint64_t p) {
    std::int64_t m = value % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m);
}

void require_compatible(const RingPtr& a, const RingPtr& b) {
    if (a == b) return;
    if (!a || !b || !a->compatible(*b)) {
        throw domain_error("ambient mismatch: " + (a ? a->describe() : "<null>") + " vs " +
                           (b ? b->describe() : "<null>"));
    }
}

bool below_truncation(const RingPtr& ring, const Monomial& m) {
    auto bound = ring->truncation();
    return !bound || total_degree(m) < *bound;
}

} // namespace

Poly poly_from_accumulator(const RingPtr& ring, std::map<Monomial, std::uint64_t, GrlexLess>&& acc) {
    Poly out(ring);
    out.terms_.reserve(acc.size());
    for (auto& [mono, c] : acc) {
        std::uint64_t cc = c % ring->p();
        if (cc == 0) continue;
        if (!below_truncation(ring, mono)) continue;
        out.terms_.push_back(Poly::Term{mono, cc});
    }
    return out;
}

Poly Poly::constant(const RingPtr& ring, std::int64_t value) {
    return from_monomial(ring, Monomial(ring->var_count(), 0), value);
}

Poly Poly::variable(const RingPtr& ring, std::size_t var, Exp power) {
    if (var >= ring->var_count()) throw domain_error("variable index out of range");
    Monomial m(ring->var_count(), 0);
    m[var] = power;
    return from_monomial(ring, m, 1);
}

Poly Poly::from_monomial(const RingPtr& ring, const Monomial& m, std::int64_t coeff) {
    if (m.size() != ring->var_count()) throw domain_error("monomial length does not match ring");
    Poly out(ring);
    std::uint64_t c = reduce_mod(coeff, ring->p());
    if (c != 0 && below_truncation(ring, m)) {
        out.terms_.push_back(Term{m, c});
    }
    return out;
}

Poly Poly::from_terms(const RingPtr& ring, std::vector<std::pair<Monomial, std::int64_t>> terms) {
    std::map<Monomial, std::uint64_t, GrlexLess> acc;
    for (auto& [m, c] : terms) {
        if (m.size() != ring->var_count()) throw domain_error("monomial length does not match ring");
        acc[m] = (acc[m] + reduce_mod(c, ring->p())) % ring->p();
    }
    return poly_from_accumulator(ring, std::move(acc));
}

Exp Poly::degree() const {
    Exp deg = 0;
    for (const Term& t : terms_) deg = std::max(deg, total_degree(t.mono));
    return deg;
}

std::uint64_t Poly::constant_term() const {
    if (terms_.empty()) return 0;
    // Terms are ascending, so a constant term can only sit in front.
    const Term& first = terms_.front();
    return total_degree(first.mono) == 0 ? first.coeff : 0;
}

bool Poly::is_local_unit() const { return constant_term() != 0; }

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.front().mono) == 0);
}

bool Poly::is_one() const {
    return terms_.size() == 1 && terms_.front().coeff == 1 && total_degree(terms_.front().mono) == 0;
}

bool Poly::is_monic_monomial() const {
    return terms_.size() == 1 && terms_.front().coeff == 1;
}

Poly Poly::operator+(const Poly& other) const {
    require_compatible(ring_, other.ring_);
    Poly out(ring_);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    const std::uint64_t p = ring_->p();
    while (i < terms_.size() || j < other.terms_.size()) {
        int cmp;
        if (i == terms_.size()) {
            cmp = 1;
        } else if (j == other.terms_.size()) {
            cmp = -1;
        } else {
            cmp = grlex_cmp(terms_[i].mono, other.terms_[j].mono);
        }
        if (cmp < 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (cmp > 0) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            std::uint64_t c = (terms_[i].coeff + other.terms_[j].coeff) % p;
            if (c != 0) out.terms_.push_back(Term{terms_[i].mono, c});
            ++i;
            ++j;
        }
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out(ring_);
    out.terms_.reserve(terms_.size());
    const std::uint64_t p = ring_->p();
    for (const Term& t : terms_) out.terms_.push_back(Term{t.mono, p - t.coeff});
    return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
    require_compatible(ring_, other.ring_);
    const std::uint64_t p = ring_->p();
    if (terms_.empty() || other.terms_.empty()) return Poly(ring_);
    // Single-term factors are the common case in matrix work; keep them cheap.
    std::map<Monomial, std::uint64_t, GrlexLess> acc;
    Monomial prod(ring_->var_count());
    for (const Term& a : terms_) {
        for (const Term& b : other.terms_) {
            for (std::size_t v = 0; v < prod.size(); ++v) prod[v] = a.mono[v] + b.mono[v];
            if (!below_truncation(ring_, prod)) continue;
            auto [it, inserted] = acc.try_emplace(prod, 0);
            it->second = (it->second + a.coeff * b.coeff) % p;
        }
    }
    return poly_from_accumulator(ring_, std::move(acc));
}

Poly Poly::scaled(std::int64_t c) const {
    const std::uint64_t p = ring_->p();
    std::uint64_t cc = reduce_mod(c, p);
    Poly out(ring_);
    if (cc == 0) return out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        std::uint64_t v = (t.coeff * cc) % p;
        if (v != 0) out.terms_.push_back(Term{t.mono, v});
    }
    return out;
}

bool Poly::operator==(const Poly& other) const {
    require_compatible(ring_, other.ring_);
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != other.terms_[i].coeff) return false;
        if (grlex_cmp(terms_[i].mono, other.terms_[i].mono) != 0) return false;
    }
    return true;
}

Poly Poly::converted(const RingPtr& target) const {
    if (target->p() != ring_->p() || target->var_count() != ring_->var_count()) {
        throw domain_error("conversion requires the same characteristic and variable count");
    }
    Poly out(target);
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (below_truncation(target, t.mono)) out.terms_.push_back(t);
    }
    return out;
}

Poly Poly::lifted(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
    if (target->p() != ring_->p()) throw domain_error("lift requires the same characteristic");
    if (var_map.size() != ring_->var_count()) throw domain_error("variable map has the wrong length");
    std::map<Monomial, std::uint64_t, GrlexLess> acc;
    for (const Term& t : terms_) {
        Monomial m(target->var_count(), 0);
        for (std::size_t v = 0; v < var_map.size(); ++v) {
            if (var_map[v] >= m.size()) throw domain_error("variable map out of range");
            m[var_map[v]] = t.mono[v];
        }
        acc[std::move(m)] = t.coeff;
    }
    return poly_from_accumulator(target, std::move(acc));
}

std::string Poly::str() const { return ffrt::to_string(*this); }

Poly pow(const Poly& a, std::uint64_t k) {
    Poly acc = Poly::constant(a.ring(), 1);
    if (k == 0) return acc;
    Poly base = a;
    while (true) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k == 0) break;
        base = base * base;
    }
    return acc;
}

Poly local_inverse(const Poly& a, Exp bound) {
    if (!a.is_local_unit()) throw domain_error("local_inverse of a non-unit");
    RingPtr target = a.ring()->truncated(bound);
    const std::uint64_t p = target->p();

    std::uint64_t c0 = a.constant_term();
    // Inverse of c0 in F_p by Fermat.
    std::uint64_t c0inv = 1;
    {
        std::uint64_t base = c0 % p, e = p - 2;
        while (e != 0) {
            if (e & 1) c0inv = (c0inv * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        if (p == 2) c0inv = c0 % p;
    }
    if (a.is_constant()) return Poly::constant(target, static_cast<std::int64_t>(c0inv));

    Poly at = a.converted(target);
    Poly one = Poly::constant(target, 1);
    Poly g = one - at.scaled(static_cast<std::int64_t>(c0inv)); // order >= 1
    if (g.is_zero()) return one.scaled(static_cast<std::int64_t>(c0inv));

    // Geometric series via Horner; stops early once the tail vanishes.
    Poly acc = one;
    for (Exp i = 1; i < bound; ++i) {
        Poly next = one + g * acc;
        if (next == acc) break;
        acc = std::move(next);
    }
    return acc.scaled(static_cast<std::int64_t>(c0inv));
}

std::string to_string(const Poly& poly) {
    if (poly.is_zero()) return "0";
    std::ostringstream os;
    const auto& names = poly.ring()->var_names();
    const auto& terms = poly.terms();
    // Descending graded-lex for display.
    for (std::size_t idx = terms.size(); idx-- > 0;) {
        const Poly::Term& t = terms[idx];
        if (idx + 1 != terms.size()) os << " + ";
        bool has_vars = total_degree(t.mono) > 0;
        if (!has_vars) {
            os << t.coeff;
            continue;
        }
        bool leading = true;
        if (t.coeff != 1) {
            os << t.coeff;
            leading = false;
        }
        for (std::size_t v = 0; v < t.mono.size(); ++v) {
            if (t.mono[v] == 0) continue;
            if (!leading) os << "*";
            leading = false;
            os << names[v];
            if (t.mono[v] > 1) os << "^" << t.mono[v];
        }
    }
    return os.str();
}

} // namespace ffrt
