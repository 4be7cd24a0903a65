#include "ffrt/frobenius.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "ffrt/errors.hpp"

namespace ffrt {

namespace {

using BasisTable = std::pair<std::vector<Monomial>, std::map<Monomial, std::size_t, GrlexLess>>;

// The enumeration depends only on (p, e, n); share it across instances.
std::shared_ptr<const BasisTable> cached_table(std::uint64_t p, std::uint32_t e, std::size_t n,
                                               const std::function<std::shared_ptr<const BasisTable>()>& make) {
    static std::mutex mu;
    static std::map<std::tuple<std::uint64_t, std::uint32_t, std::size_t>, std::weak_ptr<const BasisTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, e, n);
    if (auto it = cache.find(key); it != cache.end()) {
        if (auto held = it->second.lock()) return held;
    }
    auto table = make();
    cache[key] = table;
    return table;
}

} // namespace

FrobeniusBasis::FrobeniusBasis(RingPtr ring, std::uint32_t level) : ring_(std::move(ring)), level_(level) {
    if (level_ == 0) throw domain_error("level must be >= 1");
    if (ring_->truncation()) throw domain_error("pushforward bases live over the exact ring");
    q_ = checked_pow_u64(ring_->p(), level_);
    if (q_ > (std::uint64_t(1) << 31)) throw domain_error("q = p^e too large for exponent arithmetic");
}

BigInt FrobeniusBasis::rank_count() const {
    return big_pow(q_, static_cast<std::uint64_t>(ring_->var_count()));
}

void FrobeniusBasis::materialize() const {
    if (table_) return;
    BigInt r = rank_count();
    if (r > BigInt(static_cast<unsigned long>(kMaterializeGuard))) {
        throw domain_error("basis of size " + r.get_str() + " is too large to materialize");
    }
    std::size_t n = ring_->var_count();
    std::size_t count = static_cast<std::size_t>(r.get_ui());
    std::uint64_t q = q_;

    table_ = cached_table(ring_->p(), level_, n, [n, count, q]() {
        std::vector<Monomial> order;
        order.reserve(count);
        Monomial m(n, 0);
        // Odometer over [0,q)^n, then sort into graded-lex rank order.
        while (true) {
            order.push_back(m);
            std::size_t v = n;
            while (v > 0) {
                --v;
                if (m[v] + 1 < q) {
                    ++m[v];
                    break;
                }
                m[v] = 0;
                if (v == 0) goto done;
            }
        }
    done:
        std::sort(order.begin(), order.end(), GrlexLess{});

        std::map<Monomial, std::size_t, GrlexLess> rank;
        for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], i);
        return std::make_shared<const BasisTable>(std::move(order), std::move(rank));
    });
}

std::size_t FrobeniusBasis::size() const {
    materialize();
    return table_->first.size();
}

std::size_t FrobeniusBasis::index(const Monomial& m) const {
    if (m.size() != ring_->var_count()) throw domain_error("monomial length does not match ring");
    for (Exp e : m) {
        if (e >= q_) throw domain_error("exponent out of range [0, q)");
    }
    materialize();
    return table_->second.at(m);
}

const Monomial& FrobeniusBasis::monomial(std::size_t i) const {
    materialize();
    if (i >= table_->first.size()) throw domain_error("basis index out of range");
    return table_->first[i];
}

std::map<Monomial, Poly, GrlexLess> FrobeniusBasis::coordinates(const Poly& g) const {
    if (!g.ring()->compatible(*ring_)) throw domain_error("ambient mismatch in coordinates");
    std::size_t n = ring_->var_count();
    std::map<Monomial, Poly, GrlexLess> out;
    Monomial rho(n), beta(n);
    for (const Poly::Term& t : g.terms()) {
        for (std::size_t v = 0; v < n; ++v) {
            rho[v] = static_cast<Exp>(t.mono[v] % q_);
            beta[v] = static_cast<Exp>(t.mono[v] / q_);
        }
        auto it = out.find(rho);
        Poly piece = Poly::from_monomial(ring_, beta, static_cast<std::int64_t>(t.coeff));
        if (it == out.end()) {
            out.emplace(rho, std::move(piece));
        } else {
            it->second = it->second + piece;
        }
    }
    // Cancellation cannot happen (the splitting is injective on terms), but
    // drop empty slots anyway.
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
}

} // namespace ffrt
