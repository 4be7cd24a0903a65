#include "ffrt/ring.hpp"

#include <algorithm>
#include <sstream>

#include "ffrt/errors.hpp"

namespace ffrt {

Exp total_degree(const Monomial& m) {
    Exp sum = 0;
    for (Exp e : m) sum += e;
    return sum;
}

int grlex_cmp(const Monomial& a, const Monomial& b) {
    Exp da = total_degree(a);
    Exp db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

std::vector<std::string> default_var_names(std::size_t nvars) {
    if (nvars <= 3) {
        static const char* letters[] = {"x", "y", "z"};
        std::vector<std::string> names;
        for (std::size_t i = 0; i < nvars; ++i) names.emplace_back(letters[i]);
        return names;
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

Ring::Ring(std::uint64_t p, std::vector<std::string> names, std::optional<Exp> trunc)
    : p_(p), names_(std::move(names)), trunc_(trunc) {}

RingPtr Ring::make(const Prime& p, std::size_t nvars) {
    return make(p, default_var_names(nvars));
}

RingPtr Ring::make(const Prime& p, std::vector<std::string> var_names) {
    if (var_names.empty()) throw domain_error("a ring needs at least one variable");
    if (p.value() >= (std::uint64_t(1) << 31)) throw domain_error("characteristic too large");
    return RingPtr(new Ring(p.value(), std::move(var_names), std::nullopt));
}

RingPtr Ring::truncated(Exp bound) const {
    if (bound == 0) throw domain_error("truncation bound must be positive");
    return RingPtr(new Ring(p_, names_, bound));
}

RingPtr Ring::exact() const {
    return RingPtr(new Ring(p_, names_, std::nullopt));
}

RingPtr Ring::adjoin(const std::string& preferred_name) const {
    std::vector<std::string> names = names_;
    std::string chosen = preferred_name;
    if (std::find(names.begin(), names.end(), chosen) != names.end()) {
        chosen = "x" + std::to_string(names.size() + 1);
    }
    names.push_back(chosen);
    return RingPtr(new Ring(p_, std::move(names), trunc_));
}

std::optional<std::size_t> Ring::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    // x1..xn aliases are always accepted.
    if (name.size() >= 2 && name[0] == 'x') {
        bool digits = std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; });
        if (digits) {
            std::size_t k = std::stoul(name.substr(1));
            if (k >= 1 && k <= names_.size()) return k - 1;
        }
    }
    return std::nullopt;
}

bool Ring::compatible(const Ring& other) const {
    return p_ == other.p_ && names_ == other.names_ && trunc_ == other.trunc_;
}

std::string Ring::describe() const {
    std::ostringstream os;
    os << "F_" << p_ << "[";
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (i) os << ",";
        os << names_[i];
    }
    os << "]";
    if (trunc_) os << " mod deg>=" << *trunc_;
    return os.str();
}

} // namespace ffrt
