#ifndef FFRT_RING_HPP
#define FFRT_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffrt/prime.hpp"

namespace ffrt {

using Exp = std::uint32_t;

/// Exponent vector; its length is the variable count of the ambient ring.
using Monomial = std::vector<Exp>;

Exp total_degree(const Monomial& m);

/// Graded lexicographic comparison: total degree first, then the exponent
/// vector left to right. Returns <0, 0, >0.
int grlex_cmp(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_cmp(a, b) < 0;
    }
};

/// Divisibility as monomials: every exponent of a is <= the one of b.
bool divides(const Monomial& a, const Monomial& b);

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Ambient ring descriptor: F_p coefficients, a fixed list of variable names,
/// and an optional total-degree truncation bound for local-ring work.
///
/// Rings compare structurally, so two independently constructed descriptors
/// with the same data are compatible.
class Ring : public std::enable_shared_from_this<Ring> {
  public:
    static RingPtr make(const Prime& p, std::size_t nvars);
    static RingPtr make(const Prime& p, std::vector<std::string> var_names);

    std::uint64_t p() const { return p_; }
    std::size_t var_count() const { return names_.size(); }
    const std::vector<std::string>& var_names() const { return names_; }
    const std::string& var_name(std::size_t i) const { return names_.at(i); }
    std::optional<Exp> truncation() const { return trunc_; }

    /// Same ring with terms of total degree >= bound discarded.
    RingPtr truncated(Exp bound) const;
    /// Same ring with truncation removed.
    RingPtr exact() const;
    /// Ring with one extra variable appended. If the preferred name is taken,
    /// x{n+1} is used instead.
    RingPtr adjoin(const std::string& preferred_name) const;

    /// Index of a variable name, including the x1..xn aliases.
    std::optional<std::size_t> var_index(const std::string& name) const;

    bool compatible(const Ring& other) const;
    std::string describe() const;

  private:
    Ring(std::uint64_t p, std::vector<std::string> names, std::optional<Exp> trunc);

    std::uint64_t p_;
    std::vector<std::string> names_;
    std::optional<Exp> trunc_;
};

/// Default variable names: x, y, z for up to three variables, else x1..xn.
std::vector<std::string> default_var_names(std::size_t nvars);

} // namespace ffrt

#endif
