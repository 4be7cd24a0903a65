#include "ffrt/parse.hpp"

#include <cctype>
#include <cstdlib>

#include "ffrt/errors.hpp"

namespace ffrt {

namespace {

// Recursive-descent parser over: expr := term (('+'|'-') term)*
//                                term := factor ('*' factor)*
//                                factor := '-' factor | atom ['^' uint]
//                                atom := integer | identifier | '(' expr ')'
class Parser {
  public:
    Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Poly run() {
        Poly value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

  private:
    Poly expr() {
        Poly acc = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                acc = acc + term();
            } else if (peek() == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -factor();
        }
        Poly base = atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            return pow(base, integer("exponent"));
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = integer("integer literal");
            return Poly::constant(ring_, static_cast<std::int64_t>(v % ring_->p()));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name = text_.substr(start, pos_ - start);
            auto idx = ring_->var_index(name);
            if (!idx) fail("unknown variable '" + name + "'");
            return Poly::variable(ring_, *idx);
        }
        fail("expected a term");
        return Poly::zero(ring_); // unreachable
    }

    std::uint64_t integer(const std::string& what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected " + what);
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (std::uint64_t(1) << 40)) fail("integer literal too large");
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& message) const {
        throw usage_error("parse error at position " + std::to_string(pos_) + ": " + message);
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

std::vector<Monomial> parse_monomial_list(const std::string& text, const RingPtr& ring) {
    std::vector<Monomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        bool blank = piece.find_first_not_of(" \t") == std::string::npos;
        if (!blank) {
            Poly p = parse_poly(piece, ring);
            if (!p.is_monic_monomial()) {
                throw usage_error("expected a monomial with coefficient 1, got '" + piece + "'");
            }
            out.push_back(p.terms().front().mono);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw usage_error("empty monomial list");
    return out;
}

} // namespace ffrt
