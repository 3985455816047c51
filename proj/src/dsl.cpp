#include "sprime/dsl.hpp"

#include "sprime/error.hpp"
#include "sprime/finite_module.hpp"
#include "sprime/trivial_extension.hpp"

#include <cctype>
#include <charconv>

namespace sprime {

namespace {

[[noreturn]] void fail(ErrorKind kind, std::size_t pos, const std::string& what) {
    throw Error(kind, "position " + std::to_string(pos) + ": " + what);
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingExpr ring() {
        auto expr = ring_term();
        while (peek_product()) {
            ++pos_;
            auto rhs = ring_term();
            RingExpr prod;
            prod.kind = RingExpr::Kind::product;
            prod.position = expr.position;
            prod.left = std::make_shared<const RingExpr>(std::move(expr));
            prod.right = std::make_shared<const RingExpr>(std::move(rhs));
            expr = std::move(prod);
        }
        return expr;
    }

    void finish() {
        skip_ws();
        if (pos_ != text_.size()) fail(ErrorKind::syntax_error, pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    }

    // Flattened integer list of one element literal.
    void element(std::vector<Coord>& out) {
        skip_ws();
        if (accept('(')) {
            element(out);
            while (accept(',')) element(out);
            expect(')');
            return;
        }
        out.push_back(integer(true));
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }

    std::size_t pos() const { return pos_; }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (!accept(c)) {
            auto got = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : std::string("end of input");
            fail(ErrorKind::syntax_error, pos_, "expected '" + std::string(1, c) + "', got " + got);
        }
    }

    bool peek_product() {
        skip_ws();
        return pos_ < text_.size() && (text_[pos_] == 'x' || text_[pos_] == 'X');
    }

    Coord integer(bool allow_sign) {
        skip_ws();
        auto start = pos_;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        auto digits = text_.substr(start, pos_ - start);
        if (!digits.empty() && digits[0] == '+') digits.remove_prefix(1);
        Coord value = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
            if (ec == std::errc::result_out_of_range) fail(ErrorKind::syntax_error, start, "integer out of range");
            fail(ErrorKind::syntax_error, start, "expected an integer");
        }
        return value;
    }

    bool keyword(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) return false;
        pos_ += word.size();
        return true;
    }

    RingExpr ring_term() {
        skip_ws();
        RingExpr expr;
        expr.position = pos_;
        if (keyword("TE")) {
            expect('(');
            auto base = ring();
            expect(',');
            expr.kind = RingExpr::Kind::trivial_extension;
            expr.left = std::make_shared<const RingExpr>(std::move(base));
            module(expr.module_factors);
            expect(')');
            return expr;
        }
        if (accept('(')) {
            expr = ring();
            expect(')');
            return expr;
        }
        if (keyword("Z")) {
            if (accept('/')) {
                expr.kind = RingExpr::Kind::residue;
                expr.n = integer(false);
            } else {
                expr.kind = RingExpr::Kind::integers;
            }
            return expr;
        }
        fail(ErrorKind::syntax_error, pos_, "expected a ring (Z, Z/n, TE(...) or a parenthesized ring)");
    }

    void module(std::vector<Coord>& factors) {
        module_term(factors);
        while (peek_product()) {
            ++pos_;
            module_term(factors);
        }
    }

    void module_term(std::vector<Coord>& factors) {
        if (accept('(')) {
            module(factors);
            expect(')');
            return;
        }
        if (!keyword("Z")) fail(ErrorKind::syntax_error, pos_, "expected a module factor Z/d");
        if (!accept('/')) fail(ErrorKind::semantic_error, pos_, "modules must be finite (Z/d factors only)");
        factors.push_back(integer(false));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void validate(const RingExpr& e) {
    switch (e.kind) {
        case RingExpr::Kind::integers:
            return;
        case RingExpr::Kind::residue:
            if (e.n < 2) fail(ErrorKind::semantic_error, e.position, "Z/" + std::to_string(e.n) + " is not allowed (n >= 2)");
            return;
        case RingExpr::Kind::product:
            validate(*e.left);
            validate(*e.right);
            if (e.left->kind == RingExpr::Kind::integers || e.right->kind == RingExpr::Kind::integers) {
                fail(ErrorKind::semantic_error, e.position, "products with Z are not supported");
            }
            return;
        case RingExpr::Kind::trivial_extension: {
            validate(*e.left);
            const auto& base = *e.left;
            if (base.kind != RingExpr::Kind::integers && base.kind != RingExpr::Kind::residue) {
                fail(ErrorKind::semantic_error, base.position, "TE base must be Z or Z/n");
            }
            for (auto d : e.module_factors) {
                if (d < 1) fail(ErrorKind::semantic_error, e.position, "module factor Z/" + std::to_string(d) + " is invalid");
                if (base.kind == RingExpr::Kind::residue && base.n % d != 0) {
                    fail(ErrorKind::semantic_error, e.position,
                         "Z/" + std::to_string(d) + " is not a module over Z/" + std::to_string(base.n));
                }
            }
            return;
        }
    }
}

}  // namespace

std::string RingExpr::to_string() const {
    switch (kind) {
        case Kind::integers: return "Z";
        case Kind::residue: return "Z/" + std::to_string(n);
        case Kind::product: {
            auto r = right->to_string();
            if (right->kind == Kind::product) r = "(" + r + ")";
            return left->to_string() + " x " + r;
        }
        case Kind::trivial_extension: {
            std::string m;
            for (std::size_t k = 0; k < module_factors.size(); ++k) {
                if (k) m += " x ";
                m += "Z/" + std::to_string(module_factors[k]);
            }
            return "TE(" + left->to_string() + ", " + m + ")";
        }
    }
    return "?";
}

RingExpr parse_ring_expr(std::string_view text) {
    Parser p(text);
    auto expr = p.ring();
    p.finish();
    validate(expr);
    return expr;
}

RingDescriptor elaborate(const RingExpr& expr, std::size_t cap) {
    switch (expr.kind) {
        case RingExpr::Kind::integers: return make_integer_ring();
        case RingExpr::Kind::residue: return make_residue_ring(expr.n, cap);
        case RingExpr::Kind::product: return make_product_ring(elaborate(*expr.left, cap), elaborate(*expr.right, cap), cap);
        case RingExpr::Kind::trivial_extension: {
            auto base = elaborate(*expr.left, cap);
            return make_trivial_extension(base, make_module(base, expr.module_factors), cap);
        }
    }
    throw Error(ErrorKind::internal_error, "unknown ring expression");
}

RingDescriptor parse_ring(std::string_view text, std::size_t cap) { return elaborate(parse_ring_expr(text), cap); }

std::vector<RingElement> parse_elements(const RingDescriptor& ring, std::string_view text) {
    Parser p(text);
    std::vector<RingElement> out;
    if (p.at_end()) return out;
    while (true) {
        auto start = p.pos();
        std::vector<Coord> coords;
        p.element(coords);
        if (coords.size() != ring.arity()) {
            fail(ErrorKind::semantic_error, start,
                 "element has " + std::to_string(coords.size()) + " coordinates, " + ring.to_string() +
                     " expects " + std::to_string(ring.arity()));
        }
        out.push_back(ring.normalize(std::move(coords)));
        if (!p.accept(',') && !p.accept(';')) break;
    }
    p.finish();
    return out;
}

RingElement parse_element(const RingDescriptor& ring, std::string_view text) {
    auto elems = parse_elements(ring, text);
    if (elems.size() != 1) fail(ErrorKind::syntax_error, 0, "expected exactly one element");
    return elems.front();
}

}  // namespace sprime
