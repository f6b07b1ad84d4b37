#include "fanzoo/dsl.hpp"

#include <cctype>
#include <limits>
#include <utility>

#include "fanzoo/errors.hpp"

namespace fanzoo::dsl {

ExprPtr nat(std::uint64_t value) {
    return std::make_shared<Expr>(Expr{Expr::Kind::nat, value, nullptr, nullptr, nullptr});
}

ExprPtr bit(ExprPtr index) {
    return std::make_shared<Expr>(Expr{Expr::Kind::bit, 0, std::move(index), nullptr, nullptr});
}

namespace {
ExprPtr binary(Expr::Kind kind, ExprPtr a, ExprPtr b) {
    return std::make_shared<Expr>(Expr{kind, 0, std::move(a), std::move(b), nullptr});
}
}

ExprPtr add(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::add, std::move(a), std::move(b)); }
ExprPtr monus(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::monus, std::move(a), std::move(b)); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::mul, std::move(a), std::move(b)); }
ExprPtr max(ExprPtr a, ExprPtr b) { return binary(Expr::Kind::max, std::move(a), std::move(b)); }

ExprPtr if_zero(ExprPtr cond, ExprPtr then_e, ExprPtr else_e) {
    return std::make_shared<Expr>(
        Expr{Expr::Kind::if_zero, 0, std::move(cond), std::move(then_e), std::move(else_e)});
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr run() {
        ExprPtr e = expr();
        skip_space();
        if (pos_ < src_.size()) {
            fail("unexpected trailing input");
        }
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    std::uint64_t line_ = 1;
    std::uint64_t col_ = 1;
    int depth_ = 0;
    static constexpr int max_depth = 4000;

    [[noreturn]] void fail(const std::string& what) const {
        throw usage_error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + what);
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            advance();
        }
    }

    bool peek_is(char c) {
        skip_space();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_is(c)) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            fail(std::string("expected '") + c + "'");
        }
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (accept('+')) {
                e = add(std::move(e), term());
            } else if (accept('-')) {
                e = monus(std::move(e), term());
            } else {
                return e;
            }
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        while (accept('*')) {
            e = mul(std::move(e), factor());
        }
        return e;
    }

    ExprPtr factor() {
        skip_space();
        if (pos_ >= src_.size()) {
            fail("expected an expression");
        }
        if (++depth_ > max_depth) {
            fail("expression nested too deeply");
        }
        struct Guard {
            int& d;
            ~Guard() { --d; }
        } guard{depth_};
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return nat(number());
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word = identifier();
            if (word == "f") {
                expect('[');
                ExprPtr idx = expr();
                expect(']');
                return bit(std::move(idx));
            }
            if (word == "max") {
                expect('(');
                ExprPtr a = expr();
                expect(',');
                ExprPtr b = expr();
                expect(')');
                return max(std::move(a), std::move(b));
            }
            if (word == "if0") {
                expect('(');
                ExprPtr cond = expr();
                expect(',');
                ExprPtr then_e = expr();
                expect(',');
                ExprPtr else_e = expr();
                expect(')');
                return if_zero(std::move(cond), std::move(then_e), std::move(else_e));
            }
            fail("unknown name '" + word + "'");
        }
        if (c == '(') {
            advance();
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::uint64_t number() {
        std::uint64_t value = 0;
        bool any = false;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            std::uint64_t digit = static_cast<std::uint64_t>(src_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
                fail("number literal does not fit in 64 bits");
            }
            value = value * 10 + digit;
            advance();
            any = true;
        }
        if (!any) {
            fail("expected a number");
        }
        return value;
    }

    std::string identifier() {
        std::string word;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])))) {
            word.push_back(src_[pos_]);
            advance();
        }
        return word;
    }
};

}

ExprPtr parse(std::string_view source) {
    return Parser(source).run();
}

namespace {

// Precedence: additive 1, multiplicative 2, atoms 3. Left-associative chains
// keep the left operand at the same level; the right operand needs to bind
// tighter or be parenthesized.
void print_prec(const Expr& e, int parent, bool right_operand, std::string& out) {
    auto wrap = [&](int mine, auto&& body) {
        bool parens = mine < parent || (mine == parent && right_operand);
        if (parens) out.push_back('(');
        body();
        if (parens) out.push_back(')');
    };
    switch (e.kind) {
        case Expr::Kind::nat:
            out += std::to_string(e.value);
            break;
        case Expr::Kind::bit:
            out += "f[";
            print_prec(*e.a, 0, false, out);
            out += "]";
            break;
        case Expr::Kind::add:
        case Expr::Kind::monus:
            wrap(1, [&] {
                print_prec(*e.a, 1, false, out);
                out += e.kind == Expr::Kind::add ? " + " : " - ";
                print_prec(*e.b, 1, true, out);
            });
            break;
        case Expr::Kind::mul:
            wrap(2, [&] {
                print_prec(*e.a, 2, false, out);
                out += " * ";
                print_prec(*e.b, 2, true, out);
            });
            break;
        case Expr::Kind::max:
            out += "max(";
            print_prec(*e.a, 0, false, out);
            out += ", ";
            print_prec(*e.b, 0, false, out);
            out += ")";
            break;
        case Expr::Kind::if_zero:
            out += "if0(";
            print_prec(*e.a, 0, false, out);
            out += ", ";
            print_prec(*e.b, 0, false, out);
            out += ", ";
            print_prec(*e.c, 0, false, out);
            out += ")";
            break;
    }
}

}

std::string print(const Expr& e) {
    std::string out;
    print_prec(e, 0, false, out);
    return out;
}

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Expr::Kind::nat:
            return a.value == b.value;
        case Expr::Kind::bit:
            return equal(*a.a, *b.a);
        case Expr::Kind::if_zero:
            return equal(*a.a, *b.a) && equal(*a.b, *b.b) && equal(*a.c, *b.c);
        default:
            return equal(*a.a, *b.a) && equal(*a.b, *b.b);
    }
}

namespace {

std::uint64_t eval(const Expr& e, TracedInput& f) {
    switch (e.kind) {
        case Expr::Kind::nat:
            return e.value;
        case Expr::Kind::bit:
            return static_cast<std::uint64_t>(f.at(eval(*e.a, f)));
        case Expr::Kind::add: {
            std::uint64_t a = eval(*e.a, f);
            std::uint64_t b = eval(*e.b, f);
            if (a > std::numeric_limits<std::uint64_t>::max() - b) {
                throw resource_limit_error("addition overflows 64 bits");
            }
            return a + b;
        }
        case Expr::Kind::monus: {
            std::uint64_t a = eval(*e.a, f);
            std::uint64_t b = eval(*e.b, f);
            return a > b ? a - b : 0;
        }
        case Expr::Kind::mul: {
            std::uint64_t a = eval(*e.a, f);
            std::uint64_t b = eval(*e.b, f);
            if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
                throw resource_limit_error("multiplication overflows 64 bits");
            }
            return a * b;
        }
        case Expr::Kind::max: {
            std::uint64_t a = eval(*e.a, f);
            std::uint64_t b = eval(*e.b, f);
            return a > b ? a : b;
        }
        case Expr::Kind::if_zero:
            return eval(*e.a, f) == 0 ? eval(*e.b, f) : eval(*e.c, f);
    }
    throw usage_error("unreachable expression kind");
}

}

Functional2 compile(const ExprPtr& e) {
    return Functional2("dsl(" + print(*e) + ")",
                       [e](TracedInput& f) { return eval(*e, f); });
}

}
