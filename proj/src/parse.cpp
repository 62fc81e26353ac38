#include "rittkit/parse.hpp"

#include <cctype>

namespace rittkit {

namespace {

class Parser {
  public:
    Parser(const std::string& s, const FieldConfig& cfg) : s_(s), cfg_(cfg) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    const std::string& s_;
    FieldConfig cfg_;
    size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (c == '(' || c == 'x' || c == 's') {
                // implicit product like 2x is not in the grammar; require '*'
                throw ParseError("expected operator", pos_);
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            size_t start = pos_;
            unsigned long e = 0;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected exponent", pos_);
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + (s_[pos_] - '0');
                if (e > 100000) throw ParseError("exponent too large", start);
                ++pos_;
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return p;
        }
        if (c == 'x') {
            ++pos_;
            return Poly::x();
        }
        if (c == 's') {
            ++pos_;
            if (cfg_.d == 1) throw ParseError("'s' requires a field with d != 1", pos_ - 1);
            return Poly(FieldElem(Rat(0), Rat(1), cfg_.d));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("expected denominator", pos_);
                Int den = integer();
                if (den == 0) throw ParseError("zero denominator", pos_);
                Rat q(num, den);
                q.canonicalize();
                return Poly(FieldElem(q));
            }
            return Poly(FieldElem(Rat(num)));
        }
        throw ParseError("expected term", pos_);
    }

    Int integer() {
        skip_ws();
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            digits += s_[pos_];
            ++pos_;
        }
        return Int(digits);
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const FieldConfig& cfg) {
    return Parser(text, cfg).run();
}

std::string print_poly(const Poly& f) { return f.str(); }

}  // namespace rittkit
