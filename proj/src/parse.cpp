#include "fano/parse.hpp"

#include <cctype>

namespace fano {

namespace {

class Parser {
  public:
    Parser(std::string_view text, const VarNames& vars) : s_(text), vars_(vars) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return p;
    }

  private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor() {
        skip_ws();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc += term();
            } else if (peek('-')) {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = unary();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = acc * unary();
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    MultiPoly unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        if (peek('+')) {
            ++pos_;
            return unary();
        }
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (peek('^')) {
            ++pos_;
            skip_ws();
            std::size_t start = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected exponent", pos_);
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
                if (e > kMaxParsedExponent) throw ParseError("exponent overflow (max " + std::to_string(kMaxParsedExponent) + ")", start);
            }
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Integer digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    MultiPoly atom() {
        skip_ws();
        const int n = vars_.size();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly inner = expr();
            if (!peek(')')) throw ParseError("expected ')'", pos_);
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = digits();
            Integer den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                std::size_t slash = pos_++;
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    throw ParseError("expected denominator", pos_);
                den = digits();
                if (den == 0) throw ParseError("zero denominator", slash);
            }
            Rational r(num, den);
            r.canonicalize();
            return MultiPoly::constant(n, r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int best = -1;
            std::size_t best_len = 0;
            for (int i = 0; i < n; ++i) {
                const std::string& name = vars_.names[static_cast<std::size_t>(i)];
                if (name.size() > best_len && s_.substr(pos_, name.size()) == name) {
                    best = i;
                    best_len = name.size();
                }
            }
            if (best < 0) {
                std::size_t end = pos_;
                while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
                throw ParseError("unknown variable '" + std::string(s_.substr(pos_, end - pos_)) + "'", pos_);
            }
            pos_ += best_len;
            return MultiPoly::variable(n, best);
        }
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }

    std::string_view s_;
    const VarNames& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarNames& vars) { return Parser(text, vars).parse(); }

}  // namespace fano
