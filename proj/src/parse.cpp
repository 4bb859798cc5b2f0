#include "flows/parse.hpp"

#include <cctype>
#include <sstream>

#include "flows/errors.hpp"

namespace flows {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RF parse() {
        RF v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        std::ostringstream os;
        os << "parse error at position " << pos_ << ": " << what;
        throw parse_error(os.str());
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RF expr() {
        RF v = term();
        while (true) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    RF term() {
        RF v = factor();
        while (true) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                RF d = factor();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RF factor() {
        bool neg = false;
        while (true) {
            if (eat('-'))
                neg = !neg;
            else if (eat('+'))
                ;
            else
                break;
        }
        RF v = power();
        return neg ? -v : v;
    }

    RF power() {
        RF base = atom();
        if (eat('^')) {
            long e = integer();
            if (e < 0 && base.is_zero()) fail("zero to a negative power");
            base = base.pow(e);
        }
        return base;
    }

    long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer exponent");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) fail("exponent too large");
            ++pos_;
        }
        return neg ? -v : v;
    }

    RF atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RF v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'x') {
            ++pos_;
            return RF::x();
        }
        if (c == 'y') {
            ++pos_;
            return RF::y();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits.push_back(s_[pos_++]);
            return RF(Rat::from_string(digits));
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

void print_term(std::ostream& os, const Rat& c, const std::string& mono, bool first) {
    Rat a = c.abs();
    if (first) {
        if (c.sign() < 0) os << "-";
    } else {
        os << (c.sign() < 0 ? " - " : " + ");
    }
    if (mono.empty()) {
        os << a.str();
    } else if (a.is_one()) {
        os << mono;
    } else {
        os << a.str() << "*" << mono;
    }
}

std::string mono_str(int dx, int dy) {
    std::ostringstream os;
    bool need_star = false;
    if (dx > 0) {
        os << "x";
        if (dx > 1) os << "^" << dx;
        need_star = true;
    }
    if (dy > 0) {
        if (need_star) os << "*";
        os << "y";
        if (dy > 1) os << "^" << dy;
    }
    return os.str();
}

} // namespace

RF parse_rf(const std::string& text) { return Parser(text).parse(); }

Poly parse_poly(const std::string& text) {
    RF f = parse_rf(text);
    if (!f.is_polynomial()) throw parse_error("expected a polynomial: " + text);
    return f.num().scaled(f.den().constant_value().inverse());
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        print_term(os, c, mono_str(m.dx, m.dy), first);
        first = false;
    }
    return os.str();
}

std::string to_string(const RF& f) {
    if (f.is_polynomial()) return to_string(f.num().scaled(f.den().constant_value().inverse()));
    std::ostringstream os;
    os << "(" << to_string(f.num()) << ")/(" << to_string(f.den()) << ")";
    return os.str();
}

std::string to_string(const Poly1& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat c = p.coeff(i);
        if (c.is_zero()) continue;
        std::ostringstream mono;
        if (i > 0) {
            mono << var;
            if (i > 1) mono << "^" << i;
        }
        print_term(os, c, mono.str(), first);
        first = false;
    }
    return os.str();
}

std::string to_string(const RF1& f, const std::string& var) {
    if (f.is_polynomial()) {
        Rat s = f.den().coeff(0);
        return to_string(f.num().scaled(s.inverse()), var);
    }
    std::ostringstream os;
    os << "(" << to_string(f.num(), var) << ")/(" << to_string(f.den(), var) << ")";
    return os.str();
}

} // namespace flows
