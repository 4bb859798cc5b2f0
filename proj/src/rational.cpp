#include "flows/rational.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace flows {

Rat Rat::from_string(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
    if (q.get_den() == 0) throw precondition_error("rational with zero denominator");
    q.canonicalize();
    return Rat(q);
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && is_zero()) throw precondition_error("zero to a negative power");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    mpq_class r(n, d); // canonical since base was canonical
    if (inv) r = mpq_class(1) / r;
    return Rat(r);
}

std::string Rat::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

} // namespace flows
