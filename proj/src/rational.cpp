#include "ospq/rational.hpp"

#include <cctype>
#include <ostream>

namespace ospq {

std::string Rational::str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
}

Rational Rational::parse(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> Rational { throw parse_error(msg, i); };
    if (text.empty()) return fail("empty rational literal");
    std::string num, den;
    if (text[i] == '-' || text[i] == '+') num += text[i++];
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num += text[i++];
        ++digits;
    }
    if (digits == 0) return fail("expected digits");
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::size_t ddigits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            den += text[i++];
            ++ddigits;
        }
        if (ddigits == 0) return fail("expected denominator digits");
    }
    if (i != text.size()) return fail("trailing characters in rational literal");
    mpq_class q;
    if (den.empty()) {
        q = mpq_class(num);
    } else {
        if (mpz_class(den) == 0) throw division_by_zero();
        q = mpq_class(num + "/" + den);
    }
    return Rational(q);
}

std::string to_string(const Rational& q) { return q.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace ospq
