#include "rank1det/rational.hpp"

#include <cctype>

namespace rank1det {

namespace {

bool valid_integer_token(std::string_view t) {
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer_token(num))
        throw std::invalid_argument("Rational: malformed numerator in '" + std::string(text) + "'");
    mpq_class v;
    if (slash == std::string_view::npos) {
        v = mpq_class(mpz_class(std::string(num), 10));
    } else {
        std::string_view den = text.substr(slash + 1);
        if (den.empty() || den.front() == '+' || den.front() == '-' || !valid_integer_token(den))
            throw std::invalid_argument("Rational: malformed denominator in '" + std::string(text) + "'");
        mpz_class d(std::string(den), 10);
        if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator in '" + std::string(text) + "'");
        v = mpq_class(mpz_class(std::string(num), 10), d);
        v.canonicalize();
    }
    Rational r;
    r.v_ = std::move(v);
    return r;
}

Rational Rational::pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base.is_zero() && exp < 0) throw std::domain_error("Rational: 0 raised to a negative power");
    const unsigned long k = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), base.v_.get_den().get_mpz_t(), k);
    Rational r;
    r.v_ = exp > 0 ? mpq_class(num, den) : mpq_class(den, num);
    r.v_.canonicalize();
    return r;
}

}  // namespace rank1det
