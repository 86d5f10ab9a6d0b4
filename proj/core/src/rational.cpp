#include "clusterkit/rational.hpp"

#include "clusterkit/errors.hpp"

#include <stdexcept>

namespace clusterkit {

Rational rational_from_strings(const std::string& num, const std::string& den) {
    mpz_class n, d;
    if (n.set_str(num, 10) != 0)
        throw std::invalid_argument("bad integer literal: '" + num + "'");
    if (d.set_str(den, 10) != 0)
        throw std::invalid_argument("bad integer literal: '" + den + "'");
    if (d == 0)
        throw divide_by_zero_error("rational with zero denominator: " + num + "/" + den);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return rational_from_strings(text, "1");
    return rational_from_strings(text.substr(0, slash), text.substr(slash + 1));
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0)
        return Rational(1);
    if (base == 0) {
        if (exp < 0)
            throw zero_to_negative_power_error("0 raised to negative power " + std::to_string(exp));
        return Rational(0);
    }
    const unsigned long mag = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), mag);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), mag);
    if (exp < 0)
        mpq_inv(out.get_mpq_t(), out.get_mpq_t());
    out.canonicalize();
    return out;
}

std::string rational_to_string(const Rational& value) {
    return value.get_str();
}

std::string numerator_string(const Rational& value) {
    return value.get_num().get_str();
}

std::string denominator_string(const Rational& value) {
    return value.get_den().get_str();
}

} // namespace clusterkit
