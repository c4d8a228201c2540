#include "funcwalk/numeric.hpp"

#include <stdexcept>

namespace funcwalk {

Int euclid_mod(const Int& value, const Int& m) {
    if (m <= 0) {
        throw std::domain_error("euclid_mod: modulus must be positive");
    }
    Int r = value % m;
    if (r < 0) {
        r += m;
    }
    return r;
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

std::string rational_string(const Rational& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

}  // namespace funcwalk
