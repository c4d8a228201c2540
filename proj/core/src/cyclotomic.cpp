#include "funcwalk/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace funcwalk {

ModulusMismatch::ModulusMismatch(unsigned a, unsigned b)
    : std::runtime_error("cyclotomic modulus mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b)) {}

IntPolynomial::IntPolynomial(std::vector<Int> coefficients) : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

IntPolynomial IntPolynomial::monomial(unsigned degree, Int coefficient) {
    if (coefficient == 0) {
        return {};
    }
    std::vector<Int> c(degree + 1);
    c[degree] = std::move(coefficient);
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::coefficient(unsigned k) const {
    return k < coefficients_.size() ? coefficients_[k] : Int(0);
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    std::vector<Int> out(std::max(coefficients_.size(), other.coefficients_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = coefficient(i) + other.coefficient(i);
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
    std::vector<Int> out(std::max(coefficients_.size(), other.coefficients_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = coefficient(i) - other.coefficient(i);
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
    if (is_zero() || other.is_zero()) {
        return {};
    }
    std::vector<Int> out(coefficients_.size() + other.coefficients_.size() - 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        if (coefficients_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
            out[i + j] += coefficients_[i] * other.coefficients_[j];
        }
    }
    return IntPolynomial(std::move(out));
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod(const IntPolynomial& dividend,
                                                              const IntPolynomial& monic_divisor) {
    if (monic_divisor.is_zero() || monic_divisor.coefficients_.back() != 1) {
        throw std::invalid_argument("divmod requires a monic divisor");
    }
    const int d = monic_divisor.degree();
    std::vector<Int> rem = dividend.coefficients_;
    if (dividend.degree() < d) {
        return {IntPolynomial{}, dividend};
    }
    std::vector<Int> quot(dividend.degree() - d + 1);
    for (int i = dividend.degree(); i >= d; --i) {
        Int c = rem[i];
        if (c == 0) {
            continue;
        }
        quot[i - d] = c;
        for (int j = 0; j <= d; ++j) {
            rem[i - d + j] -= c * monic_divisor.coefficients_[j];
        }
    }
    rem.resize(d);
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coefficients_[k];
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += c > 0 ? " + " : " - ";
        } else if (c < 0) {
            out += "-";
        }
        const Int a = abs(c);
        if (k == 0 || a != 1) {
            out += a.str();
        }
        if (k > 0) {
            out += "x";
            if (k > 1) {
                out += "^" + std::to_string(k);
            }
        }
    }
    return out;
}

namespace {

constexpr unsigned kMaxModulus = 10000;

std::vector<unsigned> proper_divisors(unsigned m) {
    std::vector<unsigned> out;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
        }
    }
    return out;
}

std::mutex g_phi_mutex;
std::map<unsigned, std::shared_ptr<const IntPolynomial>> g_phi_cache;

std::shared_ptr<const IntPolynomial> phi_cached(unsigned m) {
    std::lock_guard lock(g_phi_mutex);
    if (auto it = g_phi_cache.find(m); it != g_phi_cache.end()) {
        return it->second;
    }
    // fill all divisors, smallest upward
    for (unsigned d = 1; d <= m; ++d) {
        if (m % d != 0 || g_phi_cache.contains(d)) {
            continue;
        }
        // x^d - 1
        std::vector<Int> c(d + 1);
        c[0] = -1;
        c[d] = 1;
        IntPolynomial dividend{std::move(c)};
        IntPolynomial divisor = IntPolynomial::monomial(0, 1);
        for (unsigned p : proper_divisors(d)) {
            divisor = divisor * *g_phi_cache.at(p);
        }
        auto [quot, rem] = IntPolynomial::divmod(dividend, divisor);
        if (!rem.is_zero()) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
        g_phi_cache.emplace(d, std::make_shared<const IntPolynomial>(std::move(quot)));
    }
    return g_phi_cache.at(m);
}

// Remainder of a rational coefficient vector modulo Phi_m (monic), padded to
// length m. This is the canonical form of CycloElem.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> coeffs, unsigned m) {
    const std::shared_ptr<const IntPolynomial> phi_ptr = phi_cached(m);
    const IntPolynomial& phi = *phi_ptr;
    const int d = phi.degree();
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= d; --i) {
        if (coeffs[i] == 0) {
            continue;
        }
        const Rational c = coeffs[i];
        coeffs[i] = 0;
        for (int j = 0; j < d; ++j) {
            coeffs[i - d + j] -= c * phi.coefficients()[j];
        }
    }
    coeffs.resize(m);
    return coeffs;
}

void check_modulus(unsigned m) {
    if (m < 1 || m > kMaxModulus) {
        throw std::domain_error("cyclotomic modulus must be in [1, " + std::to_string(kMaxModulus) +
                                "]");
    }
}

// Cached canonical powers zeta_m^0 .. zeta_m^(m-1); only kept for small m.
constexpr unsigned kPowerTableLimit = 512;
std::mutex g_power_mutex;
std::map<unsigned, std::vector<std::vector<Rational>>> g_power_cache;

std::vector<Rational> power_coefficients(unsigned k, unsigned m) {
    std::vector<Rational> mono(k + 1);
    mono[k] = 1;
    return reduce_mod_phi(std::move(mono), m);
}

}  // namespace

IntPolynomial cyclotomic_poly(unsigned m) {
    check_modulus(m);
    return *phi_cached(m);
}

CycloElem::CycloElem(unsigned m, std::vector<Rational> canonical)
    : modulus_(m), coefficients_(std::move(canonical)) {}

CycloElem CycloElem::zero(unsigned m) {
    check_modulus(m);
    return CycloElem(m, std::vector<Rational>(m));
}

CycloElem CycloElem::one(unsigned m) {
    return zeta_pow(0, m);
}

CycloElem CycloElem::from_coefficients(unsigned m, std::vector<Rational> coefficients) {
    check_modulus(m);
    return CycloElem(m, reduce_mod_phi(std::move(coefficients), m));
}

CycloElem zeta_pow(const Int& k, unsigned m) {
    check_modulus(m);
    const unsigned kk = euclid_mod(k, m).convert_to<unsigned>();
    if (m > kPowerTableLimit) {
        return CycloElem(m, power_coefficients(kk, m));
    }
    std::lock_guard lock(g_power_mutex);
    auto& table = g_power_cache[m];
    if (table.empty()) {
        table.reserve(m);
        for (unsigned i = 0; i < m; ++i) {
            table.push_back(power_coefficients(i, m));
        }
    }
    return CycloElem(m, table[kk]);
}

CycloElem cyclo_add(const CycloElem& a, const CycloElem& b) {
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatch(a.modulus(), b.modulus());
    }
    std::vector<Rational> out = a.coefficients_;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += b.coefficients_[i];
    }
    return CycloElem(a.modulus(), std::move(out));
}

CycloElem cyclo_sub(const CycloElem& a, const CycloElem& b) {
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatch(a.modulus(), b.modulus());
    }
    std::vector<Rational> out = a.coefficients_;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] -= b.coefficients_[i];
    }
    return CycloElem(a.modulus(), std::move(out));
}

CycloElem cyclo_scale(const CycloElem& a, const Rational& factor) {
    std::vector<Rational> out = a.coefficients_;
    for (auto& c : out) {
        c *= factor;
    }
    return CycloElem(a.modulus(), std::move(out));
}

bool cyclo_is_zero(const CycloElem& a) {
    for (const auto& c : a.coefficients()) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool cyclo_equal(const CycloElem& a, const CycloElem& b) {
    if (a.modulus() != b.modulus()) {
        throw ModulusMismatch(a.modulus(), b.modulus());
    }
    return a.coefficients() == b.coefficients();
}

CycloElem embed(const CycloElem& a, unsigned target_modulus) {
    check_modulus(target_modulus);
    const unsigned m = a.modulus();
    if (target_modulus % m != 0) {
        throw std::domain_error("embed: target modulus " + std::to_string(target_modulus) +
                                " is not a multiple of " + std::to_string(m));
    }
    const unsigned stride = target_modulus / m;
    std::vector<Rational> out(target_modulus);
    for (unsigned k = 0; k < m; ++k) {
        out[k * stride] = a.coefficients()[k];  // zeta_m^k == zeta_L^(k*L/m)
    }
    return CycloElem::from_coefficients(target_modulus, std::move(out));
}

Vec2 cyclo_to_xy(const CycloElem& a) {
    const double m = static_cast<double>(a.modulus());
    double x = 0.0;
    double y = 0.0;
    for (unsigned k = 0; k < a.modulus(); ++k) {
        const Rational& c = a.coefficients()[k];
        if (c == 0) {
            continue;
        }
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / m;
        const double weight = to_double(c);
        x += weight * std::cos(angle);
        y += weight * std::sin(angle);
    }
    return {x, y};
}

}  // namespace funcwalk
