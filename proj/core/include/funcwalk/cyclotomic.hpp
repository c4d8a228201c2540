#pragma once

#include "funcwalk/numeric.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace funcwalk {

class ModulusMismatch : public std::runtime_error {
public:
    ModulusMismatch(unsigned a, unsigned b);
};

/// Dense integer polynomial, coefficients lowest degree first. Normal form
/// keeps the leading coefficient nonzero; the zero polynomial is empty.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coefficients);

    static IntPolynomial monomial(unsigned degree, Int coefficient = 1);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    bool is_zero() const { return coefficients_.empty(); }
    const std::vector<Int>& coefficients() const { return coefficients_; }
    Int coefficient(unsigned k) const;

    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial operator-(const IntPolynomial& other) const;
    IntPolynomial operator*(const IntPolynomial& other) const;
    bool operator==(const IntPolynomial& other) const = default;

    /// Long division by a monic divisor; exact in the integers.
    static std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial& dividend,
                                                          const IntPolynomial& monic_divisor);

    std::string to_string() const;

private:
    std::vector<Int> coefficients_;
};

/// The m-th cyclotomic polynomial, computed by exact division of x^m - 1 by
/// the product of all lower-order cyclotomic polynomials over the proper
/// divisors of m. Results are memoized; supported for 1 <= m <= 10000.
IntPolynomial cyclotomic_poly(unsigned m);

/// Exact element of Q(zeta_m), zeta_m = e^(2*pi*i/m). Stored as a length-m
/// rational coefficient vector over 1, zeta, ..., zeta^(m-1) and kept in
/// canonical form: the remainder modulo Phi_m, so all coefficients at
/// degree >= phi(m) are zero and equality/zero tests are coefficientwise.
class CycloElem {
public:
    static CycloElem zero(unsigned m);
    static CycloElem one(unsigned m);
    /// Canonicalizes an arbitrary coefficient vector (any length).
    static CycloElem from_coefficients(unsigned m, std::vector<Rational> coefficients);

    unsigned modulus() const { return modulus_; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

private:
    CycloElem(unsigned m, std::vector<Rational> canonical);
    unsigned modulus_;
    std::vector<Rational> coefficients_;

    friend CycloElem zeta_pow(const Int& k, unsigned m);
    friend CycloElem cyclo_add(const CycloElem& a, const CycloElem& b);
    friend CycloElem cyclo_sub(const CycloElem& a, const CycloElem& b);
    friend CycloElem cyclo_scale(const CycloElem& a, const Rational& factor);
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// zeta_m^k, with k reduced Euclidean-mod m.
CycloElem zeta_pow(const Int& k, unsigned m);

CycloElem cyclo_add(const CycloElem& a, const CycloElem& b);
CycloElem cyclo_sub(const CycloElem& a, const CycloElem& b);
CycloElem cyclo_scale(const CycloElem& a, const Rational& factor);

/// Exact: true iff the element is 0 as a complex number.
bool cyclo_is_zero(const CycloElem& a);
bool cyclo_equal(const CycloElem& a, const CycloElem& b);

/// Same complex value seen in Q(zeta_L); the modulus of a must divide L.
CycloElem embed(const CycloElem& a, unsigned target_modulus);

/// Floating-point real/imaginary parts.
Vec2 cyclo_to_xy(const CycloElem& a);

}  // namespace funcwalk
