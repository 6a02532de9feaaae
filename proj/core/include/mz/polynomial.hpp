#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mz/rational.hpp"

namespace mz {

/// Univariate polynomial over the rationals, coefficients stored in ascending
/// degree order. The zero polynomial has an empty coefficient list; otherwise
/// the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending_coeffs);

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial constant(const Rational& c);
    /// x^k with unit coefficient.
    static Polynomial monomial(int k, const Rational& c = 1);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^k (0 beyond the stored range).
    Rational coeff(int k) const;
    Rational leading() const;

    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& rhs) const = default;

private:
    std::vector<Rational> coeffs_;
};

/// Exact Horner evaluation.
Rational poly_eval(const Polynomial& p, const Rational& x);

/// Floating-point Horner evaluation; returns {p(z), p'(z)}.
std::pair<Complex, Complex> poly_eval_complex(const Polynomial& p, Complex z);

/// Synthetic division by (x - A): p = (x - A) * quotient + remainder.
/// Throws DegreeTooSmall when deg(p) < 1.
std::pair<Polynomial, Rational> poly_div_linear(const Polynomial& p, const Rational& a);

/// scale * prod (x - root_i), expanded exactly.
Polynomial poly_from_roots(const std::vector<Rational>& roots, const Rational& scale = 1);

/// First s power sums of the roots of p (with multiplicity), via Newton's
/// identities on the normalized coefficients. Throws ZeroPolynomial.
std::vector<Rational> power_sums(const Polynomial& p, int s);

struct RationalRootsResult {
    /// Exact rational roots with multiplicity.
    std::map<Rational, int> roots;
    /// The polynomial left after dividing out every rational linear factor;
    /// has no rational roots. p = prod (x - root)^mult * deflated exactly.
    Polynomial deflated;
};

/// Rational root theorem on the integer-scaled polynomial, trial synthetic
/// division, multiplicity by repeated deflation. Throws ZeroPolynomial.
RationalRootsResult rational_roots(const Polynomial& p);

} // namespace mz
