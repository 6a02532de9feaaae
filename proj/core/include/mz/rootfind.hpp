#pragma once

#include <optional>
#include <vector>

#include "mz/polynomial.hpp"

namespace mz {

struct ComplexRoot {
    Complex value;
    /// A-posteriori inclusion radius; 0 for exact roots.
    double radius = 0.0;
    /// Set when the root is known exactly (rational pre-pass).
    std::optional<Rational> exact;
    int multiplicity = 1;
};

struct RootSet {
    std::vector<ComplexRoot> roots;

    int total_multiplicity() const {
        int m = 0;
        for (const auto& r : roots) m += r.multiplicity;
        return m;
    }
};

/// Critical modulus band between |q|^{n-1} and |q|^n. For |q| > 1 the inner
/// boundary |q|^{n-1} is open and the outer |q|^n closed; for |q| < 1 the
/// band is [|q|^n, |q|^{n-1}) instead.
struct Annulus {
    Rational q;
    int n = 1;
    Rational inner_exact;  // squared comparisons against these stay rational
    Rational outer_exact;
    double inner = 0.0;
    double outer = 0.0;
    bool inner_open = true;
    bool outer_open = false;
};

enum class Membership { Inside, Outside, BoundaryUndecided };

/// All complex roots of p with inclusion radii. Exact rational roots are
/// extracted first; the deflated part goes through Aberth-style simultaneous
/// iteration. Throws ZeroPolynomial, NoConvergence.
RootSet find_roots(const Polynomial& p, double target_radius = 1e-9);

/// Throws InvalidRatio when q is 0 or +-1.
Annulus annulus_for(const Rational& q, int n);

/// Exact roots are compared exactly against the rational boundaries;
/// approximate roots are classified only when the whole inclusion disk lies
/// strictly on one side, else BoundaryUndecided.
Membership annulus_membership(const ComplexRoot& root, const Annulus& ann, double tol = 1e-9);

const char* to_string(Membership m);

} // namespace mz
