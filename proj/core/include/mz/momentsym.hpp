#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mz/classify.hpp"

namespace mz {

/// Interior point of an alternating interpolation level; `exact` is set when
/// the tie rule p'(c_j) = 0 fires in exact arithmetic.
struct AltPoint {
    double value = 0.0;
    std::optional<Rational> exact;
};

/// Solution of the parity-interleaved power-sum system.
struct AlternatingSystem {
    std::vector<Rational> c;
    int s = 0;
    std::vector<double> x;
    std::vector<std::optional<Rational>> x_exact;
};

/// Unique polynomial of degree m with p(c_i) = 0 for odd i, 1 for even i
/// (1-based), built exactly. Throws NotIncreasing.
Polynomial alternating_interpolant(const std::vector<Rational>& c);

/// Points d_1 < ... < d_{m-1} in (c_1, c_{m+1}) where the interpolant takes
/// the complementary alternating values 1, 0, 1, ... Exact ties are detected
/// before numeric bracketing. Throws NotIncreasing, BisectionFailure.
std::vector<AltPoint> interior_alternants(const std::vector<Rational>& c);

/// Recursive descent of interior_alternants from s = m-1 down to the
/// requested length in steps of 2. Throws InvalidParity.
AlternatingSystem solve_moment_symmetry(const std::vector<Rational>& c, int s);

/// Residual per equation j = 1..s of the parity power-sum system; usable as
/// an independent oracle against solve_moment_symmetry.
std::vector<double> verify_moment_system(const std::vector<Rational>& c,
                                         const std::vector<double>& x, int s);

enum class SymbolSide { Plus, Minus };

struct RemainingRootsReport {
    std::vector<ComplexRoot> plus_remaining;
    std::vector<ComplexRoot> minus_remaining;
    bool all_real = true;
    bool all_distinct = true;
    bool all_inside = true;
};

/// Given known alternating roots of the symbol pair, deflates them exactly
/// and checks the remaining roots are real, distinct, and inside
/// (c_first, c_last). Throws HypothesisViolation when an assigned c is not a
/// root of its polynomial.
RemainingRootsReport check_remaining_roots(
    const Polynomial& r_plus, const Polynomial& r_minus,
    const std::vector<std::pair<Rational, SymbolSide>>& c_assignment);

struct ForcedRoot {
    Rational value;
    SymbolSide side = SymbolSide::Plus;
    bool verified = false;  // exact root check
};

struct NodeFamilyReport {
    Verdict verdict;  // classification of the built operator
    int n = 0;
    int l = 0;
    int t = 0;
    bool has_zero_node = false;
    bool counting_ok = false;  // the node-counting hypothesis; when false the
                               // guarantee is inapplicable but we classify anyway
    std::vector<ForcedRoot> forced;
    RemainingRootsReport remaining;
};

/// Builds the Riemann difference on the given two-sided geometric nodes,
/// classifies it, and verifies the forced-root and remaining-root structure.
NodeFamilyReport verify_node_family(const std::vector<Rational>& nodes, const Rational& q);

} // namespace mz
