#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mz/polynomial.hpp"

namespace mz {

/// Generalized difference operator: a finite list of (coefficient, node)
/// pairs with pairwise distinct nodes.
struct DifferenceOp {
    struct Term {
        Rational coeff;
        Rational node;
    };
    std::vector<Term> terms;
};

/// Difference on a geometric template: coefficient pos[k] attached to node
/// q^k, neg[k] to node -q^k, and zero_coeff to node 0. `shift` records an
/// index normalization k -> k - shift applied to make all exponents
/// non-negative (verdict-neutral by the rescaling lemma).
struct GeometricDifference {
    Rational q;
    std::map<int, Rational> pos;
    std::map<int, Rational> neg;
    Rational zero_coeff = 0;
    int shift = 0;
};

struct OrderReport {
    int order = 0;
    Rational moment_n;
    bool riemann_normalized = false;  // moment_n == 1
};

/// Lagrange weights a_k = 1 / prod_{j != k} (b_k - b_j); the resulting
/// operator annihilates x^j for j < n and maps x^n to h^n, n = #nodes - 1.
/// Throws DuplicateNodes.
DifferenceOp riemann_weights(const std::vector<Rational>& nodes);

/// Sum a_k * node_k^j, with the 0^0 = 1 convention.
Rational moment(const DifferenceOp& d, int j);

/// Least j <= j_max with a nonzero moment; nullopt when all vanish.
/// j_max < 0 means the default bound (#terms + 4).
std::optional<OrderReport> detect_order(const DifferenceOp& d, int j_max = -1);

/// Nodes b_k -> b_k / c, coefficients a_k -> r * a_k. Order is preserved.
/// Throws ZeroScale.
DifferenceOp rescale(const DifferenceOp& d, const Rational& c, const Rational& r);

struct CharacteristicResult {
    Polynomial p;       // coefficient of x^k is the coefficient at node q^k
    Rational zero_coeff;
    int shift = 0;      // index normalization applied to absorb negative exponents
};

/// Characteristic polynomial of a one-sided geometric operator. Every
/// nonzero node must be q^k for some integer k (negative k handled by an
/// index shift). Throws GeomTemplateMismatch.
CharacteristicResult to_characteristic(const DifferenceOp& d, const Rational& q);

/// Even/odd symbol polynomials: r+ = sum (a_k + a_{-k}) x^k,
/// r- = sum (a_k - a_{-k}) x^k.
std::pair<Polynomial, Polynomial> symmetric_split(const GeometricDifference& g);

/// Routes each node +-q^k of a flat operator into the pos/neg maps.
/// Negative exponents are absorbed by an index shift, recorded in `shift`.
/// Throws GeomTemplateMismatch, InvalidRatio.
GeometricDifference from_nodes_geometric(const DifferenceOp& d, const Rational& q);

/// Flattened node-coefficient form (inverse of from_nodes_geometric up to
/// the recorded shift).
DifferenceOp to_difference_op(const GeometricDifference& g);

/// Order-n generator: p(x) = prod_{j=1}^{n-1} (x - q^j) * t(x) with
/// zero_coeff = -p(1). Requires t(q^n) != 0 (checked exactly); throws
/// OrderViolation otherwise.
GeometricDifference generate_order_n(const Rational& q, int n, const Polynomial& t);

/// Unique consistent ratio for a node set, if one exists. Throws
/// AmbiguousRatio when several ratios fit (e.g. {1, 4, 16}) and
/// GeomTemplateMismatch when none does.
Rational infer_ratio(const std::vector<Rational>& nodes);

/// Exponent k with q^k == value (sign = +1) or q^k == -value (sign = -1),
/// searched over |k| <= 128. nullopt when no power matches.
std::optional<std::pair<int, int>> geometric_exponent(const Rational& value, const Rational& q);

} // namespace mz
