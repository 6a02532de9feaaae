#include "mz/difference.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

namespace mz {

DifferenceOp riemann_weights(const std::vector<Rational>& nodes) {
    std::set<Rational> seen(nodes.begin(), nodes.end());
    if (seen.size() != nodes.size())
        throw DuplicateNodes("riemann_weights: nodes must be pairwise distinct");
    if (nodes.size() < 2)
        throw DuplicateNodes("riemann_weights: need at least two nodes");
    DifferenceOp d;
    for (size_t k = 0; k < nodes.size(); ++k) {
        Rational prod(1);
        for (size_t j = 0; j < nodes.size(); ++j)
            if (j != k) prod *= nodes[k] - nodes[j];
        d.terms.push_back({Rational(1) / prod, nodes[k]});
    }
    return d;
}

Rational moment(const DifferenceOp& d, int j) {
    Rational acc(0);
    for (const auto& t : d.terms) {
        // 0^0 = 1, so the j = 0 moment includes the zero node.
        acc += t.coeff * rational_pow(t.node, j);
    }
    return acc;
}

std::optional<OrderReport> detect_order(const DifferenceOp& d, int j_max) {
    if (j_max < 0) j_max = static_cast<int>(d.terms.size()) + 4;
    for (int j = 0; j <= j_max; ++j) {
        Rational m = moment(d, j);
        if (m != 0) return OrderReport{j, m, m == 1};
    }
    return std::nullopt;
}

DifferenceOp rescale(const DifferenceOp& d, const Rational& c, const Rational& r) {
    if (c == 0 || r == 0) throw ZeroScale("rescale: c and r must be nonzero");
    DifferenceOp out;
    for (const auto& t : d.terms) out.terms.push_back({r * t.coeff, t.node / c});
    return out;
}

std::optional<std::pair<int, int>> geometric_exponent(const Rational& value, const Rational& q) {
    if (value == 0) return std::nullopt;
    Rational up(1), down(1);
    for (int k = 0; k <= 128; ++k) {
        if (up == value) return std::pair{k, +1};
        if (up == -value) return std::pair{k, -1};
        if (k > 0) {
            if (down == value) return std::pair{-k, +1};
            if (down == -value) return std::pair{-k, -1};
        }
        up *= q;
        down /= q;
    }
    return std::nullopt;
}

CharacteristicResult to_characteristic(const DifferenceOp& d, const Rational& q) {
    if (q == 0 || q == 1 || q == -1)
        throw InvalidRatio("to_characteristic: |q| must differ from 0 and 1");
    std::map<int, Rational> coeff_by_exp;
    Rational zero_coeff(0);
    for (const auto& t : d.terms) {
        if (t.node == 0) {
            zero_coeff += t.coeff;
            continue;
        }
        auto hit = geometric_exponent(t.node, q);
        if (!hit || hit->second != +1)
            throw GeomTemplateMismatch("to_characteristic: node " + format_rational(t.node) +
                                       " is not a non-negative power of q");
        coeff_by_exp[hit->first] += t.coeff;
    }
    int shift = 0;
    if (!coeff_by_exp.empty() && coeff_by_exp.begin()->first < 0)
        shift = -coeff_by_exp.begin()->first;
    std::vector<Rational> coeffs;
    for (const auto& [k, c] : coeff_by_exp) {
        const size_t idx = static_cast<size_t>(k + shift);
        if (coeffs.size() <= idx) coeffs.resize(idx + 1, Rational(0));
        coeffs[idx] = c;
    }
    return {Polynomial{std::move(coeffs)}, zero_coeff, shift};
}

std::pair<Polynomial, Polynomial> symmetric_split(const GeometricDifference& g) {
    int max_k = -1;
    if (!g.pos.empty()) max_k = std::max(max_k, g.pos.rbegin()->first);
    if (!g.neg.empty()) max_k = std::max(max_k, g.neg.rbegin()->first);
    std::vector<Rational> plus(static_cast<size_t>(max_k) + 1, Rational(0));
    std::vector<Rational> minus(static_cast<size_t>(max_k) + 1, Rational(0));
    for (const auto& [k, c] : g.pos) {
        plus[static_cast<size_t>(k)] += c;
        minus[static_cast<size_t>(k)] += c;
    }
    for (const auto& [k, c] : g.neg) {
        plus[static_cast<size_t>(k)] += c;
        minus[static_cast<size_t>(k)] -= c;
    }
    return {Polynomial{std::move(plus)}, Polynomial{std::move(minus)}};
}

GeometricDifference from_nodes_geometric(const DifferenceOp& d, const Rational& q) {
    if (q == 0 || q == 1 || q == -1)
        throw InvalidRatio("from_nodes_geometric: |q| must differ from 0 and 1");
    GeometricDifference g;
    g.q = q;
    int min_k = 0;
    std::vector<std::tuple<int, int, Rational>> placed;  // (exponent, sign, coeff)
    for (const auto& t : d.terms) {
        if (t.node == 0) {
            g.zero_coeff += t.coeff;
            continue;
        }
        auto hit = geometric_exponent(t.node, q);
        if (!hit)
            throw GeomTemplateMismatch("from_nodes_geometric: node " + format_rational(t.node) +
                                       " is not +-q^k");
        placed.emplace_back(hit->first, hit->second, t.coeff);
        min_k = std::min(min_k, hit->first);
    }
    g.shift = -min_k;
    for (const auto& [k, sign, c] : placed) {
        auto& target = (sign > 0) ? g.pos : g.neg;
        target[k + g.shift] += c;
    }
    return g;
}

DifferenceOp to_difference_op(const GeometricDifference& g) {
    DifferenceOp d;
    for (const auto& [k, c] : g.pos) d.terms.push_back({c, rational_pow(g.q, k)});
    for (const auto& [k, c] : g.neg) d.terms.push_back({c, -rational_pow(g.q, k)});
    if (g.zero_coeff != 0) d.terms.push_back({g.zero_coeff, Rational(0)});
    return d;
}

GeometricDifference generate_order_n(const Rational& q, int n, const Polynomial& t) {
    if (q == 0 || q == 1 || q == -1)
        throw InvalidRatio("generate_order_n: |q| must differ from 0 and 1");
    if (poly_eval(t, rational_pow(q, n)) == 0)
        throw OrderViolation("generate_order_n: t(q^n) = 0 would push the order past n");
    std::vector<Rational> roots;
    for (int j = 1; j < n; ++j) roots.push_back(rational_pow(q, j));
    Polynomial p = poly_from_roots(roots) * t;
    GeometricDifference g;
    g.q = q;
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(k) != 0) g.pos[k] = p.coeff(k);
    g.zero_coeff = -poly_eval(p, 1);
    return g;
}

namespace {

std::optional<BigInt> integer_kth_root(const BigInt& n, int k) {
    if (n < 0) return std::nullopt;
    BigInt r = BigInt(static_cast<long long>(std::max(1.0, std::pow(n.convert_to<double>(), 1.0 / k))));
    for (BigInt cand = (r > 2 ? r - 2 : BigInt(0)); cand <= r + 2; ++cand) {
        BigInt p = 1;
        for (int i = 0; i < k; ++i) p *= cand;
        if (p == n) return cand;
    }
    return std::nullopt;
}

std::optional<Rational> rational_kth_root(const Rational& r, int k) {
    auto rn = integer_kth_root(num(r), k);
    auto rd = integer_kth_root(den(r), k);
    if (rn && rd) return Rational(*rn, *rd);
    return std::nullopt;
}

} // namespace

Rational infer_ratio(const std::vector<Rational>& nodes) {
    // Candidate ratios: |b_i / b_j| > 1 over nonzero node pairs, plus their
    // exact rational k-th roots so gapped templates like {1, 4, 16} with
    // q = 2 are found. A candidate fits when every nonzero node is +-q^k.
    std::set<Rational> candidates;
    std::vector<Rational> nonzero;
    for (const auto& b : nodes)
        if (b != 0) nonzero.push_back(b);
    for (size_t i = 0; i < nonzero.size(); ++i)
        for (size_t j = 0; j < nonzero.size(); ++j) {
            if (i == j) continue;
            Rational r = rational_abs(nonzero[i] / nonzero[j]);
            if (r > 1) candidates.insert(r);
        }
    for (const auto& c : std::set<Rational>(candidates)) {
        for (int k = 2; k <= 6; ++k) {
            auto root = rational_kth_root(c, k);
            if (root && *root > 1) candidates.insert(*root);
        }
    }
    std::vector<Rational> fits;
    for (const auto& q : candidates) {
        bool ok = true;
        for (const auto& b : nonzero)
            if (!geometric_exponent(b, q)) { ok = false; break; }
        if (ok) fits.push_back(q);
    }
    if (fits.empty())
        throw GeomTemplateMismatch("infer_ratio: no ratio fits the node set");
    if (fits.size() > 1)
        throw AmbiguousRatio("infer_ratio: several ratios fit the node set");
    return fits.front();
}

} // namespace mz
