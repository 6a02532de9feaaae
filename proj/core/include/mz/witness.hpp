#pragma once

#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "mz/difference.hpp"

namespace mz {

/// Function sampled on the geometric grid {q^k : k_min <= k <= k_max},
/// optionally also on {-q^k} (two-sided), plus the value at h = 0.
/// T is Complex for the numeric path or Rational for the exact path.
template <typename T>
struct GridFn {
    Rational q;
    int k_min = 0;
    int k_max = 0;
    std::vector<T> pos;                    // value at q^k, index k - k_min
    std::optional<std::vector<T>> neg;     // value at -q^k, same indexing
    T zero{};

    int span() const { return k_max - k_min + 1; }
    const T& at(int k) const { return pos[static_cast<size_t>(k - k_min)]; }
    T& at(int k) { return pos[static_cast<size_t>(k - k_min)]; }
    const T& at_neg(int k) const { return (*neg)[static_cast<size_t>(k - k_min)]; }
    bool two_sided() const { return neg.has_value(); }
};

using GridFunction = GridFn<Complex>;
using ExactGridFunction = GridFn<Rational>;

GridFunction to_complex_grid(const ExactGridFunction& f);

struct DecayReport {
    int m = 0;
    /// (k, |f(q^k)| / |q^k|^m), ordered toward h -> 0.
    std::vector<std::pair<int, double>> ratios;
    double fitted_slope = 0.0;  // least-squares slope of log|f| vs log|h|
    bool verdict_o = false;     // ratios -> 0 at grid scale
    double infimum = 0.0;
};

enum class Parity { Even, Odd };

/// Eigenfunction witness R(q^k) = a^k (q^k)^{n-1} with a = A / q^{n-1};
/// satisfies R(qh) = A R(h) on the grid. Requires |A| inside the critical
/// annulus (throws OutsideAnnulus).
GridFunction build_witness(const Rational& q, Complex a_coeff, int n, int k_min, int k_max);

/// Exact-arithmetic witness for rational A (real a = A / q^{n-1}).
ExactGridFunction build_witness_exact(const Rational& q, const Rational& a_coeff, int n,
                                      int k_min, int k_max);

/// Two-sided extension f(-q^k) = +-f(q^k); zero value forced to 0.
template <typename T>
GridFn<T> extend_witness_symmetric(const GridFn<T>& w, Parity parity);

/// Df(h) = zero_coeff * f(0) + sum_k pos[k] f(q^k h) + sum_k neg[k] f(-q^k h),
/// evaluated wherever all needed samples exist. Throws InsufficientRange.
template <typename T>
GridFn<T> apply_operator(const GeometricDifference& g, const GridFn<T>& f);

/// Grid-scale decay certificate for |f| / |h|^m toward h -> 0. Requires a
/// span of at least 20 exponents (throws RangeTooShort).
DecayReport decay_report(const GridFunction& f, int m);
DecayReport decay_report(const ExactGridFunction& f, int m);

/// Unique grid solution of R(q^{k+1}) = A R(q^k) + D(q^k) with R at k_max
/// equal to seed, solved downward (the telescoping direction of the decay
/// proofs). D must cover [k_min, k_max - 1].
GridFunction simulate_recurrence(Complex a_coeff, const Rational& q, int n,
                                 const GridFunction& d, Complex seed, int k_min, int k_max);

/// Real or imaginary part, whichever has the larger limsup of |part|/|h|^n
/// over the final 10 exponents. Throws BothPartsVanish.
GridFunction real_part_witness(const GridFunction& f, int n);

// --- template definitions ---

template <typename T>
GridFn<T> extend_witness_symmetric(const GridFn<T>& w, Parity parity) {
    GridFn<T> out = w;
    out.neg = w.pos;
    if (parity == Parity::Odd)
        for (auto& v : *out.neg) v = -v;
    out.zero = T{};
    return out;
}

template <typename T>
GridFn<T> apply_operator(const GeometricDifference& g, const GridFn<T>& f) {
    if (!g.neg.empty() && !f.two_sided())
        throw InsufficientRange("apply_operator: two-sided operator needs a two-sided grid");
    int max_key = 0;
    if (!g.pos.empty()) max_key = std::max(max_key, g.pos.rbegin()->first);
    if (!g.neg.empty()) max_key = std::max(max_key, g.neg.rbegin()->first);
    if (f.k_max - max_key < f.k_min)
        throw InsufficientRange("apply_operator: grid range too short for the operator span");

    GridFn<T> out;
    out.q = f.q;
    out.k_min = f.k_min;
    out.k_max = f.k_max - max_key;
    out.pos.resize(static_cast<size_t>(out.span()), T{});
    if (f.two_sided()) out.neg = out.pos;
    out.zero = T{};

    for (int k = out.k_min; k <= out.k_max; ++k) {
        T acc{};
        if constexpr (std::is_same_v<T, Rational>) acc = g.zero_coeff * f.zero;
        else acc = to_double(g.zero_coeff) * f.zero;
        for (const auto& [j, c] : g.pos) {
            if constexpr (std::is_same_v<T, Rational>) acc += c * f.at(k + j);
            else acc += to_double(c) * f.at(k + j);
        }
        for (const auto& [j, c] : g.neg) {
            if constexpr (std::is_same_v<T, Rational>) acc += c * f.at_neg(k + j);
            else acc += to_double(c) * f.at_neg(k + j);
        }
        out.at(k) = acc;
        if (f.two_sided()) {
            T acc2 = T{};
            if constexpr (std::is_same_v<T, Rational>) acc2 = g.zero_coeff * f.zero;
            else acc2 = to_double(g.zero_coeff) * f.zero;
            for (const auto& [j, c] : g.pos) {
                if constexpr (std::is_same_v<T, Rational>) acc2 += c * f.at_neg(k + j);
                else acc2 += to_double(c) * f.at_neg(k + j);
            }
            for (const auto& [j, c] : g.neg) {
                if constexpr (std::is_same_v<T, Rational>) acc2 += c * f.at(k + j);
                else acc2 += to_double(c) * f.at(k + j);
            }
            (*out.neg)[static_cast<size_t>(k - out.k_min)] = acc2;
        }
    }
    return out;
}

} // namespace mz
