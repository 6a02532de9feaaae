#include "mz/witness.hpp"

#include <algorithm>
#include <cmath>

#include "mz/classify.hpp"

namespace mz {

namespace {

// Samples ordered toward h -> 0: decreasing k for |q| > 1, increasing k for
// |q| < 1.
std::vector<int> toward_zero_order(const Rational& q, int k_min, int k_max) {
    std::vector<int> ks;
    if (rational_abs(q) > 1)
        for (int k = k_max; k >= k_min; --k) ks.push_back(k);
    else
        for (int k = k_min; k <= k_max; ++k) ks.push_back(k);
    return ks;
}

} // namespace

GridFunction to_complex_grid(const ExactGridFunction& f) {
    GridFunction out;
    out.q = f.q;
    out.k_min = f.k_min;
    out.k_max = f.k_max;
    out.zero = to_double(f.zero);
    out.pos.reserve(f.pos.size());
    for (const auto& v : f.pos) out.pos.emplace_back(to_double(v), 0.0);
    if (f.neg) {
        out.neg.emplace();
        out.neg->reserve(f.neg->size());
        for (const auto& v : *f.neg) out.neg->emplace_back(to_double(v), 0.0);
    }
    return out;
}

ExactGridFunction build_witness_exact(const Rational& q, const Rational& a_coeff, int n,
                                      int k_min, int k_max) {
    if (classify_recurrence(a_coeff, q, n) != RecurrenceVerdict::Fails)
        throw OutsideAnnulus("build_witness: |A| must lie inside the critical annulus");
    const Rational a = a_coeff / rational_pow(q, n - 1);
    ExactGridFunction f;
    f.q = q;
    f.k_min = k_min;
    f.k_max = k_max;
    f.zero = 0;
    f.pos.reserve(static_cast<size_t>(f.span()));
    const Rational step = a * rational_pow(q, n - 1);  // = A; R(q^{k+1}) = A R(q^k)
    Rational v = rational_pow(step, k_min);
    for (int k = k_min; k <= k_max; ++k) {
        f.pos.push_back(v);
        v *= step;
    }
    return f;
}

GridFunction build_witness(const Rational& q, Complex a_coeff, int n, int k_min, int k_max) {
    if (a_coeff.imag() == 0.0) {
        // keep the exact gate for real A; numeric values follow
        const double m = std::abs(a_coeff);
        Annulus ann = annulus_for(q, n);
        bool inside = (ann.inner_open ? m > ann.inner : m >= ann.inner) &&
                      (ann.outer_open ? m < ann.outer : m <= ann.outer);
        if (!inside) throw OutsideAnnulus("build_witness: |A| must lie inside the critical annulus");
    } else {
        if (classify_recurrence(a_coeff, q, n) == RecurrenceVerdict::Decays)
            throw OutsideAnnulus("build_witness: |A| must lie inside the critical annulus");
    }
    GridFunction f;
    f.q = q;
    f.k_min = k_min;
    f.k_max = k_max;
    f.zero = Complex(0.0);
    f.pos.reserve(static_cast<size_t>(f.span()));
    // R(q^k) = A^k (a q^{n-1} = A), integer powers by repeated multiply so
    // negative real A stays exactly on the real axis.
    Complex v(1.0);
    if (k_min >= 0)
        for (int i = 0; i < k_min; ++i) v *= a_coeff;
    else
        for (int i = 0; i < -k_min; ++i) v /= a_coeff;
    for (int k = k_min; k <= k_max; ++k) {
        f.pos.push_back(v);
        v *= a_coeff;
    }
    return f;
}

DecayReport decay_report(const GridFunction& f, int m) {
    if (f.span() < 20)
        throw RangeTooShort("decay_report: need at least 20 grid exponents");
    DecayReport rep;
    rep.m = m;
    const double absq = std::abs(to_double(f.q));
    auto order = toward_zero_order(f.q, f.k_min, f.k_max);
    for (int k : order) {
        const double h = std::pow(absq, k);
        rep.ratios.emplace_back(k, std::abs(f.at(k)) / std::pow(h, m));
    }

    // least-squares slope of log|f| against log|h|, zero samples skipped
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int k : order) {
        const double av = std::abs(f.at(k));
        if (av <= 0) continue;
        const double x = k * std::log(absq);
        const double y = std::log(av);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++cnt;
    }
    rep.fitted_slope = (cnt >= 2) ? (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx) : 0.0;

    const size_t n_ratios = rep.ratios.size();
    rep.infimum = rep.ratios.front().second;
    for (const auto& [k, r] : rep.ratios) rep.infimum = std::min(rep.infimum, r);

    // Envelope rule: the final quartile (toward h -> 0) must be
    // non-increasing, and the last ratio must have contracted by 1e3
    // relative to the first.
    const size_t q_start = n_ratios - std::max<size_t>(2, n_ratios / 4);
    bool monotone = true;
    for (size_t i = q_start; i + 1 < n_ratios; ++i)
        if (rep.ratios[i + 1].second > rep.ratios[i].second * (1.0 + 1e-9) + 1e-300)
            monotone = false;
    const double first = rep.ratios.front().second;
    const double last = rep.ratios.back().second;
    rep.verdict_o = (first == 0.0 && last == 0.0) ? true
                                                  : (monotone && last < 1e-3 * first);
    return rep;
}

DecayReport decay_report(const ExactGridFunction& f, int m) {
    return decay_report(to_complex_grid(f), m);
}

GridFunction simulate_recurrence(Complex a_coeff, const Rational& q, int /*n*/,
                                 const GridFunction& d, Complex seed, int k_min, int k_max) {
    if (a_coeff == Complex(0.0))
        throw Error("simulate_recurrence: A must be nonzero for backward solving");
    GridFunction r;
    r.q = q;
    r.k_min = k_min;
    r.k_max = k_max;
    r.pos.assign(static_cast<size_t>(r.span()), Complex(0.0));
    r.zero = Complex(0.0);
    r.at(k_max) = seed;
    for (int k = k_max - 1; k >= k_min; --k) {
        Complex dk(0.0);
        if (k >= d.k_min && k <= d.k_max) dk = d.at(k);
        r.at(k) = (r.at(k + 1) - dk) / a_coeff;
    }
    return r;
}

GridFunction real_part_witness(const GridFunction& f, int n) {
    const double absq = std::abs(to_double(f.q));
    auto order = toward_zero_order(f.q, f.k_min, f.k_max);
    const size_t tail = std::min<size_t>(10, order.size());
    double sup_re = 0.0, sup_im = 0.0;
    for (size_t i = order.size() - tail; i < order.size(); ++i) {
        const int k = order[i];
        const double hn = std::pow(absq, k * n);
        sup_re = std::max(sup_re, std::abs(f.at(k).real()) / hn);
        sup_im = std::max(sup_im, std::abs(f.at(k).imag()) / hn);
    }
    if (sup_re == 0.0 && sup_im == 0.0)
        throw BothPartsVanish("real_part_witness: both parts vanish on the final exponents");
    const bool take_re = sup_re >= sup_im;
    GridFunction out = f;
    for (auto& v : out.pos) v = Complex(take_re ? v.real() : v.imag(), 0.0);
    if (out.neg)
        for (auto& v : *out.neg) v = Complex(take_re ? v.real() : v.imag(), 0.0);
    out.zero = Complex(take_re ? f.zero.real() : f.zero.imag(), 0.0);
    return out;
}

} // namespace mz
