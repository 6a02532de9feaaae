#include "mz/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mz {

namespace {

constexpr int kMaxSweeps = 200;

struct NumericRoot {
    Complex z;
    double radius;
};

// Aberth-Ehrlich simultaneous refinement. Expects a polynomial with no
// rational roots; all coefficients are used monic-normalized.
std::vector<NumericRoot> aberth(const Polynomial& p, double target_radius) {
    const int d = p.degree();
    const Rational lead = p.leading();
    std::vector<Complex> c(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) c[static_cast<size_t>(k)] = to_double(p.coeff(k) / lead);

    auto horner = [&](Complex z) {
        Complex v(0.0), dv(0.0);
        for (int k = d; k >= 0; --k) {
            dv = dv * z + v;
            v = v * z + c[static_cast<size_t>(k)];
        }
        return std::pair{v, dv};
    };

    // Initial guesses on a circle of the Cauchy-bound radius, phase-offset so
    // no guess starts on the real axis.
    double cauchy = 0.0;
    for (int k = 0; k < d; ++k) cauchy = std::max(cauchy, std::abs(c[static_cast<size_t>(k)]));
    cauchy += 1.0;
    std::vector<Complex> z(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j) {
        double theta = 2.0 * std::numbers::pi * j / d + 0.4;
        z[static_cast<size_t>(j)] = std::polar(cauchy, theta);
    }

    std::vector<double> radius(static_cast<size_t>(d), std::numeric_limits<double>::infinity());
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double max_step = 0.0;
        for (int j = 0; j < d; ++j) {
            auto [v, dv] = horner(z[static_cast<size_t>(j)]);
            if (dv == Complex(0.0)) {
                z[static_cast<size_t>(j)] += Complex(1e-8, 1e-8);
                continue;
            }
            Complex w = v / dv;
            Complex repulse(0.0);
            for (int k = 0; k < d; ++k) {
                if (k == j) continue;
                Complex diff = z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)];
                if (diff == Complex(0.0)) diff = Complex(1e-12, 1e-12);
                repulse += 1.0 / diff;
            }
            Complex denom = 1.0 - w * repulse;
            Complex corr = (denom == Complex(0.0)) ? w : w / denom;
            z[static_cast<size_t>(j)] -= corr;
            max_step = std::max(max_step, std::abs(corr) / std::max(1.0, std::abs(z[static_cast<size_t>(j)])));
        }

        bool all_certified = true;
        for (int j = 0; j < d; ++j) {
            auto [v, dv] = horner(z[static_cast<size_t>(j)]);
            double r = (dv == Complex(0.0)) ? std::numeric_limits<double>::infinity()
                                            : d * std::abs(v) / std::abs(dv);
            radius[static_cast<size_t>(j)] = r;
            if (r > target_radius * std::max(1.0, std::abs(z[static_cast<size_t>(j)])))
                all_certified = false;
        }
        if (all_certified || (max_step < 1e-15 && sweep > 10)) break;
    }

    std::vector<NumericRoot> out;
    out.reserve(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j)
        out.push_back({z[static_cast<size_t>(j)], radius[static_cast<size_t>(j)]});
    return out;
}

// Snap near-real roots onto the axis and average conjugate pairs so the set
// is exactly closed under conjugation.
void symmetrize(std::vector<NumericRoot>& roots) {
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        if (std::abs(roots[i].z.imag()) <= roots[i].radius + 1e-13 * std::abs(roots[i].z)) {
            roots[i].z.imag(0.0);
            used[i] = true;
            continue;
        }
        size_t best = i;
        double best_dist = std::numeric_limits<double>::infinity();
        for (size_t k = i + 1; k < roots.size(); ++k) {
            if (used[k]) continue;
            double dist = std::abs(roots[k].z - std::conj(roots[i].z));
            if (dist < best_dist) { best_dist = dist; best = k; }
        }
        if (best != i && best_dist <= roots[i].radius + roots[best].radius + 1e-12) {
            Complex avg = 0.5 * (roots[i].z + std::conj(roots[best].z));
            roots[i].z = avg;
            roots[best].z = std::conj(avg);
            used[i] = used[best] = true;
        }
    }
}

// Merge overlapping inclusion disks; a numeric multiple root shows up as a
// cluster and is reported as one root with the combined disk.
std::vector<ComplexRoot> cluster(const std::vector<NumericRoot>& roots) {
    const size_t n = roots.size();
    std::vector<size_t> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (std::abs(roots[i].z - roots[j].z) <= roots[i].radius + roots[j].radius)
                parent[find(i)] = find(j);

    std::vector<ComplexRoot> out;
    std::vector<bool> done(n, false);
    for (size_t i = 0; i < n; ++i) {
        size_t rep = find(i);
        if (done[rep]) continue;
        done[rep] = true;
        Complex centroid(0.0);
        int count = 0;
        for (size_t j = 0; j < n; ++j)
            if (find(j) == rep) { centroid += roots[j].z; ++count; }
        centroid /= static_cast<double>(count);
        double radius = 0.0;
        for (size_t j = 0; j < n; ++j)
            if (find(j) == rep)
                radius = std::max(radius, std::abs(roots[j].z - centroid) + roots[j].radius);
        out.push_back({centroid, radius, std::nullopt, count});
    }
    return out;
}

} // namespace

RootSet find_roots(const Polynomial& p, double target_radius) {
    if (p.is_zero()) throw ZeroPolynomial("find_roots: zero polynomial");
    RootSet rs;
    if (p.degree() == 0) return rs;

    auto rational_part = rational_roots(p);
    for (const auto& [root, mult] : rational_part.roots) {
        ComplexRoot cr;
        cr.value = Complex(to_double(root), 0.0);
        cr.radius = 0.0;
        cr.exact = root;
        cr.multiplicity = mult;
        rs.roots.push_back(cr);
    }

    if (rational_part.deflated.degree() >= 1) {
        auto numeric = aberth(rational_part.deflated, target_radius);
        symmetrize(numeric);
        auto clustered = cluster(numeric);
        for (const auto& r : clustered) {
            if (r.multiplicity == 1 &&
                r.radius > target_radius * std::max(1.0, std::abs(r.value)))
                throw NoConvergence("find_roots: iteration budget exhausted before reaching target radius");
            rs.roots.push_back(r);
        }
    }
    return rs;
}

Annulus annulus_for(const Rational& q, int n) {
    if (q == 0 || q == 1 || q == -1)
        throw InvalidRatio("annulus_for: |q| must differ from 0 and 1");
    Annulus a;
    a.q = q;
    a.n = n;
    const Rational aq = rational_abs(q);
    const Rational lo_pow = rational_pow(aq, n - 1);
    const Rational hi_pow = rational_pow(aq, n);
    if (aq > 1) {
        a.inner_exact = lo_pow;  // (|q|^{n-1}, |q|^n]
        a.outer_exact = hi_pow;
        a.inner_open = true;
        a.outer_open = false;
    } else {
        a.inner_exact = hi_pow;  // [|q|^n, |q|^{n-1})
        a.outer_exact = lo_pow;
        a.inner_open = false;
        a.outer_open = true;
    }
    a.inner = to_double(a.inner_exact);
    a.outer = to_double(a.outer_exact);
    return a;
}

Membership annulus_membership(const ComplexRoot& root, const Annulus& ann, double tol) {
    if (root.exact) {
        const Rational m2 = *root.exact * *root.exact;
        const Rational in2 = ann.inner_exact * ann.inner_exact;
        const Rational out2 = ann.outer_exact * ann.outer_exact;
        const bool above_inner = ann.inner_open ? (m2 > in2) : (m2 >= in2);
        const bool below_outer = ann.outer_open ? (m2 < out2) : (m2 <= out2);
        return (above_inner && below_outer) ? Membership::Inside : Membership::Outside;
    }
    const double m = std::abs(root.value);
    const double r = root.radius + tol;
    if (m + r < ann.inner || m - r > ann.outer) return Membership::Outside;
    if (m - r > ann.inner && m + r < ann.outer) return Membership::Inside;
    return Membership::BoundaryUndecided;
}

const char* to_string(Membership m) {
    switch (m) {
        case Membership::Inside: return "INSIDE";
        case Membership::Outside: return "OUTSIDE";
        case Membership::BoundaryUndecided: return "BOUNDARY_UNDECIDED";
    }
    return "?";
}

} // namespace mz
