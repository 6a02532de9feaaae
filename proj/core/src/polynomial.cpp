#include "mz/polynomial.hpp"

#include <boost/integer/common_factor.hpp>

#include <algorithm>
#include <set>

namespace mz {

Polynomial::Polynomial(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial{{c}};
}

Polynomial Polynomial::monomial(int k, const Rational& c) {
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v.back() = c;
    return Polynomial{std::move(v)};
}

Rational Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

Rational Polynomial::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial{};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<int>(k);
    return Polynomial{std::move(d)};
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Rational> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
    return Polynomial{std::move(v)};
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + rhs * Rational(-1);
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial{};
    std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Polynomial{std::move(v)};
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> v(coeffs_);
    for (auto& x : v) x *= c;
    return Polynomial{std::move(v)};
}

Rational poly_eval(const Polynomial& p, const Rational& x) {
    Rational acc(0);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::pair<Complex, Complex> poly_eval_complex(const Polynomial& p, Complex z) {
    Complex v(0.0), dv(0.0);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dv = dv * z + v;
        v = v * z + to_double(*it);
    }
    return {v, dv};
}

std::pair<Polynomial, Rational> poly_div_linear(const Polynomial& p, const Rational& a) {
    if (p.degree() < 1) throw DegreeTooSmall("poly_div_linear: degree must be at least 1");
    const auto& c = p.coefficients();
    std::vector<Rational> q(c.size() - 1);
    Rational carry = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = c[k] + carry * a;
    }
    return {Polynomial{std::move(q)}, carry};
}

Polynomial poly_from_roots(const std::vector<Rational>& roots, const Rational& scale) {
    Polynomial p = Polynomial::constant(scale);
    for (const auto& r : roots) p = p * Polynomial{{-r, 1}};
    return p;
}

std::vector<Rational> power_sums(const Polynomial& p, int s) {
    if (p.is_zero()) throw ZeroPolynomial("power_sums: zero polynomial has no roots");
    const int d = p.degree();
    // Elementary symmetric functions of the roots: e_i = (-1)^i a_{d-i}/a_d.
    std::vector<Rational> e(static_cast<size_t>(d) + 1, Rational(0));
    const Rational lead = p.leading();
    for (int i = 1; i <= d; ++i) {
        e[static_cast<size_t>(i)] = p.coeff(d - i) / lead;
        if (i % 2 == 1) e[static_cast<size_t>(i)] = -e[static_cast<size_t>(i)];
    }
    std::vector<Rational> ps(static_cast<size_t>(s) + 1, Rational(0));
    for (int j = 1; j <= s; ++j) {
        Rational acc(0);
        for (int i = 1; i < j && i <= d; ++i) {
            Rational term = e[static_cast<size_t>(i)] * ps[static_cast<size_t>(j - i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (j <= d) {
            Rational term = e[static_cast<size_t>(j)] * j;
            acc += (j % 2 == 1) ? term : -term;
        }
        ps[static_cast<size_t>(j)] = acc;
    }
    return {ps.begin() + 1, ps.end()};
}

namespace {

bool miller_rabin(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    int r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i < r - 1; ++i) {
            x = x * x % n;
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

BigInt pollard_rho(const BigInt& n) {
    if (n % 2 == 0) return 2;
    for (BigInt c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = boost::multiprecision::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factorize(BigInt n, std::map<BigInt, int>& out) {
    if (n <= 1) return;
    if (miller_rabin(n)) { out[n] += 1; return; }
    // Peel small primes first; Pollard rho handles the rest.
    for (int p = 2; p < 1000 && BigInt(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) { out[BigInt(p)] += 1; n /= p; }
    }
    if (n == 1) return;
    if (miller_rabin(n)) { out[n] += 1; return; }
    BigInt d = pollard_rho(n);
    factorize(d, out);
    factorize(n / d, out);
}

std::vector<BigInt> divisors(const BigInt& n) {
    std::map<BigInt, int> fac;
    factorize(n, fac);
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : fac) {
        const size_t base = divs.size();
        BigInt pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

} // namespace

RationalRootsResult rational_roots(const Polynomial& p) {
    if (p.is_zero()) throw ZeroPolynomial("rational_roots: zero polynomial");
    RationalRootsResult res;
    Polynomial cur = p;

    // Factor out x^k.
    int zero_mult = 0;
    while (cur.degree() >= 1 && cur.coeff(0) == 0) {
        cur = poly_div_linear(cur, 0).first;
        ++zero_mult;
    }
    if (zero_mult > 0) res.roots[Rational(0)] = zero_mult;

    if (cur.degree() >= 1) {
        // Clear denominators lazily; the public polynomial stays rational.
        BigInt lcm_den = 1;
        for (const auto& c : cur.coefficients())
            lcm_den = boost::multiprecision::lcm(lcm_den, den(c));
        BigInt c0 = boost::multiprecision::abs(num(cur.coeff(0) * lcm_den));
        BigInt cd = boost::multiprecision::abs(num(cur.leading() * lcm_den));

        std::set<Rational> candidates;
        for (const auto& pnum : divisors(c0))
            for (const auto& pden : divisors(cd)) {
                Rational r(pnum, pden);
                candidates.insert(r);
                candidates.insert(-r);
            }

        for (const auto& r : candidates) {
            while (cur.degree() >= 1) {
                auto [q, rem] = poly_div_linear(cur, r);
                if (rem != 0) break;
                cur = q;
                res.roots[r] += 1;
            }
        }
    }
    res.deflated = cur;
    return res;
}

} // namespace mz
