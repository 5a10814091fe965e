#include "rainbow_forge/exact_math.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace rainbow {

BigInt floor_rational(const Rational& q) {
    BigInt num = numerator(q), den = denominator(q);
    BigInt quot = num / den;
    if (num < 0 && quot * den != num) --quot;
    return quot;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string rational_to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

double log_bigint(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log_bigint: non-positive argument");
    std::size_t bits = msb(x);
    if (bits <= 62) return std::log(x.convert_to<double>());
    BigInt top = x >> (bits - 52);
    return std::log(top.convert_to<double>()) +
           static_cast<double>(bits - 52) * 0.6931471805599453;
}

namespace {

// Rational bounds S <= e <= S + 2/terms! from the partial sums of e's series.
struct EBounds {
    Rational lo, hi;
};

EBounds e_bounds(int terms) {
    Rational s = 0;
    BigInt fact = 1;
    for (int k = 0; k < terms; ++k) {
        s += Rational(BigInt(1), fact);
        fact *= (k + 1);
    }
    return {s, s + Rational(BigInt(2), fact)};
}

Rational pow_rational(const Rational& base, long long exp) {
    Rational r = 1, b = base;
    long long e = exp;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

double log_rational(const Rational& q) {
    return log_bigint(numerator(q)) - log_bigint(denominator(q));
}

constexpr long long kExactExponentCap = 50'000'000;

}  // namespace

int cmp_exp(long long d, const Rational& t) {
    if (t <= 0) return 1;
    if (d == 0) return t == 1 ? 0 : (t < 1 ? 1 : -1);
    bool flip = d < 0;
    long long dd = flip ? -d : d;
    Rational target = flip ? Rational(1) / t : t;

    // interval screen on ln(target) vs dd; the exact path below settles ties
    double lt = log_rational(target);
    double margin = 1e-6 + 1e-9 * std::abs(lt);
    int screened = 0;
    if (lt < static_cast<double>(dd) - margin) screened = 1;
    if (lt > static_cast<double>(dd) + margin) screened = -1;
    if (screened != 0) return flip ? -screened : screened;

    if (dd > kExactExponentCap)
        throw std::runtime_error("cmp_exp: ambiguous comparison at infeasible scale");
    for (int terms = 30;; terms *= 2) {
        EBounds b = e_bounds(terms);
        Rational lo = pow_rational(b.lo, dd);
        if (lo > target) return flip ? -1 : 1;
        Rational hi = pow_rational(b.hi, dd);
        if (hi < target) return flip ? 1 : -1;
        if (terms > 4096)
            throw std::runtime_error("cmp_exp: failed to separate (t = e^d?)");
    }
}

int cmp_linear_log(long long coeff_a, long long a, long long coeff_b, long long b,
                   long long d) {
    if (a < 1 || b < 1 || coeff_a < 0 || coeff_b < 0)
        throw std::domain_error("cmp_linear_log: bad arguments");

    double va = static_cast<double>(coeff_a) * std::log(static_cast<double>(a));
    double vb = static_cast<double>(coeff_b) * std::log(static_cast<double>(b));
    double diff = va - vb - static_cast<double>(d);
    double margin = 1e-9 + 1e-12 * (std::abs(va) + std::abs(vb) + std::abs(static_cast<double>(d)));
    if (diff > margin) return 1;
    if (diff < -margin) return -1;

    if (coeff_a > kExactExponentCap || coeff_b > kExactExponentCap)
        throw std::runtime_error("cmp_linear_log: ambiguous comparison at infeasible scale");
    BigInt pa = pow(BigInt(a), static_cast<unsigned>(coeff_a));
    BigInt pb = pow(BigInt(b), static_cast<unsigned>(coeff_b));
    // coeff_a*ln a - coeff_b*ln b - d  has the sign of  pa/pb - e^d
    return -cmp_exp(d, Rational(pa, pb));
}

int cmp_eps_threshold(const Rational& q, long long u, long long n) {
    if (u < 1 || n < u) throw std::domain_error("cmp_eps_threshold: need 1 <= u <= n");
    if (n == 1 || u == 1) {
        return q == 1 ? 0 : (q < 1 ? -1 : 1);  // eps_max is exactly 1
    }
    if (u == n) {
        return q == 0 ? 0 : (q < 0 ? -1 : 1);  // eps_max is exactly 0
    }
    // q - (1 - ln u/ln n) has the sign of ln u/ln n - (1 - q); with
    // 1 - q = alpha/beta (beta > 0) this is the sign of u^beta - n^alpha.
    Rational one_minus_q = Rational(1) - q;
    BigInt alpha = numerator(one_minus_q), beta = denominator(one_minus_q);
    if (alpha <= 0) return 1;  // q >= 1 while eps_max < 1
    if (alpha > kExactExponentCap || beta > kExactExponentCap)
        throw std::runtime_error("cmp_eps_threshold: rational too fine");
    BigInt lhs = pow(BigInt(u), beta.convert_to<unsigned>());
    BigInt rhs = pow(BigInt(n), alpha.convert_to<unsigned>());
    return lhs == rhs ? 0 : (lhs < rhs ? -1 : 1);
}

bool at_least_n_over_sqrt_e(long long u, long long n) {
    if (u < 0 || n < 1) throw std::domain_error("at_least_n_over_sqrt_e");
    if (u >= n) return true;
    if (u == 0) return false;
    // u >= n/sqrt(e)  <=>  e >= n^2/u^2
    return cmp_exp(1, Rational(BigInt(n) * n, BigInt(u) * u)) >= 0;
}

int cmp_subgraph_ratio(long long e1, long long s1, long long e2, long long s2) {
    if (s1 < 1 || s2 < 1 || e1 < 0 || e2 < 0)
        throw std::domain_error("cmp_subgraph_ratio: bad arguments");
    // single-vertex or edgeless subgraphs have ratio 0
    bool zero1 = (s1 == 1 || e1 == 0), zero2 = (s2 == 1 || e2 == 0);
    if (zero1 && zero2) return 0;
    if (zero1) return -1;
    if (zero2) return 1;
    // (2e1/s1)/(ln s1 - 1/3) vs (2e2/s2)/(ln s2 - 1/3); both denominators
    // positive since s >= 2. Clearing denominators (times 3*s1*s2):
    //   6 e1 s2 ln(s2) - 6 e2 s1 ln(s1)  vs  2 e1 s2 - 2 e2 s1
    return cmp_linear_log(6 * e1 * s2, s2, 6 * e2 * s1, s1, 2 * e1 * s2 - 2 * e2 * s1);
}

bool degree_guarantee_holds(long long eh, long long sh, long long eg, long long sg) {
    if (sh < 2 || sg < 2) throw std::domain_error("degree_guarantee_holds: need >= 2 vertices");
    // 2eh/sh >= ((ln sh - 1/3)/(ln sg - 1/3)) * 2eg/sg
    // <=> 6 eh sg ln(sg) - 6 eg sh ln(sh) >= 2 eh sg - 2 eg sh
    return cmp_linear_log(6 * eh * sg, sg, 6 * eg * sh, sh, 2 * eh * sg - 2 * eg * sh) >= 0;
}

}  // namespace rainbow
