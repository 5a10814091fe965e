#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den) {
    return Rational(BigInt(num), BigInt(den));
}

// Largest integer <= q.
BigInt floor_rational(const Rational& q);

double to_double(const Rational& q);
std::string rational_to_string(const Rational& q);

// Natural log of a positive big integer, accurate to ~1e-13 relative error.
double log_bigint(const BigInt& x);

// Sign of e^d - t for integer d and rational t > 0. Decided exactly: a fast
// interval screen first, then adaptive rational bounds on e (partial sums of
// sum 1/k!). Never returns 0: e^d is irrational for d != 0, and the d = 0
// case compares t against 1 exactly.
int cmp_exp(long long d, const Rational& t);

// Sign of (coeff_a * ln(a) - coeff_b * ln(b)) - d, decided exactly.
// Requires a, b >= 1 and coeff_a, coeff_b >= 0. Used for comparisons of the
// form d(H1)/(ln s1 - 1/3) vs d(H2)/(ln s2 - 1/3) after clearing denominators.
int cmp_linear_log(long long coeff_a, long long a, long long coeff_b, long long b,
                   long long d);

// Sign of q - (1 - ln(u)/ln(n)) for a rational q, 1 <= u <= n. The quantity
// 1 - ln(u)/ln(n) is the largest eps with u <= n^(1-eps). For n = 1 (forcing
// u = 1) the convention is eps_max = 1.
int cmp_eps_threshold(const Rational& q, long long u, long long n);

// Whether u >= n / sqrt(e), i.e. e * u^2 >= n^2, decided exactly.
bool at_least_n_over_sqrt_e(long long u, long long n);

// Average-degree ratio comparison for induced subgraphs:
// sign of  (2 e1/s1)/(ln s1 - 1/3) - (2 e2/s2)/(ln s2 - 1/3),
// where ei = edge count and si = vertex count (si >= 1; a subgraph on one
// vertex is treated as ratio 0). Exact.
int cmp_subgraph_ratio(long long e1, long long s1, long long e2, long long s2);

// Whether 2*eh/sh >= ((ln sh - 1/3)/(ln sg - 1/3)) * (2*eg/sg), the
// extraction degree guarantee, decided exactly. Requires sh >= 2, sg >= 2.
bool degree_guarantee_holds(long long eh, long long sh, long long eg, long long sg);

}  // namespace rainbow
