#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace qf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(const Int& n);

/// Prime factorization of |n| (n != 0), as prime -> exponent.
/// Trial division for small primes, Brent-Pollard rho for the rest.
std::map<Int, int> factorize(const Int& n);

/// Squarefree part of n (the canonical representative of n modulo squares),
/// sign preserved. squarefree_part(0) = 0.
Int squarefree_part(const Int& n);

/// Squarefree part of num(r)*den(r); represents r modulo rational squares.
Int squarefree_part(const Rational& r);

bool is_perfect_square(const Int& n);

/// True iff r is the square of a rational.
bool is_rational_square(const Rational& r);

/// p-adic valuation of n != 0.
int valuation(Int n, const Int& p);

/// v_p(r) for r != 0 (may be negative).
int valuation(const Rational& r, const Int& p);

/// Unit part of r at p: r / p^{v_p(r)}, as a rational with v_p = 0.
Rational unit_part(const Rational& r, const Int& p);

/// (a/p) for odd prime p: 0 if p | a, else +-1.
int legendre(const Int& a, const Int& p);

/// Least positive quadratic nonresidue mod odd prime p.
long least_nonresidue(long p);

long mod_pow(long base, long exp, long mod);
long mod_inverse(long a, long p);

/// a mod m normalized to [0, m).
long mod_reduce(const Int& a, long m);

/// Residue of a rational with denominator prime to m, in [0, m).
long mod_reduce(const Rational& r, long m);

}  // namespace qf
