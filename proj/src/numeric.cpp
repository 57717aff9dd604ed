#include "qf/numeric.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <random>

#include "qf/errors.hpp"

namespace qf {

namespace {

Int gcd_int(Int a, Int b) {
    using boost::multiprecision::gcd;
    return gcd(a, b);
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Int pollard_rho(const Int& n, std::mt19937_64& rng) {
    if (n % 2 == 0) return 2;
    while (true) {
        Int y = Int(rng() % 1000003) + 1;
        Int c = Int(rng() % 1000003) + 1;
        Int m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = m < r - k ? m : r - k;
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int d = x - y;
                    if (d < 0) d = -d;
                    q = q * d % n;
                }
                g = gcd_int(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                Int d = x - ys;
                if (d < 0) d = -d;
                g = gcd_int(d, n);
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(const Int& n, std::map<Int, int>& out, std::mt19937_64& rng) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n]++;
        return;
    }
    Int d = pollard_rho(n, rng);
    factor_rec(d, out, rng);
    factor_rec(n / d, out, rng);
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    return boost::multiprecision::miller_rabin_test(n, 32);
}

std::map<Int, int> factorize(const Int& n) {
    if (n == 0) throw ZeroScalar("factorize(0)");
    std::map<Int, int> out;
    Int m = n < 0 ? Int(-n) : n;
    for (long p = 2; p < 100000 && Int(p) * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            out[Int(p)]++;
            m /= p;
        }
    }
    if (m > 1) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
        factor_rec(m, out, rng);
    }
    return out;
}

Int squarefree_part(const Int& n) {
    if (n == 0) return 0;
    Int out = n < 0 ? -1 : 1;
    for (const auto& [p, e] : factorize(n))
        if (e % 2 != 0) out *= p;
    return out;
}

Int squarefree_part(const Rational& r) {
    if (r == 0) return 0;
    return squarefree_part(Int(numerator(r) * denominator(r)));
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    Int s = sqrt(n);
    return s * s == n;
}

bool is_rational_square(const Rational& r) {
    return r >= 0 && is_perfect_square(numerator(r)) && is_perfect_square(denominator(r));
}

int valuation(Int n, const Int& p) {
    if (n == 0) throw ZeroScalar("valuation of 0");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int valuation(const Rational& r, const Int& p) {
    if (r == 0) throw ZeroScalar("valuation of 0");
    return valuation(Int(numerator(r)), p) - valuation(Int(denominator(r)), p);
}

Rational unit_part(const Rational& r, const Int& p) {
    int v = valuation(r, p);
    Rational out = r;
    Rational pr(p);
    for (; v > 0; --v) out /= pr;
    for (; v < 0; ++v) out *= pr;
    return out;
}

int legendre(const Int& a, const Int& p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw InvalidPrime("legendre: p must be an odd prime");
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Int e = (p - 1) / 2;
    Int s = powm(r, e, p);
    return s == 1 ? 1 : -1;
}

long least_nonresidue(long p) {
    for (long a = 2; a < p; ++a)
        if (legendre(a, p) == -1) return a;
    throw InvalidPrime("no nonresidue found; p must be an odd prime >= 3");
}

long mod_pow(long base, long exp, long mod) {
    long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

long mod_inverse(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw ZeroScalar("mod_inverse(0)");
    // extended Euclid; works for any modulus with gcd(a, p) = 1
    long r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw ZeroScalar("mod_inverse: not invertible");
    return s0 < 0 ? s0 + p : s0;
}

long mod_reduce(const Int& a, long m) {
    Int r = a % m;
    if (r < 0) r += m;
    return static_cast<long>(r);
}

long mod_reduce(const Rational& r, long m) {
    long num = mod_reduce(Int(numerator(r)), m);
    long den = mod_reduce(Int(denominator(r)), m);
    return num * mod_inverse(den, m) % m;
}

}  // namespace qf
