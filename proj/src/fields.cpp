#include "qf/fields.hpp"

#include <algorithm>
#include <set>

#include "qf/errors.hpp"
#include "qf/form.hpp"

namespace qf {

FieldDesc FieldDesc::finite(long p) {
    if (p < 3 || !is_prime(Int(p))) throw InvalidPrime("Finite(p) requires an odd prime p >= 3");
    return {FieldKind::Finite, p};
}

FieldDesc FieldDesc::padic(long p) {
    if (p < 2 || !is_prime(Int(p))) throw InvalidPrime("Padic(p) requires a prime p");
    return {FieldKind::Padic, p};
}

std::string FieldDesc::str() const {
    switch (kind) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Finite: return "F" + std::to_string(p);
        case FieldKind::Reals: return "R";
        case FieldKind::Padic: return "Q" + std::to_string(p);
    }
    return "?";
}

namespace {

// Unit square class representative at p: for odd p one of {1, r}; for p = 2
// the residue of u mod 8 in {1,3,5,7}.
Int padic_unit_rep(const Rational& u, long p) {
    if (p == 2) return Int(mod_reduce(u, 8));
    long res = mod_reduce(u, p);
    return legendre(Int(res), Int(p)) == 1 ? Int(1) : Int(least_nonresidue(p));
}

}  // namespace

SquareClass square_class(const Rational& a, const FieldDesc& F) {
    if (a == 0) throw ZeroScalar("square_class(0)");
    switch (F.kind) {
        case FieldKind::Rationals:
            return {F, squarefree_part(a)};
        case FieldKind::Reals:
            return {F, a > 0 ? Int(1) : Int(-1)};
        case FieldKind::Finite: {
            long res = mod_reduce(a, F.p);
            if (res == 0) throw ZeroScalar("square_class: zero residue in F_p");
            return {F, legendre(Int(res), Int(F.p)) == 1 ? Int(1) : Int(least_nonresidue(F.p))};
        }
        case FieldKind::Padic: {
            int v = valuation(a, Int(F.p)) & 1;
            Rational u = unit_part(a, Int(F.p));
            Int rep = padic_unit_rep(u, F.p);
            if (v) rep *= F.p;
            return {F, rep};
        }
    }
    throw InternalError("square_class: unknown field kind");
}

SquareClass sq_mul(const SquareClass& a, const SquareClass& b) {
    if (a.field != b.field) throw FieldMismatch("sq_mul: different base fields");
    return square_class(Rational(a.rep * b.rep), a.field);
}

SquareClass sq_of(long a, const FieldDesc& F) { return square_class(Rational(a), F); }

int legendre_symbol(const Int& a, const Int& p) { return legendre(a, p); }

namespace {

// (u-1)/2 mod 2 and (u^2-1)/8 mod 2 for odd u.
int eps2(const Int& u) { return mod_reduce(Int((u - 1) / 2), 2); }
int omega2(const Int& u) { return mod_reduce(Int((u * u - 1) / 8), 2); }

int hilbert_padic(const Rational& a, const Rational& b, long p) {
    Int P(p);
    int alpha = valuation(a, P), beta = valuation(b, P);
    Rational ur = unit_part(a, P), wr = unit_part(b, P);
    // Replace the unit parts by integer surrogates in the same p-adic square
    // class: for odd p only the residue mod p matters, for p = 2 the residue
    // mod 8.
    if (p == 2) {
        Int u(mod_reduce(ur, 8)), w(mod_reduce(wr, 8));
        int e = eps2(u) * eps2(w) + alpha * omega2(w) + beta * omega2(u);
        return e % 2 == 0 ? 1 : -1;
    }
    Int u(mod_reduce(ur, p)), w(mod_reduce(wr, p));
    int e = ((p - 1) / 2) % 2 * alpha * beta;
    int s = (e % 2 == 0) ? 1 : -1;
    if (beta % 2 != 0) s *= legendre(u, P);
    if (alpha % 2 != 0) s *= legendre(w, P);
    return s;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw ZeroScalar("hilbert_symbol: arguments must be nonzero");
    if (v.real) return (a < 0 && b < 0) ? -1 : 1;
    return hilbert_padic(a, b, v.p);
}

bool is_local_square(const Rational& a, const Place& v) {
    if (a == 0) throw ZeroScalar("is_local_square(0)");
    if (v.real) return a > 0;
    if (valuation(a, Int(v.p)) % 2 != 0) return false;
    Rational u = unit_part(a, Int(v.p));
    if (v.p == 2) return mod_reduce(u, 8) == 1;
    return legendre(Int(mod_reduce(u, v.p)), Int(v.p)) == 1;
}

std::vector<Place> relevant_places(const QuadraticForm& q) {
    if (q.field.kind != FieldKind::Rationals)
        throw FieldMismatch("relevant_places: form must live over Q");
    std::set<long> primes{2};
    for (const auto& a : q.diag) {
        Int sf = squarefree_part(a);
        if (sf < 0) sf = -sf;
        for (const auto& [p, e] : factorize(sf)) primes.insert(static_cast<long>(p));
    }
    std::vector<Place> out{Place::reals()};
    for (long p : primes) out.push_back(Place::padic(p));
    return out;
}

}  // namespace qf
