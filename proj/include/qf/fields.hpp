#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qf/numeric.hpp"

namespace qf {

enum class FieldKind { Rationals, Finite, Reals, Padic };

/// Base field descriptor. Finite(p) requires an odd prime (characteristic != 2);
/// Padic(p) allows p = 2.
struct FieldDesc {
    FieldKind kind = FieldKind::Rationals;
    long p = 0;  // prime for Finite/Padic, unused otherwise

    static FieldDesc rationals() { return {FieldKind::Rationals, 0}; }
    static FieldDesc finite(long p);
    static FieldDesc reals() { return {FieldKind::Reals, 0}; }
    static FieldDesc padic(long p);

    bool operator==(const FieldDesc&) const = default;
    std::string str() const;
};

/// A place of Q: the real place or a p-adic place. Also names the single
/// place of a Padic(p) base.
struct Place {
    bool real = true;
    long p = 0;

    static Place reals() { return {true, 0}; }
    static Place padic(long p) { return {false, p}; }

    bool operator==(const Place&) const = default;
    auto operator<=>(const Place& o) const {
        if (real != o.real) return real ? std::strong_ordering::less : std::strong_ordering::greater;
        return p <=> o.p;
    }
    std::string str() const { return real ? "R" : std::to_string(p); }
};

/// An element of k*/(k*)^2, held by a canonical integer representative:
///   Rationals: squarefree integer;  Reals: +-1;
///   Finite(p): 1 or the least nonresidue;
///   Padic(p):  p^e * u with e in {0,1} and u in {1, nonresidue} (p odd)
///              or u in {1,3,5,7} (p = 2).
struct SquareClass {
    FieldDesc field;
    Int rep = 1;

    bool is_one() const { return rep == 1; }
    bool operator==(const SquareClass&) const = default;
    std::string str() const { return rep.str(); }
};

/// Canonical square class of a nonzero scalar. Two scalars map to the same
/// class iff their ratio is a square in F.
SquareClass square_class(const Rational& a, const FieldDesc& F);

/// Product in k*/(k*)^2 (re-canonicalizes).
SquareClass sq_mul(const SquareClass& a, const SquareClass& b);

/// Class of an integer constant in F (convenience).
SquareClass sq_of(long a, const FieldDesc& F);

/// Legendre symbol (a/p), p an odd prime: 0 iff p | a.
int legendre_symbol(const Int& a, const Int& p);

/// Hilbert symbol (a,b)_v for nonzero rationals at the real place or a
/// p-adic place: +1 iff z^2 = a x^2 + b y^2 has a nontrivial solution in
/// the completion.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// True iff the nonzero rational a is a square in the completion at v.
bool is_local_square(const Rational& a, const Place& v);

struct QuadraticForm;  // form.hpp

/// {Reals, Padic(2)} plus Padic(p) for every p dividing the squarefree part
/// of a diagonal entry. Hilbert symbols between entries are +1 at every
/// omitted place.
std::vector<Place> relevant_places(const QuadraticForm& q);

}  // namespace qf
