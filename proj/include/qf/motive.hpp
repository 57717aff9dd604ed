#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qf/witt.hpp"

namespace qf {

/// The Tate line Z/2(twist)[degree].
struct TateLine {
    int twist = 0;
    int degree = 0;
    bool operator==(const TateLine&) const = default;
    auto operator<=>(const TateLine&) const = default;
    std::string str() const;
};

/// Finite multiset of Tate lines; a bigraded Z/2 vector space.
struct BigradedSpace {
    std::vector<TateLine> lines;  // kept sorted

    void add(const TateLine& l);
    size_t rank() const { return lines.size(); }
    /// Adds dt to every twist and dd to every degree ((1)[2] is twist(1, 2)).
    BigradedSpace twisted(int dt, int dd) const;
    bool operator==(const BigradedSpace&) const = default;
    std::string str() const;
};

/// Signed count per twist: a line of degree j contributes (-1)^j to its
/// twist bucket. Additive over direct sums, negated by the shift [1].
struct EulerClass {
    std::map<int, long> by_twist;  // zero entries dropped

    void add(const TateLine& l, long sign = 1);
    EulerClass& operator+=(const EulerClass& o);
    EulerClass& operator-=(const EulerClass& o);
    bool operator==(const EulerClass&) const = default;
    std::string str() const;
};

EulerClass euler_class(const BigradedSpace& s);
EulerClass euler_class(const TateLine& l);

/// Tate decomposition of the split projective quadric of dimension m:
/// sum over 0 <= i <= floor(m/2) of (i)[2i] + (m-i)[2m-2i] (middle doubled
/// for even m).
BigradedSpace split_quadric_motive(int m);

/// Phi of M(Q) over the member: 2r lines (i)[2i], (D-i)[2D-2i] for
/// 0 <= i < r = i_W(q_E), D = dim(q) - 2; empty for anisotropic q_E and for
/// dim(q) <= 1. Coincides with split_quadric_motive(D) at full splitting.
BigradedSpace phi_projective(const QuadraticForm& q, const ExtensionMember& E);

/// Phi of the reduced affine motive: always a single line. Case I (the
/// anisotropic kernel stays anisotropic after adjoining <-1>): (n)[2n-1];
/// Case II: (m)[2m] with m = n + dim(kernel) - 1, n = i_W(q_E).
TateLine phi_affine_reduced(const QuadraticForm& q, const ExtensionMember& E);

struct RecoveredInvariants {
    int dim_form = 0;     // dim(q)
    int dim_quadric = 0;  // dim(Q) = dim(q) - 2, negative in degenerate cases
    int witt_q = 0;       // i_W(q_E)
    int witt_q_prime = 0; // i_W(q'_E)
    bool operator==(const RecoveredInvariants&) const = default;
};

/// Reads (dim Q, i_W(q_E), i_W(q'_E)) back off the phi-lines at kbar and at
/// E. Inverse of phi_affine_reduced on valid inputs.
RecoveredInvariants recover_invariants(const TateLine& phi_at_kbar, const TateLine& phi_at_E);

/// Euler-characteristic consistency of the Gysin triangle at a member:
/// euler(phi(A_q~)) = euler(phi(Q'~)) - euler(phi(Q)(1)[2]). The reduced
/// motive convention subtracts one (0)[0] line from phi(M(Q')) for every q'
/// (isotropic or not); with it the identity holds in all degenerate cases.
bool euler_triangle_check(const QuadraticForm& q, const ExtensionMember& E);

enum class VerdictKind { Isometric, Distinguished, EquivalentOnFamily, InconclusiveOnFamily };

std::string verdict_kind_str(VerdictKind k);

/// Outcome of an equivalence pipeline. Distinguished carries the member and
/// invariant that separate the forms; EquivalentOnFamily records whether the
/// family is classification-complete for the base field.
struct Verdict {
    VerdictKind kind = VerdictKind::InconclusiveOnFamily;
    std::optional<ExtensionMember> member;
    std::string detail;
    std::optional<SimilarityWitness> witness;
    bool family_exact = false;
};

/// Motivic equivalence of the projective quadrics: equal dim and equal Witt
/// indices at every family member.
Verdict motivic_equiv_projective(const QuadraticForm& q, const QuadraticForm& p,
                                 const ExtensionFamily& fam);

/// Main-theorem pipeline for affine quadrics: compare dims, (q, q') profiles
/// and phi-lines over the family; on full agreement attempt the odd-dimension
/// similarity + signed-determinant certification of isometry.
Verdict affine_motive_equiv(const QuadraticForm& q, const QuadraticForm& p,
                            const ExtensionFamily& fam);

}  // namespace qf
