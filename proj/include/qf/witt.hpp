#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qf/form.hpp"

namespace qf {

/// A member of an extension family: the base field itself, F_{p^d} over a
/// finite base, the real or a p-adic completion over Q, or the formal
/// algebraically-closed member over which every form splits maximally.
struct ExtensionMember {
    enum class Kind { Base, FiniteDegree, RealPlace, PadicPlace, Kbar };
    Kind kind = Kind::Base;
    long param = 0;  // degree for FiniteDegree, prime for PadicPlace

    static ExtensionMember base() { return {Kind::Base, 0}; }
    static ExtensionMember finite_degree(long d) { return {Kind::FiniteDegree, d}; }
    static ExtensionMember real_place() { return {Kind::RealPlace, 0}; }
    static ExtensionMember padic_place(long p) { return {Kind::PadicPlace, p}; }
    static ExtensionMember kbar() { return {Kind::Kbar, 0}; }

    bool operator==(const ExtensionMember&) const = default;
    std::string str() const;
    static ExtensionMember parse(const std::string& s);
};

/// The computable stand-in for "all field extensions E/k": an explicit list
/// of members. Defaults: Q -> {Q, R, Q_2, Q_p | p relevant, kbar};
/// Finite(p) -> degrees {1,2}; Reals -> {R, kbar}; Padic -> {base, kbar}.
struct ExtensionFamily {
    FieldDesc base;
    std::vector<ExtensionMember> members;

    static ExtensionFamily default_for(const QuadraticForm& q);
    static ExtensionFamily default_for_pair(const QuadraticForm& q, const QuadraticForm& p);

    /// Checks member/base compatibility and the presence of the base and of
    /// an algebraically-closed proxy.
    void validate() const;
    bool contains(const ExtensionMember& m) const;
};

/// q ~= witt_index * H  _|_  kernel, kernel anisotropic. The kernel is the
/// explicit anisotropic part over Finite/Reals and a canonical
/// invariant-realizing diagonal over Rationals/Padic.
struct WittDecomposition {
    int witt_index = 0;
    QuadraticForm kernel;
};

bool is_isotropic(const QuadraticForm& q);

WittDecomposition witt_decompose(const QuadraticForm& q);

/// Witt index of q base-changed to the member.
int witt_index_over(const QuadraticForm& q, const ExtensionMember& E);

/// Witt data of q over a member, at invariant level: index, kernel dimension,
/// and whether q_an _|_ <-1> is isotropic over the member (the Case I/II
/// discriminator for the affine motive).
struct MemberWittData {
    int witt_index = 0;
    int kernel_dim = 0;
    bool kernel_prime_isotropic = false;
};
MemberWittData member_witt_data(const QuadraticForm& q, const ExtensionMember& E);

/// Per-member table of (i_W(q_E), i_W(q'_E)), with the observed splitting
/// pattern. Construction validates the subform implication chain.
struct Profile {
    ExtensionFamily family;
    std::vector<std::pair<int, int>> rows;  // aligned with family.members
    std::vector<int> observed_pattern;      // sorted distinct i_W(q_E)
};
Profile profile(const QuadraticForm& q, const ExtensionFamily& fam);

/// A node of the (affine) shell chain: Grassmannian index `index` of Q'
/// (primed) or Q.
struct ShellNode {
    bool primed = false;
    int index = 0;
    bool operator==(const ShellNode&) const = default;
    std::string str() const;
};

/// Partition of a node chain into shells: maximal runs of nodes whose
/// rational-point predicates (i_W > index over each family member) agree.
/// For affine shells each boundary carries its Q'-Q / Q-Q' label.
struct ShellPartition {
    std::vector<ShellNode> chain;
    std::vector<std::pair<int, int>> shells;  // [begin, end) ranges into chain
    std::vector<std::string> boundaries;      // size = max(shells.size()-1, 0)
};

ShellPartition shells(const QuadraticForm& q, const ExtensionFamily& fam);
ShellPartition affine_shells(const QuadraticForm& q, const ExtensionFamily& fam);

/// Builds a diagonal form over Q realizing a consistent invariant target
/// (dim, det, hasse, signature); deterministic, hence canonical. Used for
/// Witt kernels over Q.
QuadraticForm realize_rational_form(const InvariantTuple& target);

/// Same over Q_p for dim <= 4 anisotropic targets.
QuadraticForm realize_padic_form(int dim, const SquareClass& det, int hasse, long p);

}  // namespace qf
