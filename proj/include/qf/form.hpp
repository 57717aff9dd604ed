#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qf/fields.hpp"

namespace qf {

/// A nondegenerate diagonal quadratic form <a_1,...,a_n>. The empty form and
/// one-dimensional forms are legal; both count as anisotropic.
struct QuadraticForm {
    FieldDesc field;
    std::vector<Rational> diag;

    QuadraticForm() = default;
    /// Canonicalizes entries (residues for Finite) and rejects zeros.
    QuadraticForm(FieldDesc f, std::vector<Rational> d);

    int dim() const { return static_cast<int>(diag.size()); }
    std::string str() const;
    bool operator==(const QuadraticForm&) const = default;
};

/// Complete isometry classifier per supported field: dim, det and signed det
/// classes, Hasse symbols at the relevant places, signature.
struct InvariantTuple {
    int dim = 0;
    SquareClass det;
    SquareClass det_pm;                    // (-1)^{n(n-1)/2} * det
    std::map<Place, int> hasse;            // Rationals/Padic
    std::optional<std::pair<int, int>> signature;  // Rationals/Reals: (pos, neg)

    bool operator==(const InvariantTuple&) const = default;
};

struct SimilarityWitness {
    SquareClass lambda;        // lambda * q ~= p
    InvariantTuple scaled_q;   // invariants of scale(q, lambda)
    InvariantTuple target_p;   // invariants of p; equal to scaled_q
};

/// Diagonalize a symmetric Gram matrix by congruence. Rejects singular and
/// non-symmetric input.
QuadraticForm diagonalize(const std::vector<std::vector<Rational>>& gram, const FieldDesc& F);

InvariantTuple invariants(const QuadraticForm& q);

/// Hasse invariant at one place: prod_{i<j} (a_i, a_j)_v.
int hasse_invariant(const QuadraticForm& q, const Place& v);

/// Decides isometry by the classification of forms over the base field.
bool isometric(const QuadraticForm& q1, const QuadraticForm& q2);

/// True iff q represents c (one-dimensional convention: <a> represents
/// exactly the square class of a).
bool represents(const QuadraticForm& q, const Rational& c);

/// Searches for lambda with lambda * q ~= p. For odd dim the candidate
/// det(p)*det(q) is the only one, so a none answer is conclusive; for even
/// dim the candidate set {classes of p_i * q_j} u {1} is heuristic.
std::optional<SimilarityWitness> similar_factor(const QuadraticForm& q, const QuadraticForm& p);

/// q' = q _|_ <-1>, the form of the ambient projective quadric of {q = 1}.
QuadraticForm prime_form(const QuadraticForm& q);
QuadraticForm direct_sum(const QuadraticForm& q1, const QuadraticForm& q2);
QuadraticForm scale(const QuadraticForm& q, const Rational& lambda);

}  // namespace qf
