#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qf/form.hpp"
#include "qf/fq.hpp"

namespace qf::oracle {

/// Enumeration budgets. Defaults are documented in the CLI help.
struct SearchBudget {
    long field_size_cap = 2401;               // largest p^d the Fq tables accept
    long long enumeration_cap = 200000000;    // points visited per kernel call
};

using FqVec = std::vector<Fq::El>;
using FqMat = std::vector<std::vector<Fq::El>>;

/// Gram matrix of the diagonal form with the given integer entries.
FqMat diag_gram(const Fq& F, const std::vector<long>& diag);

/// Default Hensel exponent for bf_local_solvable: 2 v_p(4 prod a_i) + 3 on
/// the denominator-cleared entries. A primitive zero x in Z_p has some unit
/// coordinate x_j, so v_p(d q/d x_j) = v_p(2 a_j) <= v_p(2 prod a_i) < K/2,
/// which makes the mod-p^K criterion complete as well as sound.
int default_local_exponent(const QuadraticForm& q, long p);

/// The public kernels run OpenMP-parallel enumeration. qf::oracle::serial
/// holds the plain reference implementations; both sides enumerate in the
/// same canonical order and return identical results.
namespace serial {

std::optional<FqVec> bf_isotropic_vector(const Fq& F, const FqMat& gram,
                                         const SearchBudget& budget = {});
int bf_witt_index(const Fq& F, const FqMat& gram, const SearchBudget& budget = {});
long long bf_count_affine(const Fq& F, const std::vector<long>& diag, long c,
                          const SearchBudget& budget = {});
bool bf_local_solvable(const QuadraticForm& q, long p, int K = 0);
std::optional<std::vector<Int>> bf_rational_search(const QuadraticForm& q, long height);

}  // namespace serial

/// First isotropic vector of the form (up to projective scaling: first
/// nonzero coordinate is 1) in canonical order, or none after exhausting the
/// space.
std::optional<FqVec> bf_isotropic_vector(const Fq& F, const FqMat& gram,
                                         const SearchBudget& budget = {});

/// Witt index by explicit hyperbolic splitting: find an isotropic vector,
/// complete it to a hyperbolic plane, restrict to the orthogonal complement,
/// recurse. Basis independent.
int bf_witt_index(const Fq& F, const FqMat& gram, const SearchBudget& budget = {});

/// #{x in F_q^n : q(x) = c} by full enumeration.
long long bf_count_affine(const Fq& F, const std::vector<long>& diag, long c,
                          const SearchBudget& budget = {});

/// True iff q = 0 has a primitive solution mod p^K passing the Hensel
/// nonsingularity criterion (some partial derivative of valuation < K/2).
/// K = 0 selects default_local_exponent. True implies q is isotropic over
/// Q_p; with the default K, false implies anisotropic.
bool bf_local_solvable(const QuadraticForm& q, long p, int K = 0);

/// First primitive integer zero of q of height (max-norm) <= height in a
/// fixed canonical order, or none. A none answer is not a proof of
/// anisotropy.
std::optional<std::vector<Int>> bf_rational_search(const QuadraticForm& q, long height);

/// Desk-scale proxy of the main theorem over F_p: enumerate all diagonal
/// forms up to entry square classes, dims 0..maxdim, and check that the
/// motivic data over degrees {1,2} (Witt profiles of q, q' and the reduced
/// affine phi-line) agree exactly for isometric pairs and only for them.
/// Isometry and the engine Witt indices are cross-checked against
/// enumeration oracles that do not share code with the engine.
struct TheoremCheckReport {
    long p = 0;
    int maxdim = 0;
    long forms = 0;
    long long pairs = 0;
    long violations = 0;
    long witt_oracle_mismatches = 0;
    std::vector<std::string> notes;
};
TheoremCheckReport exhaustive_theorem_check(long p, int maxdim);

}  // namespace qf::oracle
