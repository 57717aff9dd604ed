#pragma once

// Internal helpers shared by the serial reference kernels and the OpenMP
// kernels. Both sides enumerate the same canonical candidate order, so their
// results agree bit for bit; tests assert exactly that.

#include <optional>
#include <vector>

#include "qf/errors.hpp"
#include "qf/numeric.hpp"
#include "qf/oracle.hpp"

namespace qf::oracle::detail {

inline Fq::El eval_gram(const Fq& F, const FqMat& g, const FqVec& x) {
    Fq::El acc = 0;
    const size_t n = x.size();
    for (size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        Fq::El row = 0;
        for (size_t j = 0; j < n; ++j) row = F.add(row, F.mul(g[i][j], x[j]));
        acc = F.add(acc, F.mul(x[i], row));
    }
    return acc;
}

/// Candidates for bf_isotropic_vector: pivot k, x_0..x_{k-1} = 0, x_k = 1,
/// the n-1-k free coordinates run through an odometer (leftmost most
/// significant). flat decodes one candidate.
inline FqVec decode_projective(const Fq& F, int n, int pivot, long long flat) {
    FqVec x(n, 0);
    x[pivot] = 1;
    for (int i = n - 1; i > pivot; --i) {
        x[i] = static_cast<Fq::El>(flat % F.q());
        flat /= F.q();
    }
    return x;
}

inline long long pow_ll(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

/// Splits off one hyperbolic plane through the isotropic vector v and
/// returns the Gram matrix of the orthogonal complement.
FqMat split_hyperbolic(const Fq& F, const FqMat& gram, const FqVec& v);

/// Integer entries of q with denominators cleared (entry n/d -> n*d, the
/// same square class).
std::vector<Int> cleared_entries(const QuadraticForm& q);

/// One DFS branch of the local solvability search: x fixed mod p^level, with
/// the pivot coordinate pinned to exactly 1 (a primitive zero scales by a
/// unit to this shape) and q(x) = 0 mod p^level. Returns true iff some
/// extension fires the Hensel criterion at a level <= K.
bool local_dfs(const std::vector<Int>& entries, long p, int K, int pivot,
               std::vector<Int>& x, const Int& level_pow, int level);

/// Canonical order for bf_rational_search: shells by max-norm h, within a
/// shell by the first coordinate j attaining |x_j| = h, sign +h before -h,
/// then an odometer over the remaining coordinates in the value order
/// 0, 1, -1, 2, -2, ... Coordinates before j are capped at h-1.
struct RationalShellSlice {
    int n = 0;
    long h = 0;
    int j = 0;
    bool positive = true;
    long long count = 0;  // odometer size

    std::vector<Int> decode(long long flat) const;
};

std::vector<RationalShellSlice> shell_slices(int n, long h);

/// q(x) for integer entries; exact.
Int eval_int(const std::vector<Int>& entries, const std::vector<Int>& x);

bool is_primitive_normalized(const std::vector<Int>& x);

}  // namespace qf::oracle::detail
