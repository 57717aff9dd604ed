#include <algorithm>
#include <numeric>

#include "oracle_detail.hpp"
#include "qf/oracle.hpp"

namespace qf::oracle {

FqMat diag_gram(const Fq& F, const std::vector<long>& diag) {
    const size_t n = diag.size();
    FqMat g(n, FqVec(n, 0));
    for (size_t i = 0; i < n; ++i) g[i][i] = F.from_int(diag[i]);
    return g;
}

int default_local_exponent(const QuadraticForm& q, long p) {
    Int prod = 4;
    for (const auto& e : detail::cleared_entries(q)) prod *= e;
    return 2 * valuation(prod, Int(p)) + 3;
}

namespace detail {

FqMat split_hyperbolic(const Fq& F, const FqMat& gram, const FqVec& v) {
    const int n = static_cast<int>(gram.size());
    // r1 = G v; nonzero since G is nonsingular. w = e_i for the least i with
    // r1[i] != 0 has polar pairing b(v, w) != 0.
    FqVec r1(n, 0);
    for (int i = 0; i < n; ++i) {
        Fq::El acc = 0;
        for (int j = 0; j < n; ++j) acc = F.add(acc, F.mul(gram[i][j], v[j]));
        r1[i] = acc;
    }
    int wi = -1;
    for (int i = 0; i < n && wi < 0; ++i)
        if (r1[i] != 0) wi = i;
    if (wi < 0) throw InternalError("split_hyperbolic: singular gram matrix");
    FqVec r2 = gram[wi];  // G e_wi as a row

    // null space of the 2 x n system [r1; r2] x = 0 by Gaussian elimination
    std::vector<FqVec> rows{r1, r2};
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < 2; ++col) {
        int sel = -1;
        for (int r = rank; r < 2 && sel < 0; ++r)
            if (rows[r][col] != 0) sel = r;
        if (sel < 0) continue;
        std::swap(rows[rank], rows[sel]);
        Fq::El inv = F.inv(rows[rank][col]);
        for (int c = 0; c < n; ++c) rows[rank][c] = F.mul(rows[rank][c], inv);
        for (int r = 0; r < 2; ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Fq::El f = rows[r][col];
            for (int c = 0; c < n; ++c) rows[r][c] = F.sub(rows[r][c], F.mul(f, rows[rank][c]));
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != 2) throw InternalError("split_hyperbolic: hyperbolic pair was degenerate");

    std::vector<FqVec> basis;
    for (int col = 0; col < n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        FqVec b(n, 0);
        b[col] = 1;
        for (int r = 0; r < 2; ++r) b[pivot_col[r]] = F.neg(rows[r][col]);
        basis.push_back(b);
    }

    const int m = static_cast<int>(basis.size());
    FqMat out(m, FqVec(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Fq::El acc = 0;
            for (int r = 0; r < n; ++r) {
                if (basis[i][r] == 0) continue;
                Fq::El row = 0;
                for (int c = 0; c < n; ++c) row = F.add(row, F.mul(gram[r][c], basis[j][c]));
                acc = F.add(acc, F.mul(basis[i][r], row));
            }
            out[i][j] = acc;
        }
    return out;
}

std::vector<Int> cleared_entries(const QuadraticForm& q) {
    std::vector<Int> out;
    out.reserve(q.diag.size());
    for (const auto& a : q.diag) out.push_back(Int(numerator(a) * denominator(a)));
    return out;
}

namespace {

int val_or_max(const Int& x, long p, int cap) {
    if (x == 0) return cap;
    return std::min(valuation(x, Int(p)), cap);
}

}  // namespace

bool local_dfs(const std::vector<Int>& entries, long p, int K, int pivot,
               std::vector<Int>& x, const Int& level_pow, int level) {
    // fire check: q(x) = 0 mod p^level is the branch invariant, so the
    // Hensel criterion needs a partial derivative 2 a_i x_i of valuation
    // s with 2s < level.
    const int n = static_cast<int>(entries.size());
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        int s = valuation(Int(2 * entries[i] * x[i]), Int(p));
        if (2 * s < level) return true;
    }
    if (level >= K) return false;

    Int next_pow = level_pow * p;
    // extend every non-pivot coordinate by one digit
    std::vector<long> digits(n, 0);
    while (true) {
        for (int i = 0; i < n; ++i)
            if (i != pivot) x[i] += digits[i] * level_pow;
        Int v = 0;
        for (int i = 0; i < n; ++i) v += entries[i] * x[i] * x[i];
        bool ok = v % next_pow == 0;
        if (ok && local_dfs(entries, p, K, pivot, x, next_pow, level + 1)) {
            for (int i = 0; i < n; ++i)
                if (i != pivot) x[i] -= digits[i] * level_pow;
            return true;
        }
        for (int i = 0; i < n; ++i)
            if (i != pivot) x[i] -= digits[i] * level_pow;
        // odometer over non-pivot digits
        int k = n - 1;
        while (k >= 0) {
            if (k == pivot) {
                --k;
                continue;
            }
            if (++digits[k] < p) break;
            digits[k--] = 0;
        }
        if (k < 0) return false;
    }
}

std::vector<Int> RationalShellSlice::decode(long long flat) const {
    // value order 0, 1, -1, 2, -2, ... capped at h for coordinates after j
    // and at h-1 before j
    auto value_at = [](long long idx) -> long {
        if (idx == 0) return 0;
        long v = static_cast<long>((idx + 1) / 2);
        return idx % 2 == 1 ? v : -v;
    };
    std::vector<Int> x(n);
    for (int i = n - 1; i >= 0; --i) {
        if (i == j) {
            x[i] = positive ? h : -h;
            continue;
        }
        long long radix = (i < j) ? (2 * h - 1) : (2 * h + 1);
        x[i] = value_at(flat % radix);
        flat /= radix;
    }
    return x;
}

std::vector<RationalShellSlice> shell_slices(int n, long h) {
    std::vector<RationalShellSlice> out;
    for (int j = 0; j < n; ++j) {
        long long count = 1;
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            count *= (i < j) ? (2 * h - 1) : (2 * h + 1);
        }
        out.push_back({n, h, j, true, count});
        out.push_back({n, h, j, false, count});
    }
    return out;
}

Int eval_int(const std::vector<Int>& entries, const std::vector<Int>& x) {
    Int v = 0;
    for (size_t i = 0; i < entries.size(); ++i) v += entries[i] * x[i] * x[i];
    return v;
}

bool is_primitive_normalized(const std::vector<Int>& x) {
    using boost::multiprecision::gcd;
    Int g = 0;
    for (const auto& c : x) {
        if (g == 0 && c != 0 && c < 0) return false;  // first nonzero must be positive
        if (g == 0 && c != 0 && c > 0) g = c;
        else if (c != 0) g = gcd(g, Int(c < 0 ? -c : c));
    }
    return g == 1;
}

}  // namespace detail

namespace serial {

std::optional<FqVec> bf_isotropic_vector(const Fq& F, const FqMat& gram, const SearchBudget& budget) {
    const int n = static_cast<int>(gram.size());
    if (n == 0) return std::nullopt;
    long long total = 0;
    for (int k = 0; k < n; ++k) total += detail::pow_ll(F.q(), n - 1 - k);
    if (total > budget.enumeration_cap)
        throw BudgetExceeded("bf_isotropic_vector: enumeration cap exceeded");
    for (int k = 0; k < n; ++k) {
        const long long m = detail::pow_ll(F.q(), n - 1 - k);
        for (long long f = 0; f < m; ++f) {
            FqVec x = detail::decode_projective(F, n, k, f);
            if (detail::eval_gram(F, gram, x) == 0) return x;
        }
    }
    return std::nullopt;
}

int bf_witt_index(const Fq& F, const FqMat& gram, const SearchBudget& budget) {
    if (gram.size() <= 1) return 0;
    auto v = serial::bf_isotropic_vector(F, gram, budget);
    if (!v) return 0;
    return 1 + serial::bf_witt_index(F, detail::split_hyperbolic(F, gram, *v), budget);
}

long long bf_count_affine(const Fq& F, const std::vector<long>& diag, long c,
                          const SearchBudget& budget) {
    const int n = static_cast<int>(diag.size());
    const long long total = detail::pow_ll(F.q(), n);
    if (total > budget.enumeration_cap)
        throw BudgetExceeded("bf_count_affine: enumeration cap exceeded");
    std::vector<Fq::El> d(n);
    for (int i = 0; i < n; ++i) d[i] = F.from_int(diag[i]);
    const Fq::El target = F.from_int(c);
    long long count = 0;
    for (long long flat = 0; flat < total; ++flat) {
        long long rest = flat;
        Fq::El acc = 0;
        for (int i = 0; i < n; ++i) {
            Fq::El xi = static_cast<Fq::El>(rest % F.q());
            rest /= F.q();
            acc = F.add(acc, F.mul(d[i], F.mul(xi, xi)));
        }
        if (acc == target) ++count;
    }
    return count;
}

bool bf_local_solvable(const QuadraticForm& q, long p, int K) {
    if (!is_prime(Int(p))) throw InvalidPrime("bf_local_solvable: p must be prime");
    if (q.dim() == 0) return false;
    if (K <= 0) K = default_local_exponent(q, p);
    const std::vector<Int> entries = detail::cleared_entries(q);
    const int n = q.dim();
    // The pivot is the first coordinate that is a unit; scaling by its
    // inverse pins it to 1 and leaves everything before it = 0 mod p.
    for (int pivot = 0; pivot < n; ++pivot) {
        const long long m = detail::pow_ll(p, n - 1 - pivot);
        for (long long f = 0; f < m; ++f) {
            std::vector<Int> x(n, 0);
            x[pivot] = 1;
            long long rest = f;
            for (int i = n - 1; i > pivot; --i) {
                x[i] = rest % p;
                rest /= p;
            }
            if (detail::eval_int(entries, x) % p == 0 &&
                detail::local_dfs(entries, p, K, pivot, x, Int(p), 1))
                return true;
        }
    }
    return false;
}

std::optional<std::vector<Int>> bf_rational_search(const QuadraticForm& q, long height) {
    if (q.field.kind != FieldKind::Rationals)
        throw FieldMismatch("bf_rational_search: form must live over Q");
    const int n = q.dim();
    if (n == 0) return std::nullopt;
    const std::vector<Int> entries = detail::cleared_entries(q);
    for (long h = 1; h <= height; ++h) {
        for (const auto& slice : detail::shell_slices(n, h)) {
            for (long long f = 0; f < slice.count; ++f) {
                std::vector<Int> x = slice.decode(f);
                if (!detail::is_primitive_normalized(x)) continue;
                if (detail::eval_int(entries, x) == 0) return x;
            }
        }
    }
    return std::nullopt;
}

}  // namespace serial

}  // namespace qf::oracle
