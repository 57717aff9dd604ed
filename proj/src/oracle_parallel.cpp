#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oracle_detail.hpp"
#include "qf/oracle.hpp"

// OpenMP versions of the enumeration kernels. Each scans the same canonical
// candidate order as its serial reference in qf::oracle::serial, block by
// block, reducing to the least candidate index that hits; results are
// identical to the serial ones and independent of the schedule.

namespace qf::oracle {

namespace {

constexpr long long kBlock = 1 << 16;

template <typename Pred>
long long scan_min_hit(long long count, const Pred& pred) {
    constexpr long long kMiss = std::numeric_limits<long long>::max();
    for (long long base = 0; base < count; base += kBlock) {
        const long long end = std::min(count, base + kBlock);
        long long hit = kMiss;
#pragma omp parallel for schedule(static) reduction(min : hit)
        for (long long f = base; f < end; ++f) {
            if (pred(f) && f < hit) hit = f;
        }
        if (hit != kMiss) return hit;
    }
    return -1;
}

}  // namespace

std::optional<FqVec> bf_isotropic_vector(const Fq& F, const FqMat& gram, const SearchBudget& budget) {
    const int n = static_cast<int>(gram.size());
    if (n == 0) return std::nullopt;
    long long total = 0;
    for (int k = 0; k < n; ++k) total += detail::pow_ll(F.q(), n - 1 - k);
    if (total > budget.enumeration_cap)
        throw BudgetExceeded("bf_isotropic_vector: enumeration cap exceeded");
    for (int k = 0; k < n; ++k) {
        const long long m = detail::pow_ll(F.q(), n - 1 - k);
        long long hit = scan_min_hit(m, [&](long long f) {
            return detail::eval_gram(F, gram, detail::decode_projective(F, n, k, f)) == 0;
        });
        if (hit >= 0) return detail::decode_projective(F, n, k, hit);
    }
    return std::nullopt;
}

int bf_witt_index(const Fq& F, const FqMat& gram, const SearchBudget& budget) {
    if (gram.size() <= 1) return 0;
    auto v = bf_isotropic_vector(F, gram, budget);
    if (!v) return 0;
    return 1 + bf_witt_index(F, detail::split_hyperbolic(F, gram, *v), budget);
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
#pragma omp parallel for schedule(static) reduction(+ : count)
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
    std::atomic<bool> found{false};
    for (int pivot = 0; pivot < n && !found.load(); ++pivot) {
        const long long m = detail::pow_ll(p, n - 1 - pivot);
#pragma omp parallel for schedule(dynamic, 16)
        for (long long f = 0; f < m; ++f) {
            if (found.load(std::memory_order_relaxed)) continue;
            std::vector<Int> x(n, 0);
            x[pivot] = 1;
            long long rest = f;
            for (int i = n - 1; i > pivot; --i) {
                x[i] = rest % p;
                rest /= p;
            }
            if (detail::eval_int(entries, x) % p == 0 &&
                detail::local_dfs(entries, p, K, pivot, x, Int(p), 1))
                found.store(true, std::memory_order_relaxed);
        }
    }
    return found.load();
}

std::optional<std::vector<Int>> bf_rational_search(const QuadraticForm& q, long height) {
    if (q.field.kind != FieldKind::Rationals)
        throw FieldMismatch("bf_rational_search: form must live over Q");
    const int n = q.dim();
    if (n == 0) return std::nullopt;
    const std::vector<Int> entries = detail::cleared_entries(q);
    for (long h = 1; h <= height; ++h) {
        for (const auto& slice : detail::shell_slices(n, h)) {
            long long hit = scan_min_hit(slice.count, [&](long long f) {
                std::vector<Int> x = slice.decode(f);
                return detail::is_primitive_normalized(x) && detail::eval_int(entries, x) == 0;
            });
            if (hit >= 0) return slice.decode(hit);
        }
    }
    return std::nullopt;
}

}  // namespace qf::oracle
