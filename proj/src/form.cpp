#include "qf/form.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qf/errors.hpp"
#include "qf/witt.hpp"

namespace qf {

namespace {

Rational canonical_entry(const Rational& a, const FieldDesc& F) {
    if (a == 0) throw ZeroScalar("form entry must be nonzero");
    if (F.kind == FieldKind::Finite) {
        long r = mod_reduce(a, F.p);
        if (r == 0) throw ZeroScalar("form entry is zero in F_p");
        return Rational(r);
    }
    return a;
}

}  // namespace

QuadraticForm::QuadraticForm(FieldDesc f, std::vector<Rational> d) : field(std::move(f)) {
    diag.reserve(d.size());
    for (const auto& a : d) diag.push_back(canonical_entry(a, field));
}

std::string QuadraticForm::str() const {
    std::ostringstream os;
    os << "<";
    for (size_t i = 0; i < diag.size(); ++i) {
        if (i) os << ",";
        os << diag[i];
    }
    os << "> over " << field.str();
    return os.str();
}

QuadraticForm diagonalize(const std::vector<std::vector<Rational>>& gram, const FieldDesc& F) {
    const size_t n = gram.size();
    for (const auto& row : gram)
        if (row.size() != n) throw NotSymmetric();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i]) throw NotSymmetric();

    auto reduce = [&](const Rational& x) -> Rational {
        if (F.kind == FieldKind::Finite) return Rational(mod_reduce(x, F.p));
        return x;
    };

    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) g[i][j] = reduce(gram[i][j]);

    // Symmetric Gaussian elimination by congruence: at step k ensure
    // g[k][k] != 0 (diagonal swap, or the char != 2 trick of adding row and
    // column j), then clear column and row k.
    std::vector<Rational> diag;
    for (size_t k = 0; k < n; ++k) {
        if (g[k][k] == 0) {
            size_t pivot = n;
            for (size_t i = k + 1; i < n && pivot == n; ++i)
                if (g[i][i] != 0) pivot = i;
            if (pivot != n) {
                std::swap(g[k], g[pivot]);
                for (size_t i = 0; i < n; ++i) std::swap(g[i][k], g[i][pivot]);
            } else {
                size_t j = n;
                for (size_t c = k + 1; c < n && j == n; ++c)
                    if (g[k][c] != 0) j = c;
                if (j == n) throw DegenerateForm("gram matrix is singular");
                // remaining diagonal is zero, so this yields g[k][k] = 2 g[k][j] != 0
                for (size_t r = 0; r < n; ++r) g[r][k] = reduce(g[r][k] + g[r][j]);
                for (size_t c = 0; c < n; ++c) g[k][c] = reduce(g[k][c] + g[j][c]);
            }
        }
        const Rational pivot = g[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (g[i][k] == 0) continue;
            const Rational c = g[i][k] / pivot;
            for (size_t r = 0; r < n; ++r) g[r][i] = reduce(g[r][i] - c * g[r][k]);
            for (size_t col = 0; col < n; ++col) g[i][col] = reduce(g[i][col] - c * g[k][col]);
        }
        diag.push_back(pivot);
    }
    return QuadraticForm(F, diag);
}

InvariantTuple invariants(const QuadraticForm& q) {
    InvariantTuple t;
    t.dim = q.dim();
    Rational prod = 1;
    for (const auto& a : q.diag) prod *= a;
    t.det = q.dim() == 0 ? SquareClass{q.field, 1} : square_class(prod, q.field);
    long sgn_exp = static_cast<long>(q.dim()) * (q.dim() - 1) / 2;
    Rational signed_prod = (sgn_exp % 2 == 0) ? prod : -prod;
    t.det_pm = q.dim() == 0 ? t.det : square_class(signed_prod, q.field);

    if (q.field.kind == FieldKind::Rationals || q.field.kind == FieldKind::Reals) {
        int pos = 0, neg = 0;
        for (const auto& a : q.diag) (a > 0 ? pos : neg)++;
        t.signature = {pos, neg};
    }
    if (q.field.kind == FieldKind::Rationals) {
        for (const auto& v : relevant_places(q)) t.hasse[v] = hasse_invariant(q, v);
    } else if (q.field.kind == FieldKind::Padic) {
        Place v = Place::padic(q.field.p);
        t.hasse[v] = hasse_invariant(q, v);
    }
    return t;
}

int hasse_invariant(const QuadraticForm& q, const Place& v) {
    int s = 1;
    for (int i = 0; i < q.dim(); ++i)
        for (int j = i + 1; j < q.dim(); ++j) s *= hilbert_symbol(q.diag[i], q.diag[j], v);
    return s;
}

bool isometric(const QuadraticForm& q1, const QuadraticForm& q2) {
    if (q1.field != q2.field) throw FieldMismatch("isometric: forms over different fields");
    if (q1.dim() != q2.dim()) return false;
    if (q1.dim() == 0) return true;
    InvariantTuple a = invariants(q1), b = invariants(q2);
    switch (q1.field.kind) {
        case FieldKind::Finite:
            return a.det == b.det;
        case FieldKind::Reals:
            return a.signature == b.signature;
        case FieldKind::Padic:
            return a.det == b.det && a.hasse == b.hasse;
        case FieldKind::Rationals: {
            if (a.signature != b.signature || !(a.det == b.det)) return false;
            // compare Hasse symbols on the union of both relevant sets;
            // omitted places carry +1 by construction
            std::set<Place> places;
            for (const auto& [v, s] : a.hasse) places.insert(v);
            for (const auto& [v, s] : b.hasse) places.insert(v);
            for (const auto& v : places) {
                int sa = a.hasse.count(v) ? a.hasse.at(v) : 1;
                int sb = b.hasse.count(v) ? b.hasse.at(v) : 1;
                if (sa != sb) return false;
            }
            return true;
        }
    }
    throw InternalError("isometric: unknown field kind");
}

bool represents(const QuadraticForm& q, const Rational& c) {
    if (c == 0) throw ZeroScalar("represents: c must be nonzero");
    if (q.dim() == 0) return false;
    return is_isotropic(direct_sum(q, QuadraticForm(q.field, {-c})));
}

std::optional<SimilarityWitness> similar_factor(const QuadraticForm& q, const QuadraticForm& p) {
    if (q.field != p.field) throw FieldMismatch("similar_factor: forms over different fields");
    if (q.dim() != p.dim()) throw DimMismatch("similar_factor: dimensions differ");
    auto try_lambda = [&](const SquareClass& lam) -> std::optional<SimilarityWitness> {
        QuadraticForm scaled = scale(q, Rational(lam.rep));
        if (isometric(scaled, p)) return SimilarityWitness{lam, invariants(scaled), invariants(p)};
        return std::nullopt;
    };
    if (q.dim() == 0) {
        SquareClass one{q.field, 1};
        return SimilarityWitness{one, invariants(q), invariants(p)};
    }
    if (q.dim() % 2 == 1) {
        // lambda^n ~ lambda for odd n forces lambda = det(p) * det(q)
        SquareClass lam = sq_mul(invariants(p).det, invariants(q).det);
        return try_lambda(lam);
    }
    std::set<Int> seen;
    std::vector<SquareClass> candidates{SquareClass{q.field, 1}};
    seen.insert(Int(1));
    for (const auto& pi : p.diag)
        for (const auto& qj : q.diag) {
            SquareClass c = square_class(pi * qj, q.field);
            if (seen.insert(c.rep).second) candidates.push_back(c);
        }
    for (const auto& lam : candidates)
        if (auto w = try_lambda(lam)) return w;
    return std::nullopt;  // inconclusive for even dim
}

QuadraticForm prime_form(const QuadraticForm& q) {
    QuadraticForm out = q;
    out.diag.push_back(canonical_entry(Rational(-1), q.field));
    return out;
}

QuadraticForm direct_sum(const QuadraticForm& q1, const QuadraticForm& q2) {
    if (q1.field != q2.field) throw FieldMismatch("direct_sum: forms over different fields");
    QuadraticForm out = q1;
    out.diag.insert(out.diag.end(), q2.diag.begin(), q2.diag.end());
    return out;
}

QuadraticForm scale(const QuadraticForm& q, const Rational& lambda) {
    if (lambda == 0) throw ZeroScalar("scale: lambda must be nonzero");
    std::vector<Rational> d;
    d.reserve(q.diag.size());
    for (const auto& a : q.diag) d.push_back(a * lambda);
    return QuadraticForm(q.field, d);
}

}  // namespace qf
