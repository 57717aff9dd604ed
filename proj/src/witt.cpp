#include "qf/witt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qf/errors.hpp"

namespace qf {

// ---------------------------------------------------------------------------
// Extension members and families

std::string ExtensionMember::str() const {
    switch (kind) {
        case Kind::Base: return "base";
        case Kind::FiniteDegree: return "deg_" + std::to_string(param);
        case Kind::RealPlace: return "R";
        case Kind::PadicPlace: return "Q_" + std::to_string(param);
        case Kind::Kbar: return "kbar";
    }
    return "?";
}

ExtensionMember ExtensionMember::parse(const std::string& s) {
    if (s == "base" || s == "Q") return base();
    if (s == "R") return real_place();
    if (s == "kbar") return kbar();
    if (s.rfind("deg_", 0) == 0) {
        long d = std::stol(s.substr(4));
        if (d < 1) throw UnknownExtension("bad degree member: " + s);
        return finite_degree(d);
    }
    if (s.rfind("Q_", 0) == 0) {
        long p = std::stol(s.substr(2));
        return padic_place(p);
    }
    throw UnknownExtension("unknown extension member: " + s);
}

namespace {

bool member_compatible(const FieldDesc& base, const ExtensionMember& m) {
    switch (m.kind) {
        case ExtensionMember::Kind::Base:
        case ExtensionMember::Kind::Kbar:
            return true;
        case ExtensionMember::Kind::FiniteDegree:
            return base.kind == FieldKind::Finite && m.param >= 1;
        case ExtensionMember::Kind::RealPlace:
            return base.kind == FieldKind::Rationals || base.kind == FieldKind::Reals;
        case ExtensionMember::Kind::PadicPlace:
            return (base.kind == FieldKind::Rationals && is_prime(Int(m.param))) ||
                   (base.kind == FieldKind::Padic && base.p == m.param);
    }
    return false;
}

}  // namespace

ExtensionFamily ExtensionFamily::default_for(const QuadraticForm& q) {
    ExtensionFamily fam;
    fam.base = q.field;
    switch (q.field.kind) {
        case FieldKind::Rationals: {
            fam.members.push_back(ExtensionMember::base());
            fam.members.push_back(ExtensionMember::real_place());
            for (const auto& v : relevant_places(q))
                if (!v.real) fam.members.push_back(ExtensionMember::padic_place(v.p));
            fam.members.push_back(ExtensionMember::kbar());
            break;
        }
        case FieldKind::Finite:
            fam.members.push_back(ExtensionMember::finite_degree(1));
            fam.members.push_back(ExtensionMember::finite_degree(2));
            break;
        case FieldKind::Reals:
            fam.members.push_back(ExtensionMember::base());
            fam.members.push_back(ExtensionMember::kbar());
            break;
        case FieldKind::Padic:
            fam.members.push_back(ExtensionMember::base());
            fam.members.push_back(ExtensionMember::kbar());
            break;
    }
    return fam;
}

ExtensionFamily ExtensionFamily::default_for_pair(const QuadraticForm& q, const QuadraticForm& p) {
    if (q.field != p.field) throw FieldMismatch("family: forms over different fields");
    ExtensionFamily fam = default_for(q);
    if (q.field.kind == FieldKind::Rationals) {
        ExtensionFamily fp = default_for(p);
        for (const auto& m : fp.members)
            if (!fam.contains(m)) fam.members.push_back(m);
        // keep padic members sorted between R and kbar for stable output
        std::stable_sort(fam.members.begin(), fam.members.end(),
                         [](const ExtensionMember& a, const ExtensionMember& b) {
                             auto key = [](const ExtensionMember& m) {
                                 switch (m.kind) {
                                     case ExtensionMember::Kind::Base: return std::pair<int, long>{0, 0};
                                     case ExtensionMember::Kind::RealPlace: return std::pair<int, long>{1, 0};
                                     case ExtensionMember::Kind::PadicPlace: return std::pair<int, long>{2, m.param};
                                     case ExtensionMember::Kind::FiniteDegree: return std::pair<int, long>{3, m.param};
                                     case ExtensionMember::Kind::Kbar: return std::pair<int, long>{4, 0};
                                 }
                                 return std::pair<int, long>{5, 0};
                             };
                             return key(a) < key(b);
                         });
    }
    return fam;
}

bool ExtensionFamily::contains(const ExtensionMember& m) const {
    return std::find(members.begin(), members.end(), m) != members.end();
}

void ExtensionFamily::validate() const {
    if (members.empty()) throw UnknownExtension("empty extension family");
    for (const auto& m : members)
        if (!member_compatible(base, m))
            throw UnknownExtension("member " + m.str() + " invalid over " + base.str());
    bool has_base = false, has_closure = false;
    for (const auto& m : members) {
        if (m.kind == ExtensionMember::Kind::Base ||
            (m.kind == ExtensionMember::Kind::FiniteDegree && m.param == 1) ||
            (m.kind == ExtensionMember::Kind::RealPlace && base.kind == FieldKind::Reals))
            has_base = true;
        if (m.kind == ExtensionMember::Kind::Kbar ||
            (m.kind == ExtensionMember::Kind::FiniteDegree && m.param % 2 == 0))
            has_closure = true;
    }
    if (!has_base) throw UnknownExtension("family must contain the base field");
    if (!has_closure) throw UnknownExtension("family must contain an algebraically-closed proxy");
}

// ---------------------------------------------------------------------------
// Invariant-level isotropy over completions
//
// Conventions (pinned by the bf_local_solvable oracle, see tests): the Hasse
// invariant at v is prod_{i<j} (a_i, a_j)_v. A form of rank 3 is isotropic
// over Q_v iff eps_v = (-1, -d)_v; of rank 4 iff d != 1 in Q_v* or
// eps_v = (-1, -1)_v; rank >= 5 always.

namespace {

struct LocalTuple {
    int dim = 0;
    Rational det = 1;  // any representative of the det class
    int eps = 1;       // Hasse invariant at the place
};

bool locally_isotropic(const LocalTuple& t, const Place& v) {
    if (t.dim <= 1) return false;
    if (v.real) {
        // only reachable with an explicit signature; callers handle R directly
        throw InternalError("locally_isotropic: real place requires signature");
    }
    switch (t.dim) {
        case 2: return is_local_square(-t.det, v);
        case 3: return t.eps == hilbert_symbol(Rational(-1), -t.det, v);
        case 4: return !is_local_square(t.det, v) || t.eps == hilbert_symbol(Rational(-1), Rational(-1), v);
        default: return true;
    }
}

// q = H _|_ q1:  det(q1) = -det(q),  eps(q1) = eps(q) * (-1, det(q1))_v.
LocalTuple strip_h(const LocalTuple& t, const Place& v) {
    LocalTuple out;
    out.dim = t.dim - 2;
    out.det = -t.det;
    out.eps = t.eps * hilbert_symbol(Rational(-1), out.det, v);
    return out;
}

// Invariant tuple of q over Q with hasse tracked on a fixed place set. The
// tracked set (relevant places of the original form) stays sufficient under
// H-stripping: the det class keeps its prime support and (-1, .) symbols are
// trivial at omitted odd places.
struct GlobalTuple {
    int dim = 0;
    SquareClass det;
    std::map<Place, int> hasse;
    int pos = 0, neg = 0;
};

GlobalTuple global_tuple(const QuadraticForm& q) {
    InvariantTuple t = invariants(q);
    GlobalTuple g;
    g.dim = t.dim;
    g.det = t.det;
    g.hasse = t.hasse;
    g.pos = t.signature->first;
    g.neg = t.signature->second;
    return g;
}

bool globally_isotropic(const GlobalTuple& g) {
    if (g.dim <= 1) return false;
    if (g.pos == 0 || g.neg == 0) return false;
    if (g.dim == 2) return sq_mul(SquareClass{g.det.field, -1}, g.det).is_one();
    if (g.dim >= 5) return true;
    for (const auto& [v, eps] : g.hasse) {
        if (v.real) continue;
        if (!locally_isotropic({g.dim, Rational(g.det.rep), eps}, v)) return false;
    }
    return true;
}

GlobalTuple strip_h(const GlobalTuple& g) {
    GlobalTuple out = g;
    out.dim -= 2;
    out.det = sq_mul(SquareClass{g.det.field, -1}, g.det);
    out.pos -= 1;
    out.neg -= 1;
    for (auto& [v, eps] : out.hasse)
        eps = g.hasse.at(v) * hilbert_symbol(Rational(-1), Rational(out.det.rep), v);
    return out;
}

// Square class representatives of Q_p*/(Q_p*)^2 in a fixed order.
std::vector<Rational> padic_class_reps(long p) {
    std::vector<Rational> reps;
    if (p == 2) {
        for (long u : {1, 3, 5, 7}) reps.push_back(Rational(u));
        for (long u : {1, 3, 5, 7}) reps.push_back(Rational(2 * u));
    } else {
        long r = least_nonresidue(p);
        reps = {Rational(1), Rational(r), Rational(p), Rational(p * r)};
    }
    return reps;
}

int finite_witt_index(const QuadraticForm& q, long degree);

}  // namespace

// ---------------------------------------------------------------------------
// Isotropy and decomposition over the base field

bool is_isotropic(const QuadraticForm& q) {
    const int n = q.dim();
    if (n <= 1) return false;
    switch (q.field.kind) {
        case FieldKind::Finite: {
            if (n >= 3) return true;
            SquareClass md = square_class(-q.diag[0] * q.diag[1], q.field);
            return md.is_one();
        }
        case FieldKind::Reals: {
            auto t = invariants(q);
            return t.signature->first > 0 && t.signature->second > 0;
        }
        case FieldKind::Padic: {
            Place v = Place::padic(q.field.p);
            Rational det = 1;
            for (const auto& a : q.diag) det *= a;
            return locally_isotropic({n, det, hasse_invariant(q, v)}, v);
        }
        case FieldKind::Rationals:
            return globally_isotropic(global_tuple(q));
    }
    throw InternalError("is_isotropic: unknown field kind");
}

namespace {

// Explicit anisotropic kernel over F_p from (dim, det class).
QuadraticForm finite_kernel(const FieldDesc& F, int kernel_dim, const SquareClass& kdet) {
    if (kernel_dim == 0) return QuadraticForm(F, {});
    if (kernel_dim == 1) return QuadraticForm(F, {Rational(kdet.rep)});
    return QuadraticForm(F, {Rational(1), Rational(kdet.rep)});
}

}  // namespace

QuadraticForm realize_padic_form(int dim, const SquareClass& det, int hasse, long p) {
    FieldDesc F = FieldDesc::padic(p);
    Place v = Place::padic(p);
    if (dim == 0) {
        if (!det.is_one() || hasse != 1) throw InternalError("realize_padic_form: bad empty target");
        return QuadraticForm(F, {});
    }
    if (dim > 4) throw InternalError("realize_padic_form: anisotropic targets have dim <= 4");
    auto reps = padic_class_reps(p);
    std::vector<size_t> idx(dim, 0);
    while (true) {
        std::vector<Rational> entries;
        entries.reserve(dim);
        Rational prod = 1;
        for (int i = 0; i < dim; ++i) {
            entries.push_back(reps[idx[i]]);
            prod *= reps[idx[i]];
        }
        if (square_class(prod, F) == det) {
            QuadraticForm cand(F, entries);
            if (hasse_invariant(cand, v) == hasse && !is_isotropic(cand)) return cand;
        }
        int k = dim - 1;
        while (k >= 0 && ++idx[k] == reps.size()) idx[k--] = 0;
        if (k < 0) break;
    }
    throw InternalError("realize_padic_form: no representative found (inconsistent target)");
}

namespace {

// Invariant-level local representability: does a form over Q with the given
// global data represent a at the finite place v? Decided as isotropy of
// q _|_ <-a> from transformed invariants.
bool represents_locally(const GlobalTuple& g, const Rational& a, const Place& v) {
    LocalTuple t;
    t.dim = g.dim + 1;
    t.det = Rational(g.det.rep) * -a;
    int eps = g.hasse.count(v) ? g.hasse.at(v) : 1;
    t.eps = eps * hilbert_symbol(Rational(g.det.rep), -a, v);
    if (g.dim == 0) return false;
    // dim-1 convention: <d> represents exactly the class of d
    if (g.dim == 1) return is_local_square(Rational(g.det.rep) * a, v);
    return locally_isotropic(t, v);
}

std::set<Place> places_of_candidate(const Rational& a) {
    std::set<Place> out{Place::padic(2)};
    Int sf = squarefree_part(a);
    if (sf < 0) sf = -sf;
    for (const auto& [p, e] : factorize(sf)) out.insert(Place::padic(static_cast<long>(p)));
    return out;
}

// q = <a> _|_ q1:  det(q1) = det(q) * a,  eps(q1) = eps(q) * (a, det q1)_v.
// Primes of a join the tracked place set first (they carried +1 so far).
GlobalTuple remove_entry(const GlobalTuple& g, const Rational& a) {
    GlobalTuple in = g;
    for (const auto& v : places_of_candidate(a))
        if (!in.hasse.count(v)) in.hasse[v] = 1;
    GlobalTuple out = in;
    out.dim -= 1;
    out.det = sq_mul(g.det, square_class(a, g.det.field));
    (a > 0 ? out.pos : out.neg) -= 1;
    for (auto& [v, eps] : out.hasse)
        eps = in.hasse.at(v) * hilbert_symbol(a, Rational(out.det.rep), v);
    return out;
}

// Enumerate squarefree integers ordered by (|a|, positive first).
struct SquarefreeCandidates {
    Int mag = 0;
    bool neg_next = false;
    Rational next() {
        if (neg_next) {
            neg_next = false;
            return Rational(-mag);
        }
        do {
            ++mag;
        } while (squarefree_part(mag) != mag);
        neg_next = true;
        return Rational(mag);
    }
};

Rational find_represented(const GlobalTuple& g) {
    SquarefreeCandidates gen;
    for (int guard = 0; guard < 2000000; ++guard) {
        Rational a = gen.next();
        if (a > 0 && g.pos == 0) continue;
        if (a < 0 && g.neg == 0) continue;
        std::set<Place> places = places_of_candidate(a);
        for (const auto& [v, eps] : g.hasse)
            if (!v.real) places.insert(v);
        bool ok = true;
        for (const auto& v : places)
            if (!represents_locally(g, a, v)) {
                ok = false;
                break;
            }
        if (ok) return a;
    }
    throw InternalError("realize_rational_form: no represented value found");
}

QuadraticForm realize_global(GlobalTuple g) {
    FieldDesc F = FieldDesc::rationals();
    std::vector<Rational> entries;
    while (g.dim > 1) {
        Rational a = find_represented(g);
        entries.push_back(a);
        g = remove_entry(g, a);
    }
    if (g.dim == 1) entries.push_back(Rational(g.det.rep));
    return QuadraticForm(F, entries);
}

}  // namespace

QuadraticForm realize_rational_form(const InvariantTuple& target) {
    GlobalTuple g;
    g.dim = target.dim;
    g.det = target.det;
    g.hasse = target.hasse;
    if (!target.signature) throw InternalError("realize_rational_form: missing signature");
    g.pos = target.signature->first;
    g.neg = target.signature->second;
    if (g.pos + g.neg != g.dim) throw InternalError("realize_rational_form: signature/dim mismatch");
    QuadraticForm out = realize_global(g);
    return out;
}

WittDecomposition witt_decompose(const QuadraticForm& q) {
    const FieldDesc& F = q.field;
    switch (F.kind) {
        case FieldKind::Finite: {
            int n = q.dim();
            if (n == 0) return {0, QuadraticForm(F, {})};
            SquareClass det = invariants(q).det;
            if (n % 2 == 1) {
                int iw = (n - 1) / 2;
                SquareClass kdet = iw % 2 == 0 ? det : sq_mul(det, sq_of(-1, F));
                return {iw, finite_kernel(F, 1, kdet)};
            }
            SquareClass h = det;
            if ((n / 2) % 2 == 1) h = sq_mul(h, sq_of(-1, F));
            if (h.is_one()) return {n / 2, QuadraticForm(F, {})};
            int iw = n / 2 - 1;
            SquareClass kdet = iw % 2 == 0 ? det : sq_mul(det, sq_of(-1, F));
            return {iw, finite_kernel(F, 2, kdet)};
        }
        case FieldKind::Reals: {
            auto [pos, neg] = *invariants(q).signature;
            int iw = std::min(pos, neg);
            std::vector<Rational> k(std::abs(pos - neg), Rational(pos >= neg ? 1 : -1));
            return {iw, QuadraticForm(F, k)};
        }
        case FieldKind::Padic: {
            Place v = Place::padic(F.p);
            Rational det = 1;
            for (const auto& a : q.diag) det *= a;
            LocalTuple t{q.dim(), q.dim() == 0 ? Rational(1) : det, hasse_invariant(q, v)};
            int iw = 0;
            while (locally_isotropic(t, v)) {
                t = strip_h(t, v);
                ++iw;
            }
            SquareClass kdet = q.dim() == 0 ? SquareClass{F, 1} : square_class(t.det, F);
            return {iw, realize_padic_form(t.dim, kdet, t.eps, F.p)};
        }
        case FieldKind::Rationals: {
            GlobalTuple g = global_tuple(q);
            int iw = 0;
            while (globally_isotropic(g)) {
                g = strip_h(g);
                ++iw;
            }
            return {iw, realize_global(g)};
        }
    }
    throw InternalError("witt_decompose: unknown field kind");
}

namespace {

// Closed-form Witt index over F_{p^d}: an element of F_p* is a square in
// F_{p^d} iff it is a square in F_p or d is even.
int finite_witt_index(const QuadraticForm& q, long degree) {
    const int n = q.dim();
    if (n <= 1) return 0;
    if (n % 2 == 1) return (n - 1) / 2;
    SquareClass h = invariants(q).det;
    if ((n / 2) % 2 == 1) h = sq_mul(h, sq_of(-1, q.field));
    bool square_in_ext = h.is_one() || degree % 2 == 0;
    return square_in_ext ? n / 2 : n / 2 - 1;
}

LocalTuple local_tuple_at(const QuadraticForm& q, const Place& v) {
    Rational det = 1;
    for (const auto& a : q.diag) det *= a;
    return {q.dim(), q.dim() == 0 ? Rational(1) : det, hasse_invariant(q, v)};
}

int padic_witt_index(const QuadraticForm& q, const Place& v) {
    LocalTuple t = local_tuple_at(q, v);
    int iw = 0;
    while (locally_isotropic(t, v)) {
        t = strip_h(t, v);
        ++iw;
    }
    return iw;
}

void check_member(const QuadraticForm& q, const ExtensionMember& E) {
    if (!member_compatible(q.field, E))
        throw UnknownExtension("member " + E.str() + " invalid over " + q.field.str());
}

}  // namespace

int witt_index_over(const QuadraticForm& q, const ExtensionMember& E) {
    check_member(q, E);
    switch (E.kind) {
        case ExtensionMember::Kind::Base:
            return witt_decompose(q).witt_index;
        case ExtensionMember::Kind::Kbar:
            return q.dim() / 2;
        case ExtensionMember::Kind::FiniteDegree:
            if (E.param == 1) return witt_decompose(q).witt_index;
            return finite_witt_index(q, E.param);
        case ExtensionMember::Kind::RealPlace: {
            if (q.field.kind == FieldKind::Reals) return witt_decompose(q).witt_index;
            auto [pos, neg] = *invariants(q).signature;
            return std::min(pos, neg);
        }
        case ExtensionMember::Kind::PadicPlace:
            return padic_witt_index(q, Place::padic(E.param));
    }
    throw InternalError("witt_index_over: unknown member kind");
}

MemberWittData member_witt_data(const QuadraticForm& q, const ExtensionMember& E) {
    check_member(q, E);
    MemberWittData out;
    switch (E.kind) {
        case ExtensionMember::Kind::Base: {
            WittDecomposition wd = witt_decompose(q);
            out.witt_index = wd.witt_index;
            out.kernel_dim = wd.kernel.dim();
            out.kernel_prime_isotropic = is_isotropic(prime_form(wd.kernel));
            return out;
        }
        case ExtensionMember::Kind::Kbar: {
            out.witt_index = q.dim() / 2;
            out.kernel_dim = q.dim() % 2;
            // empty kernel: <-1> stays anisotropic; <c>: c is a square over kbar
            out.kernel_prime_isotropic = out.kernel_dim == 1;
            return out;
        }
        case ExtensionMember::Kind::FiniteDegree: {
            out.witt_index = witt_index_over(q, E);
            out.kernel_dim = q.dim() - 2 * out.witt_index;
            if (out.kernel_dim == 0) {
                out.kernel_prime_isotropic = false;
            } else if (out.kernel_dim == 2) {
                out.kernel_prime_isotropic = true;  // rank 3 over a finite field
            } else {
                SquareClass kdet = invariants(q).det;
                if (out.witt_index % 2 == 1) kdet = sq_mul(kdet, sq_of(-1, q.field));
                out.kernel_prime_isotropic = kdet.is_one() || E.param % 2 == 0;
            }
            return out;
        }
        case ExtensionMember::Kind::RealPlace: {
            auto [pos, neg] = *invariants(q).signature;
            out.witt_index = std::min(pos, neg);
            out.kernel_dim = std::abs(pos - neg);
            out.kernel_prime_isotropic = pos > neg;  // mixed sign after adjoining <-1>
            return out;
        }
        case ExtensionMember::Kind::PadicPlace: {
            Place v = Place::padic(E.param);
            LocalTuple t = local_tuple_at(q, v);
            while (locally_isotropic(t, v)) t = strip_h(t, v);
            out.witt_index = (q.dim() - t.dim) / 2;
            out.kernel_dim = t.dim;
            LocalTuple prime;
            prime.dim = t.dim + 1;
            prime.det = -t.det;
            prime.eps = t.eps * hilbert_symbol(t.det, Rational(-1), v);
            out.kernel_prime_isotropic = locally_isotropic(prime, v);
            return out;
        }
    }
    throw InternalError("member_witt_data: unknown member kind");
}

// ---------------------------------------------------------------------------
// Profiles and shells

Profile profile(const QuadraticForm& q, const ExtensionFamily& fam) {
    if (fam.base != q.field) throw FieldMismatch("profile: family base differs from form field");
    fam.validate();
    Profile out;
    out.family = fam;
    QuadraticForm qp = prime_form(q);
    std::set<int> pattern;
    for (const auto& E : fam.members) {
        int iq = witt_index_over(q, E);
        int iqp = witt_index_over(qp, E);
        // subform implication chain collapses to i_W(q) <= i_W(q') <= i_W(q)+1
        if (iqp < iq || iqp > iq + 1)
            throw InternalError("profile: implication chain violated at " + E.str());
        out.rows.emplace_back(iq, iqp);
        pattern.insert(iq);
    }
    out.observed_pattern.assign(pattern.begin(), pattern.end());
    return out;
}

namespace {

ShellPartition partition_chain(const std::vector<ShellNode>& chain,
                               const std::vector<std::vector<bool>>& preds, bool labeled) {
    ShellPartition out;
    out.chain = chain;
    if (chain.empty()) return out;
    size_t begin = 0;
    for (size_t i = 1; i <= chain.size(); ++i) {
        if (i == chain.size() || preds[i] != preds[begin]) {
            out.shells.emplace_back(static_cast<int>(begin), static_cast<int>(i));
            if (i < chain.size() && labeled)
                out.boundaries.push_back(chain[i - 1].primed ? "Q'-Q" : "Q-Q'");
            else if (i < chain.size())
                out.boundaries.push_back("");
            begin = i;
        }
    }
    return out;
}

}  // namespace

std::string ShellNode::str() const {
    return (primed ? "Q'_" : "Q_") + std::to_string(index);
}

ShellPartition shells(const QuadraticForm& q, const ExtensionFamily& fam) {
    Profile pr = profile(q, fam);
    std::vector<ShellNode> chain;
    std::vector<std::vector<bool>> preds;
    int D = q.dim() - 2;  // dimension of the quadric Q
    for (int i = 0; D >= 0 && i <= D / 2; ++i) {
        chain.push_back({false, i});
        std::vector<bool> v;
        v.reserve(pr.rows.size());
        for (const auto& [iq, iqp] : pr.rows) v.push_back(iq > i);
        preds.push_back(std::move(v));
    }
    return partition_chain(chain, preds, false);
}

ShellPartition affine_shells(const QuadraticForm& q, const ExtensionFamily& fam) {
    Profile pr = profile(q, fam);
    int D = q.dim() - 2;       // dim Q
    int Dp = q.dim() + 1 - 2;  // dim Q'
    std::vector<ShellNode> chain;
    std::vector<std::vector<bool>> preds;
    auto push = [&](bool primed, int i) {
        chain.push_back({primed, i});
        std::vector<bool> v;
        v.reserve(pr.rows.size());
        for (const auto& [iq, iqp] : pr.rows) v.push_back((primed ? iqp : iq) > i);
        preds.push_back(std::move(v));
    };
    for (int i = 0;; ++i) {
        bool has_primed = Dp >= 0 && i <= Dp / 2;
        bool has_plain = D >= 0 && i <= D / 2;
        if (!has_primed && !has_plain) break;
        if (has_primed) push(true, i);
        if (has_plain) push(false, i);
    }
    return partition_chain(chain, preds, true);
}

}  // namespace qf
