#include "qf/fq.hpp"

#include <algorithm>

#include "qf/errors.hpp"
#include "qf/numeric.hpp"

namespace qf::oracle {

namespace {

using Poly = std::vector<long>;  // coefficients, low degree first, in F_p

Poly poly_mod(Poly a, const Poly& m, long p) {
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        long lead = a.back();
        if (lead != 0) {
            // m is monic
            int shift = static_cast<int>(a.size()) - 1 - dm;
            for (int i = 0; i <= dm; ++i) {
                long& c = a[i + shift];
                c = (c - lead * m[i]) % p;
                if (c < 0) c += p;
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

bool divides(const Poly& g, const Poly& f, long p) {
    return poly_mod(f, g, p).empty();
}

// Irreducibility by trial division against all monic polynomials of degree
// up to deg(f)/2. Fine at oracle scale (d <= 4).
bool is_irreducible(const Poly& f, long p) {
    int df = static_cast<int>(f.size()) - 1;
    for (int dg = 1; dg <= df / 2; ++dg) {
        long count = 1;
        for (int i = 0; i < dg; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            Poly g(dg + 1, 0);
            long c = code;
            for (int i = 0; i < dg; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[dg] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

Poly least_irreducible(long p, int d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
        Poly f(d + 1, 0);
        long c = code;
        for (int i = 0; i < d; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[d] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw InternalError("no irreducible polynomial found");
}

Poly decode(long code, long p) {
    Poly out;
    while (code > 0) {
        out.push_back(code % p);
        code /= p;
    }
    return out;
}

long encode(const Poly& a, long p) {
    long code = 0;
    for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
}

}  // namespace

Fq::Fq(long p, int d, long field_size_cap) : p_(p), d_(d) {
    if (p < 3 || !is_prime(Int(p))) throw InvalidPrime("Fq: p must be an odd prime");
    if (d < 1) throw BudgetExceeded("Fq: degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < d; ++i) {
        q_ *= p;
        if (q_ > field_size_cap) throw BudgetExceeded("Fq: p^d exceeds the field size cap");
    }
    Poly mod = least_irreducible(p, d);
    modpoly_.assign(mod.begin(), mod.end());

    add_.resize(static_cast<size_t>(q_) * q_);
    mul_.resize(static_cast<size_t>(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    sq_.assign(q_, 0);

    std::vector<Poly> elems(q_);
    for (long a = 0; a < q_; ++a) elems[a] = decode(a, p);

    for (long a = 0; a < q_; ++a) {
        Poly na = elems[a];
        for (auto& c : na) c = (p - c) % p;
        neg_[a] = static_cast<El>(encode(na, p));
        for (long b = 0; b < q_; ++b) {
            Poly s(std::max(elems[a].size(), elems[b].size()), 0);
            for (size_t i = 0; i < s.size(); ++i) {
                long v = (i < elems[a].size() ? elems[a][i] : 0) + (i < elems[b].size() ? elems[b][i] : 0);
                s[i] = v % p;
            }
            add_[static_cast<size_t>(a) * q_ + b] = static_cast<El>(encode(s, p));
            Poly m = poly_mod(poly_mul(elems[a], elems[b], p), mod, p);
            mul_[static_cast<size_t>(a) * q_ + b] = static_cast<El>(encode(m, p));
        }
    }
    for (long a = 1; a < q_; ++a) {
        El s = mul(static_cast<El>(a), static_cast<El>(a));
        sq_[s] = 1;
        if (inv_[a] == 0)
            for (long b = 1; b < q_; ++b)
                if (mul(static_cast<El>(a), static_cast<El>(b)) == 1) {
                    inv_[a] = static_cast<El>(b);
                    inv_[b] = static_cast<El>(a);
                    break;
                }
    }
}

Fq::El Fq::inv(El a) const {
    if (a == 0) throw ZeroScalar("Fq::inv(0)");
    return inv_[a];
}

Fq::El Fq::from_int(long a) const {
    long r = a % p_;
    if (r < 0) r += p_;
    return static_cast<El>(r);
}

}  // namespace qf::oracle
