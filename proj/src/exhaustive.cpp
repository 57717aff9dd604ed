#include <sstream>

#include "qf/errors.hpp"
#include "qf/motive.hpp"
#include "qf/oracle.hpp"

namespace qf::oracle {

namespace {

struct FormData {
    QuadraticForm q;
    int dim = 0;
    bool disc_square = false;       // independent: via the enumerated square set of F_p
    int iq[2] = {0, 0};             // engine i_W over degrees 1, 2
    int iqp[2] = {0, 0};            // engine i_W of q' over degrees 1, 2
    TateLine phi[2];                // engine phi-line over degrees 1, 2
};

bool motivic_data_equal(const FormData& a, const FormData& b) {
    if (a.dim != b.dim) return false;
    for (int d = 0; d < 2; ++d) {
        if (a.iq[d] != b.iq[d] || a.iqp[d] != b.iqp[d]) return false;
        if (!(a.phi[d] == b.phi[d])) return false;
    }
    return true;
}

}  // namespace

TheoremCheckReport exhaustive_theorem_check(long p, int maxdim) {
    if (p > 7 || maxdim > 6)
        throw BudgetExceeded("exhaustive_theorem_check: pre requires p <= 7, maxdim <= 6");
    const FieldDesc F = FieldDesc::finite(p);
    const long eps = least_nonresidue(p);

    // squares of F_p* by enumeration; deliberately not legendre()
    std::vector<bool> square(p, false);
    for (long a = 1; a < p; ++a) square[a * a % p] = true;

    // all diagonal forms up to entry square classes: k entries eps, rest 1
    std::vector<FormData> forms;
    for (int dim = 0; dim <= maxdim; ++dim)
        for (int k = 0; k <= dim; ++k) {
            FormData fd;
            std::vector<Rational> diag(dim - k, Rational(1));
            diag.insert(diag.end(), k, Rational(eps));
            fd.q = QuadraticForm(F, diag);
            fd.dim = dim;
            long prod = 1;
            for (int i = 0; i < k; ++i) prod = prod * eps % p;
            fd.disc_square = dim == 0 || square[prod];
            forms.push_back(std::move(fd));
        }

    const Fq F1(p, 1), F2(p, 2);
    TheoremCheckReport rep;
    rep.p = p;
    rep.maxdim = maxdim;
    rep.forms = static_cast<long>(forms.size());

    long witt_mismatch = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : witt_mismatch)
    for (size_t i = 0; i < forms.size(); ++i) {
        FormData& fd = forms[i];
        QuadraticForm qp = prime_form(fd.q);
        for (int d = 0; d < 2; ++d) {
            ExtensionMember E = ExtensionMember::finite_degree(d + 1);
            fd.iq[d] = witt_index_over(fd.q, E);
            fd.iqp[d] = witt_index_over(qp, E);
            fd.phi[d] = phi_affine_reduced(fd.q, E);

            // pin the engine against the enumeration oracle
            const Fq& Fqd = d == 0 ? F1 : F2;
            std::vector<long> diag, diagp;
            for (const auto& a : fd.q.diag) diag.push_back(static_cast<long>(numerator(a)));
            diagp = diag;
            diagp.push_back(-1);
            if (bf_witt_index(Fqd, diag_gram(Fqd, diag)) != fd.iq[d]) ++witt_mismatch;
            if (bf_witt_index(Fqd, diag_gram(Fqd, diagp)) != fd.iqp[d]) ++witt_mismatch;
        }
    }
    rep.witt_oracle_mismatches = witt_mismatch;

    for (size_t i = 0; i < forms.size(); ++i)
        for (size_t j = i; j < forms.size(); ++j) {
            ++rep.pairs;
            bool motivic = motivic_data_equal(forms[i], forms[j]);
            bool iso = forms[i].dim == forms[j].dim && forms[i].disc_square == forms[j].disc_square;
            if (motivic != iso) {
                ++rep.violations;
                if (rep.notes.size() < 8) {
                    std::ostringstream os;
                    os << forms[i].q.str() << " vs " << forms[j].q.str() << ": motivic "
                       << (motivic ? "equal" : "differ") << " but " << (iso ? "" : "not ")
                       << "isometric";
                    rep.notes.push_back(os.str());
                }
            }
        }
    if (rep.witt_oracle_mismatches > 0)
        rep.notes.push_back("engine Witt indices disagree with bf_witt_index");
    return rep;
}

}  // namespace qf::oracle
