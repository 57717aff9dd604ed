#include "qf/json_io.hpp"

#include <sstream>

#include "qf/errors.hpp"

namespace qf {

namespace {

FieldDesc parse_field(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("field: expected an object with a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    auto prime_of = [&]() -> long {
        if (!j.contains("p") || !j["p"].is_number_integer())
            throw ParseError("field: kind \"" + kind + "\" requires an integer \"p\"");
        return j["p"].get<long>();
    };
    if (kind == "Q") return FieldDesc::rationals();
    if (kind == "R") return FieldDesc::reals();
    if (kind == "Fp") return FieldDesc::finite(prime_of());
    if (kind == "Qp") return FieldDesc::padic(prime_of());
    throw ParseError("field: unknown kind \"" + kind + "\" (expected Q, Fp, R, Qp)");
}

}  // namespace

Rational parse_scalar(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            const auto slash = s.find('/');
            if (slash == std::string::npos) return Rational(Int(s));
            Int num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) throw ParseError("scalar: zero denominator in \"" + s + "\"");
            return Rational(num, den);
        } catch (const std::exception&) {
            throw ParseError("scalar: cannot parse \"" + s + "\"");
        }
    }
    throw ParseError("scalar: expected an integer or an \"a/b\" string");
}

Json scalar_json(const Rational& r) {
    if (denominator(r) == 1) {
        Int n = numerator(r);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
            return Json(static_cast<long long>(n));
        return Json(n.str());
    }
    return Json(numerator(r).str() + "/" + denominator(r).str());
}

FormSpecDocument parse_form_document(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_form_document(j);
}

FormSpecDocument parse_form_document(const Json& j) {
    if (!j.is_object()) throw ParseError("form document: expected an object");
    if (!j.contains("field")) throw ParseError("form document: missing \"field\"");
    FieldDesc field = parse_field(j["field"]);
    const bool has_diag = j.contains("diag"), has_gram = j.contains("gram");
    if (has_diag == has_gram)
        throw ParseError("form document: exactly one of \"diag\" or \"gram\" is required");

    FormSpecDocument doc;
    try {
        if (has_diag) {
            if (!j["diag"].is_array()) throw ParseError("\"diag\" must be an array");
            std::vector<Rational> diag;
            for (const auto& e : j["diag"]) diag.push_back(parse_scalar(e));
            doc.form = QuadraticForm(field, diag);
        } else {
            if (!j["gram"].is_array()) throw ParseError("\"gram\" must be a square matrix");
            std::vector<std::vector<Rational>> gram;
            for (const auto& row : j["gram"]) {
                if (!row.is_array()) throw ParseError("\"gram\" must be a square matrix");
                std::vector<Rational> r;
                for (const auto& e : row) r.push_back(parse_scalar(e));
                gram.push_back(std::move(r));
            }
            doc.form = diagonalize(gram, field);
        }
    } catch (const Error&) {
        throw;
    }

    if (j.contains("family")) {
        if (!j["family"].is_array()) throw ParseError("\"family\" must be an array of member strings");
        ExtensionFamily fam;
        fam.base = field;
        for (const auto& m : j["family"]) {
            if (m.is_number_integer())
                fam.members.push_back(ExtensionMember::finite_degree(m.get<long>()));
            else if (m.is_string())
                fam.members.push_back(ExtensionMember::parse(m.get<std::string>()));
            else
                throw ParseError("family member must be a string or a degree integer");
        }
        fam.validate();
        doc.family = std::move(fam);
    }
    return doc;
}

Json to_json(const FieldDesc& f) {
    Json j;
    switch (f.kind) {
        case FieldKind::Rationals: j["kind"] = "Q"; break;
        case FieldKind::Reals: j["kind"] = "R"; break;
        case FieldKind::Finite: j["kind"] = "Fp"; j["p"] = f.p; break;
        case FieldKind::Padic: j["kind"] = "Qp"; j["p"] = f.p; break;
    }
    return j;
}

Json to_json(const QuadraticForm& q) {
    Json j;
    j["field"] = to_json(q.field);
    j["diag"] = Json::array();
    for (const auto& a : q.diag) j["diag"].push_back(scalar_json(a));
    return j;
}

Json to_json(const SquareClass& c) {
    if (c.rep >= std::numeric_limits<long long>::min() && c.rep <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(c.rep));
    return Json(c.rep.str());
}

Json to_json(const InvariantTuple& t) {
    Json j;
    j["dim"] = t.dim;
    j["det"] = to_json(t.det);
    j["det_pm"] = to_json(t.det_pm);
    if (!t.hasse.empty()) {
        Json h;
        for (const auto& [v, s] : t.hasse) h[v.str()] = s;
        j["hasse"] = h;
    }
    if (t.signature) j["signature"] = {t.signature->first, t.signature->second};
    if (t.det.field.kind == FieldKind::Finite) j["disc"] = to_json(t.det);
    return j;
}

Json to_json(const WittDecomposition& w) {
    Json j;
    j["witt_index"] = w.witt_index;
    j["kernel"] = to_json(w.kernel);
    j["kernel_dim"] = w.kernel.dim();
    return j;
}

Json to_json(const ExtensionFamily& fam) {
    Json j = Json::array();
    for (const auto& m : fam.members) j.push_back(m.str());
    return j;
}

Json to_json(const Profile& p) {
    Json j;
    j["family"] = to_json(p.family);
    Json rows;
    for (size_t i = 0; i < p.rows.size(); ++i)
        rows[p.family.members[i].str()] = {p.rows[i].first, p.rows[i].second};
    j["witt_indices"] = rows;
    j["observed_pattern"] = p.observed_pattern;
    return j;
}

Json to_json(const ShellPartition& s) {
    Json j;
    j["chain"] = Json::array();
    for (const auto& n : s.chain) j["chain"].push_back(n.str());
    j["shells"] = Json::array();
    for (const auto& [b, e] : s.shells) {
        Json shell = Json::array();
        for (int i = b; i < e; ++i) shell.push_back(s.chain[i].str());
        j["shells"].push_back(shell);
    }
    j["boundaries"] = s.boundaries;
    return j;
}

Json to_json(const TateLine& l) {
    return Json{{"twist", l.twist}, {"degree", l.degree}};
}

Json to_json(const BigradedSpace& s) {
    Json j;
    j["rank"] = s.rank();
    j["lines"] = Json::array();
    for (const auto& l : s.lines) j["lines"].push_back({l.twist, l.degree});
    return j;
}

Json to_json(const Verdict& v) {
    Json j;
    j["verdict"] = verdict_kind_str(v.kind);
    if (v.member) j["member"] = v.member->str();
    if (!v.detail.empty()) j["detail"] = v.detail;
    if (v.witness) {
        j["lambda"] = to_json(v.witness->lambda);
        j["invariants"] = to_json(v.witness->target_p);
    }
    if (v.kind == VerdictKind::EquivalentOnFamily || v.kind == VerdictKind::Isometric)
        j["family_exact"] = v.family_exact;
    return j;
}

Json to_json(const oracle::TheoremCheckReport& r) {
    Json j;
    j["p"] = r.p;
    j["maxdim"] = r.maxdim;
    j["forms"] = r.forms;
    j["pairs"] = r.pairs;
    j["violations"] = r.violations;
    j["witt_oracle_mismatches"] = r.witt_oracle_mismatches;
    j["notes"] = r.notes;
    return j;
}

namespace {

void render_value(const Json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_value(v, prefix.empty() ? k : prefix + "." + k, os);
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

}  // namespace

std::string render_table(const Json& j) {
    std::ostringstream os;
    render_value(j, "", os);
    return os.str();
}

}  // namespace qf
