#include "qf/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "qf/errors.hpp"
#include "qf/json_io.hpp"

namespace qf::cli {

namespace {

struct CommonOpts {
    std::string form_text;
    std::string form2_text;
    std::string member;
    std::string format = "json";
    std::string out_path;
};

FormSpecDocument load_form(const std::string& text, const std::string& stdin_text) {
    if (text.empty()) throw ParseError("missing --form");
    if (text == "-") return parse_form_document(stdin_text);
    return parse_form_document(text);
}

ExtensionFamily family_for(const FormSpecDocument& doc) {
    if (doc.family) return *doc.family;
    return ExtensionFamily::default_for(doc.form);
}

ExtensionFamily family_for_pair(const FormSpecDocument& a, const FormSpecDocument& b) {
    if (a.family && b.family) {
        if (!(a.family->members == b.family->members))
            throw ParseError("the two form documents declare different families");
        return *a.family;
    }
    if (a.family) return *a.family;
    if (b.family) return *b.family;
    return ExtensionFamily::default_for_pair(a.form, b.form);
}

std::vector<ExtensionMember> members_for(const CommonOpts& opts, const ExtensionFamily& fam) {
    if (opts.member.empty()) return fam.members;
    return {ExtensionMember::parse(opts.member)};
}

int emit(const Json& j, const CommonOpts& opts, std::string& out, int code = 0) {
    out = opts.format == "table" ? render_table(j) : j.dump(2) + "\n";
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path);
        if (!f) throw ParseError("cannot open --out file " + opts.out_path);
        f << out;
    }
    return code;
}

}  // namespace

RunResult run(const std::vector<std::string>& args, const std::string& stdin_text) {
    CLI::App app{"Exact invariants, Witt decompositions, splitting shells and "
                 "Tate-motive data of quadrics, with equivalence pipelines"};
    app.require_subcommand(1);

    CommonOpts opts;
    long selftest_p = 3;
    int selftest_maxdim = 4;
    bool selftest_full = false;

    auto add_common = [&](CLI::App* cmd, bool two_forms = false) {
        cmd->add_option("--form", opts.form_text, "form document (JSON, or - for stdin)");
        if (two_forms) cmd->add_option("--form2", opts.form2_text, "second form document");
        cmd->add_option("--format", opts.format, "json|table")->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--out", opts.out_path, "also write the document to this file");
    };

    CLI::App* c_inv = app.add_subcommand("invariants", "dim, det, det_pm, Hasse symbols, signature");
    add_common(c_inv);
    CLI::App* c_witt = app.add_subcommand("witt", "Witt index and anisotropic kernel");
    add_common(c_witt);
    CLI::App* c_profile = app.add_subcommand("profile", "(i_W(q), i_W(q')) over the family");
    add_common(c_profile);
    CLI::App* c_shells = app.add_subcommand("shells", "shell partitions of Q and of the pair (Q', Q)");
    add_common(c_shells);
    CLI::App* c_phi = app.add_subcommand("phi", "phi-line of the reduced affine motive per member");
    add_common(c_phi);
    c_phi->add_option("--member", opts.member, "single member (base, R, Q_p, deg_d, kbar)");
    CLI::App* c_motive = app.add_subcommand("motive", "phi of the projective quadric per member");
    add_common(c_motive);
    c_motive->add_option("--member", opts.member, "single member");
    CLI::App* c_equiv = app.add_subcommand("equiv", "motivic equivalence of projective quadrics");
    add_common(c_equiv, true);
    CLI::App* c_affine = app.add_subcommand("affine-equiv", "motivic equivalence of affine quadrics");
    add_common(c_affine, true);
    CLI::App* c_self = app.add_subcommand("selftest", "oracle agreement and exhaustive theorem check");
    c_self->add_option("--p", selftest_p, "odd prime for the theorem check (default 3)");
    c_self->add_option("--maxdim", selftest_maxdim, "max dimension (default 4)");
    c_self->add_flag("--full", selftest_full, "run the full acceptance-scale grid");
    c_self->add_option("--format", opts.format, "json|table")->check(CLI::IsMember({"json", "table"}));
    c_self->add_option("--out", opts.out_path, "also write the document to this file");

    std::vector<const char*> argv{"qform"};
    for (const auto& a : args) argv.push_back(a.c_str());

    RunResult res;
    try {
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            std::ostringstream os;
            int code = app.exit(e, os, os);
            res.output = os.str();
            res.exit_code = code == 0 ? 0 : 2;
            return res;
        }

        if (app.got_subcommand(c_inv)) {
            auto doc = load_form(opts.form_text, stdin_text);
            res.exit_code = emit(to_json(invariants(doc.form)), opts, res.output);
        } else if (app.got_subcommand(c_witt)) {
            auto doc = load_form(opts.form_text, stdin_text);
            res.exit_code = emit(to_json(witt_decompose(doc.form)), opts, res.output);
        } else if (app.got_subcommand(c_profile)) {
            auto doc = load_form(opts.form_text, stdin_text);
            res.exit_code = emit(to_json(profile(doc.form, family_for(doc))), opts, res.output);
        } else if (app.got_subcommand(c_shells)) {
            auto doc = load_form(opts.form_text, stdin_text);
            ExtensionFamily fam = family_for(doc);
            Json j;
            j["family"] = to_json(fam);
            j["projective"] = to_json(shells(doc.form, fam));
            j["affine"] = to_json(affine_shells(doc.form, fam));
            res.exit_code = emit(j, opts, res.output);
        } else if (app.got_subcommand(c_phi)) {
            auto doc = load_form(opts.form_text, stdin_text);
            ExtensionFamily fam = family_for(doc);
            TateLine at_kbar = phi_affine_reduced(doc.form, ExtensionMember::kbar());
            Json per;
            for (const auto& m : members_for(opts, fam)) {
                TateLine l = phi_affine_reduced(doc.form, m);
                RecoveredInvariants rec = recover_invariants(at_kbar, l);
                Json entry;
                entry["line"] = to_json(l);
                entry["recovered"] = {{"dim_Q", rec.dim_quadric},
                                      {"i_W", rec.witt_q},
                                      {"i_W_prime", rec.witt_q_prime}};
                per[m.str()] = entry;
            }
            Json j;
            j["family"] = to_json(fam);
            j["kbar_line"] = to_json(at_kbar);
            j["members"] = per;
            res.exit_code = emit(j, opts, res.output);
        } else if (app.got_subcommand(c_motive)) {
            auto doc = load_form(opts.form_text, stdin_text);
            ExtensionFamily fam = family_for(doc);
            Json per;
            for (const auto& m : members_for(opts, fam))
                per[m.str()] = to_json(phi_projective(doc.form, m));
            Json j;
            j["family"] = to_json(fam);
            j["members"] = per;
            res.exit_code = emit(j, opts, res.output);
        } else if (app.got_subcommand(c_equiv) || app.got_subcommand(c_affine)) {
            auto doc = load_form(opts.form_text, stdin_text);
            auto doc2 = load_form(opts.form2_text, stdin_text);
            ExtensionFamily fam = family_for_pair(doc, doc2);
            Verdict v = app.got_subcommand(c_equiv)
                            ? motivic_equiv_projective(doc.form, doc2.form, fam)
                            : affine_motive_equiv(doc.form, doc2.form, fam);
            Json j = to_json(v);
            j["family"] = to_json(fam);
            res.exit_code = emit(j, opts, res.output,
                                 v.kind == VerdictKind::Distinguished ? 1 : 0);
        } else if (app.got_subcommand(c_self)) {
            if (selftest_full) {
                Json j;
                j["theorem_check_3_5"] = to_json(oracle::exhaustive_theorem_check(3, 5));
                j["theorem_check_5_4"] = to_json(oracle::exhaustive_theorem_check(5, 4));
                long violations = j["theorem_check_3_5"]["violations"].get<long>() +
                                  j["theorem_check_5_4"]["violations"].get<long>();
                res.exit_code = emit(j, opts, res.output, violations == 0 ? 0 : 3);
            } else {
                auto rep = oracle::exhaustive_theorem_check(selftest_p, selftest_maxdim);
                res.exit_code = emit(to_json(rep), opts, res.output,
                                     rep.violations == 0 && rep.witt_oracle_mismatches == 0 ? 0 : 3);
            }
        }
    } catch (const InternalError& e) {
        res.output = std::string("internal invariant violation: ") + e.what() + "\n";
        res.exit_code = 3;
    } catch (const Error& e) {
        res.output = std::string("error: ") + e.what() + "\n";
        res.exit_code = 2;
    } catch (const std::exception& e) {
        res.output = std::string("error: ") + e.what() + "\n";
        res.exit_code = 2;
    }
    return res;
}

}  // namespace qf::cli
