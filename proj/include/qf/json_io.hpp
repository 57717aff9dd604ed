#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "qf/motive.hpp"
#include "qf/oracle.hpp"

namespace qf {

using Json = nlohmann::json;

/// Wire form of a quadratic form: a field descriptor plus exactly one of
/// "diag" (list of integers or "a/b" strings) or "gram" (square matrix of
/// the same scalars), with an optional extension family.
struct FormSpecDocument {
    QuadraticForm form;
    std::optional<ExtensionFamily> family;
};

FormSpecDocument parse_form_document(const std::string& text);
FormSpecDocument parse_form_document(const Json& j);

Rational parse_scalar(const Json& j);
Json scalar_json(const Rational& r);  // integer when integral, else "a/b"

Json to_json(const FieldDesc& f);
Json to_json(const QuadraticForm& q);
Json to_json(const SquareClass& c);
Json to_json(const InvariantTuple& t);
Json to_json(const WittDecomposition& w);
Json to_json(const ExtensionFamily& fam);
Json to_json(const Profile& p);
Json to_json(const ShellPartition& s);
Json to_json(const TateLine& l);
Json to_json(const BigradedSpace& s);
Json to_json(const Verdict& v);
Json to_json(const oracle::TheoremCheckReport& r);

/// Plain key/value rendering of a JSON document for --format table.
std::string render_table(const Json& j);

}  // namespace qf
