#pragma once

// JSON input records and the JSON encodings of library values.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperjac/hirzebruch.hpp"
#include "hyperjac/lbqf.hpp"
#include "hyperjac/limits.hpp"

namespace hyperjac::cli {

using Json = nlohmann::ordered_json;

/// Parses the whole input text; syntax errors become ParseError with line and column.
Json parse_json_text(const std::string& text);

/// Rejects keys outside `allowed` and checks that `required` keys exist.
void check_keys(const Json& rec, const std::vector<std::string>& allowed, const std::vector<std::string>& required);

int int_field(const Json& rec, const std::string& key);
std::string string_field(const Json& rec, const std::string& key);

/// The record's "field" unless an override is given; Q when neither is set.
Field record_field(const Json& rec, const std::optional<std::string>& override_name);

struct FormRecord {
    Lbqf form;
    std::vector<std::string> messages;  // canonicalization notes
};

/// Reads i, j, k, a, b, c and puts the form in orientation i <= j.
FormRecord read_form(const Json& rec, const Field& field);

Json encode_form(const Lbqf& l);
Json encode_classification(const Classification& c);
Json encode_ramification(const std::vector<RamificationFactor>& r);
Json encode_factor(const CoxFactor& f);
Json encode_point(const ProjPoint& q);

}  // namespace hyperjac::cli
