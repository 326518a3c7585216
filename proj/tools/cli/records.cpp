#include "records.hpp"

#include <algorithm>

#include "hyperjac/parse.hpp"

namespace hyperjac::cli {

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // byte is 1-based and points just past the offending character.
        std::size_t at = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        int line = 1, column = 1;
        for (std::size_t p = 0; p < at && p < text.size(); ++p) {
            if (text[p] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string token = at < text.size() ? std::string(1, text[at]) : "<end>";
        throw ParseError("invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(column), line,
                         column, token);
    }
}

void check_keys(const Json& rec, const std::vector<std::string>& allowed, const std::vector<std::string>& required) {
    if (!rec.is_object()) throw ParseError("input must be a JSON object", 1, 1, rec.dump());
    for (const auto& [key, value] : rec.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ParseError("unknown key '" + key + "'", 0, 0, key);
    for (const auto& key : required)
        if (!rec.contains(key)) throw ParseError("missing key '" + key + "'", 0, 0, key);
}

int int_field(const Json& rec, const std::string& key) {
    const Json& v = rec.at(key);
    if (!v.is_number_integer()) throw ParseError("'" + key + "' must be an integer", 0, 0, v.dump());
    long long x = v.get<long long>();
    if (x < -100000 || x > 100000) throw ParseError("'" + key + "' is out of range", 0, 0, v.dump());
    return static_cast<int>(x);
}

std::string string_field(const Json& rec, const std::string& key) {
    const Json& v = rec.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    throw ParseError("'" + key + "' must be a string", 0, 0, v.dump());
}

Field record_field(const Json& rec, const std::optional<std::string>& override_name) {
    if (override_name) return Field::parse(*override_name);
    if (rec.is_object() && rec.contains("field")) return Field::parse(string_field(rec, "field"));
    return Field::rationals();
}

namespace {

BinForm read_slot(const Json& rec, const std::string& key, const Field& field, int slot) {
    std::string text = string_field(rec, key);
    try {
        return parse_form(text, field, slot, key);
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()), e.line(), e.column(), e.token().empty() ? key : e.token());
    }
}

}  // namespace

FormRecord read_form(const Json& rec, const Field& field) {
    StratumIndex idx{int_field(rec, "i"), int_field(rec, "j"), int_field(rec, "k")};
    Lbqf given(idx, read_slot(rec, "a", field, idx.slot_a()), read_slot(rec, "b", field, idx.slot_b()),
               read_slot(rec, "c", field, idx.slot_c()));
    Canonicalized c = canonicalize(given);
    FormRecord out{c.form, {}};
    if (c.swapped)
        out.messages.push_back("swapped to i <= j: " + idx.to_string() + " -> " + c.form.idx().to_string() +
                               ", a and c exchanged");
    return out;
}

Json encode_form(const Lbqf& l) {
    Json j;
    j["i"] = l.idx().i;
    j["j"] = l.idx().j;
    j["k"] = l.idx().k;
    j["field"] = l.field().name();
    j["a"] = l.a().to_string();
    j["b"] = l.b().to_string();
    j["c"] = l.c().to_string();
    return j;
}

Json encode_point(const ProjPoint& q) { return q.to_string(); }

Json encode_classification(const Classification& c) {
    Json j;
    j["p_identically_zero"] = c.p_identically_zero;
    j["reduced"] = c.reduced;
    j["integral"] = c.integral;
    j["smooth"] = c.smooth;
    j["line_bundle"] = c.line_bundle;
    j["bad_fiber_factor"] = c.bad_fiber_factor ? Json(c.bad_fiber_factor->to_string()) : Json(nullptr);
    Json pts = Json::array();
    for (const auto& q : c.bad_fibers) pts.push_back(encode_point(q));
    j["bad_fibers"] = pts;
    return j;
}

Json encode_ramification(const std::vector<RamificationFactor>& r) {
    Json out = Json::array();
    for (const auto& f : r) {
        Json j;
        j["factor"] = f.factor.to_string();
        j["multiplicity"] = f.multiplicity;
        j["point"] = f.point ? encode_point(*f.point) : Json(nullptr);
        out.push_back(j);
    }
    return out;
}

Json encode_factor(const CoxFactor& f) {
    Json j;
    j["alpha"] = f.alpha.to_string();
    j["beta"] = f.beta.to_string();
    j["e"] = f.e;
    j["factor"] = f.to_string();
    return j;
}

}  // namespace hyperjac::cli
