#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace hyperjac::cli {

namespace {

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_array()) {
        std::string out;
        for (const auto& x : v) {
            if (!out.empty()) out += ", ";
            out += scalar_text(x);
        }
        return out.empty() ? "-" : out;
    }
    return v.dump();
}

bool is_flat(const Json& v) {
    if (v.is_object()) return false;
    if (v.is_array())
        return std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_object() && !x.is_array(); });
    return true;
}

bool is_table(const Json& v) {
    if (!v.is_array() || v.empty() || !v.front().is_object()) return false;
    std::vector<std::string> keys;
    for (const auto& [k, x] : v.front().items()) keys.push_back(k);
    for (const auto& row : v) {
        if (!row.is_object() || row.size() != keys.size()) return false;
        std::size_t n = 0;
        for (const auto& [k, x] : row.items()) {
            if (k != keys[n++] || !is_flat(x)) return false;
        }
    }
    return true;
}

void table(std::ostream& out, const Json& rows, const std::string& indent) {
    std::vector<std::string> keys;
    for (const auto& [k, x] : rows.front().items()) keys.push_back(k);
    std::vector<std::size_t> width;
    for (const auto& k : keys) width.push_back(k.size());
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        std::size_t n = 0;
        for (const auto& [k, x] : row.items()) {
            line.push_back(scalar_text(x));
            width[n] = std::max(width[n], line.back().size());
            ++n;
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        std::string s = indent;
        for (std::size_t n = 0; n < line.size(); ++n) {
            s += line[n];
            if (n + 1 < line.size()) s += std::string(width[n] - line[n].size() + 2, ' ');
        }
        out << s << "\n";
    };
    emit(keys);
    for (const auto& line : cells) emit(line);
}

void block(std::ostream& out, const Json& obj, const std::string& indent) {
    std::size_t w = 0;
    for (const auto& [k, v] : obj.items())
        if (is_flat(v)) w = std::max(w, k.size());
    for (const auto& [k, v] : obj.items()) {
        if (is_flat(v)) {
            out << indent << k << std::string(w - k.size() + 2, ' ') << scalar_text(v) << "\n";
        } else if (v.is_object()) {
            out << indent << k << ":\n";
            block(out, v, indent + "  ");
        } else if (is_table(v)) {
            out << indent << k << ":\n";
            table(out, v, indent + "  ");
        } else {
            out << indent << k << ":\n";
            for (const auto& x : v) {
                if (x.is_object()) {
                    out << indent << "  -\n";
                    block(out, x, indent + "    ");
                } else {
                    out << indent << "  - " << scalar_text(x) << "\n";
                }
            }
        }
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream out;
    if (report.is_object()) block(out, report, "");
    else if (is_table(report)) table(out, report, "");
    else out << scalar_text(report) << "\n";
    return out.str();
}

}  // namespace hyperjac::cli
