#include "hyperjac/parse.hpp"

#include <array>
#include <cctype>
#include <map>

namespace hyperjac {

namespace {

using Key = std::array<int, 3>;  // exponents of s, t, e
using Poly = std::map<Key, mpq_class>;

constexpr int kMaxExponent = 4096;

void add_term(Poly& p, const Key& k, const mpq_class& c) {
    auto& slot = p[k];
    slot += c;
    if (slot == 0) p.erase(k);
}

Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b) add_term(out, {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    return out;
}

Poly constant(const mpq_class& c) {
    Poly p;
    if (c != 0) p[{0, 0, 0}] = c;
    return p;
}

// A lone c*e^m with c != 0: the only invertible shape.
bool is_e_monomial(const Poly& p) { return p.size() == 1 && p.begin()->first[0] == 0 && p.begin()->first[1] == 0; }

Poly invert_e_monomial(const Poly& p) {
    const auto& [k, c] = *p.begin();
    Poly out;
    out[{0, 0, -k[2]}] = 1 / c;
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Poly parse_all() {
        skip_ws();
        if (pos_ >= text_.size()) fail("empty expression");
        Poly p = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected character");
        return p;
    }

    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
        std::string tok = at < text_.size() ? std::string(1, text_[at]) : std::string("<end>");
        throw ParseError(msg + " at column " + std::to_string(at + 1) + " near '" + tok + "'", 1,
                         static_cast<int>(at + 1), tok);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    Poly expr() {
        Poly acc;
        bool first = true;
        for (;;) {
            skip_ws();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                return acc;
            }
            Poly t = term();
            for (const auto& [k, c] : t) add_term(acc, k, sign * c);
            first = false;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = mul(acc, factor());
            } else if (peek('/')) {
                std::size_t at = ++pos_;
                Poly d = factor();
                if (d.empty()) fail_at("division by zero", at);
                if (!is_e_monomial(d)) fail_at("division is only allowed by constants and powers of e", at);
                acc = mul(acc, invert_e_monomial(d));
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        skip_ws();
        std::size_t start = pos_;
        Poly base = atom();
        if (!peek('^')) return base;
        ++pos_;
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        skip_ws();
        std::size_t at = pos_;
        mpz_class n = integer();
        if (n > kMaxExponent) fail_at("exponent too large", at);
        int e = static_cast<int>(n.get_si());
        if (neg) {
            if (base.empty() || !is_e_monomial(base))
                fail_at("negative exponents are only allowed on powers of e", start);
            base = invert_e_monomial(base);
        }
        Poly out = constant(1);
        for (int i = 0; i < e; ++i) out = mul(out, base);
        return out;
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(mpq_class(integer()));
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        Poly p;
        switch (c) {
            case 's': p[{1, 0, 0}] = 1; break;
            case 't': p[{0, 1, 0}] = 1; break;
            case 'e': p[{0, 0, 1}] = 1; break;
            default: fail("unexpected character");
        }
        ++pos_;
        // Reject identifiers such as "st" or "sigma" instead of misreading them.
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail("unknown identifier");
        return p;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

FieldElem scalar_of(const Field& field, const std::map<int, mpq_class>& e_terms, std::string_view text) {
    try {
        if (!field.is_laurent()) {
            auto it = e_terms.find(0);
            return it == e_terms.end() ? FieldElem::zero(field) : FieldElem::from_rational(field, it->second);
        }
        FieldElem acc = FieldElem::zero(field);
        Field base = field.base_field();
        for (const auto& [ex, c] : e_terms)
            acc += FieldElem::laurent_monomial(field, ex, FieldElem::from_rational(base, c));
        return acc;
    } catch (const DivisionByZeroError&) {
        throw ParseError("denominator vanishes in " + field.name(), 1, 0, std::string(text));
    }
}

std::string monomial_text(const Key& k) {
    std::string out;
    auto put = [&](const char* v, int e) {
        if (e == 0) return;
        if (!out.empty()) out += "*";
        out += v;
        if (e != 1) out += "^" + std::to_string(e);
    };
    put("s", k[0]);
    put("t", k[1]);
    put("e", k[2]);
    return out.empty() ? "1" : out;
}

void check_e(const Poly& p, const Field& field) {
    if (field.is_laurent()) return;
    for (const auto& [k, c] : p)
        if (k[2] != 0)
            throw ParseError("variable e needs a Laurent field such as " + field.name() + "((e))", 1, 0,
                             monomial_text(k));
}

}  // namespace

BinForm parse_form(std::string_view text, const Field& field, std::optional<int> slot, std::string_view name) {
    Poly p = Parser(text).parse_all();
    check_e(p, field);
    if (!slot) {
        if (p.empty()) throw ParseError("cannot infer the degree of the zero form", 1, 0, std::string(text));
        const Key& k = p.begin()->first;
        slot = k[0] + k[1];
    }
    const int d = *slot;
    std::map<int, std::map<int, mpq_class>> by_t;  // t-exponent -> e-exponent -> coefficient
    for (const auto& [k, c] : p) {
        if (k[0] + k[1] != d)
            throw ParseError(std::string(name) + ": monomial " + monomial_text(k) + " has degree " +
                                 std::to_string(k[0] + k[1]) + " but slot " + std::string(name) +
                                 " expects degree " + std::to_string(d),
                             1, 0, monomial_text(k));
        by_t[k[1]][k[2]] += c;
    }
    std::vector<FieldElem> coeffs(static_cast<std::size_t>(std::max(d + 1, 0)), FieldElem::zero(field));
    for (const auto& [tk, terms] : by_t) coeffs[static_cast<std::size_t>(tk)] = scalar_of(field, terms, text);
    return BinForm(field, d, std::move(coeffs));
}

FieldElem parse_scalar(std::string_view text, const Field& field) {
    Poly p = Parser(text).parse_all();
    check_e(p, field);
    std::map<int, mpq_class> terms;
    for (const auto& [k, c] : p) {
        if (k[0] != 0 || k[1] != 0)
            throw ParseError("a scalar cannot contain s or t", 1, 0, monomial_text(k));
        terms[k[2]] += c;
    }
    return scalar_of(field, terms, text);
}

ProjPoint parse_point(std::string_view text, const Field& field) {
    std::size_t open = text.find('[');
    if (open == std::string_view::npos) return ProjPoint::affine(parse_scalar(text, field));
    std::size_t colon = text.find(':', open);
    std::size_t close = text.find(']', open);
    if (colon == std::string_view::npos || close == std::string_view::npos || close < colon)
        throw ParseError("expected a point [s0:t0]", 1, static_cast<int>(open + 1), std::string(text));
    FieldElem s0 = parse_scalar(text.substr(open + 1, colon - open - 1), field);
    FieldElem t0 = parse_scalar(text.substr(colon + 1, close - colon - 1), field);
    if (s0.is_zero() && t0.is_zero()) throw ParseError("[0:0] is not a point", 1, static_cast<int>(open + 1), "[0:0]");
    return ProjPoint(s0, t0);
}

}  // namespace hyperjac
