#include "hyperjac/scalars.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hyperjac {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    return pow_mod(a, p - 2, p);
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

// Tonelli-Shanks; caller guarantees a is a nonzero square mod p.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
    if (p % 4 == 3) return pow_mod(a, (p + 1) / 4, p);
    std::uint64_t q = p - 1;
    int s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint64_t z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = static_cast<std::uint64_t>(s);
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(a, q, p);
    std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0;
        std::uint64_t tt = t;
        while (tt != 1) {
            tt = mul_mod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t k = 0; k + 1 < m - i; ++k) b = mul_mod(b, b, p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    return r;
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1U;
    }
    return result;
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
    if (p == 2) throw PreconditionError("characteristic 2 is not supported");
    if (p >= (std::uint64_t{1} << 31)) throw PreconditionError("prime modulus must be below 2^31");
    if (!is_prime_u64(p)) throw PreconditionError("F" + std::to_string(p) + ": modulus is not prime");
    return Field(Base::prime, p, false);
}

Field Field::parse(std::string_view name) {
    bool laurent = false;
    constexpr std::string_view suffix = "((e))";
    if (name.size() > suffix.size() && name.substr(name.size() - suffix.size()) == suffix) {
        laurent = true;
        name.remove_suffix(suffix.size());
    }
    Field f = rationals();
    if (name == "Q") {
        f = rationals();
    } else if (name.size() > 1 && name.front() == 'F') {
        std::uint64_t p = 0;
        auto digits = name.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw ParseError("unknown field '" + std::string(name) + "'", 0, 0, std::string(name));
        f = prime(p);
    } else {
        throw ParseError("unknown field '" + std::string(name) + "'", 0, 0, std::string(name));
    }
    return laurent ? f.laurent() : f;
}

std::string Field::name() const {
    std::string n = is_rational() ? "Q" : "F" + std::to_string(p_);
    if (laurent_) n += "((e))";
    return n;
}

void require_characteristic_above(const Field& field, int max_degree) {
    if (field.is_rational()) return;
    if (field.characteristic() <= static_cast<std::uint64_t>(std::max(0, 2 * max_degree)))
        throw PreconditionError(field.name() + " requires p > 2*" + std::to_string(max_degree) +
                                " for the forms in this session");
}

// ---------------------------------------------------------------- base helpers

FieldElem::BaseValue FieldElem::base_add(const Field& f, const BaseValue& a, const BaseValue& b) {
    if (f.is_rational()) return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
    std::uint64_t s = std::get<std::uint64_t>(a) + std::get<std::uint64_t>(b);
    return s >= f.characteristic() ? s - f.characteristic() : s;
}

FieldElem::BaseValue FieldElem::base_mul(const Field& f, const BaseValue& a, const BaseValue& b) {
    if (f.is_rational()) return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
    return mul_mod(std::get<std::uint64_t>(a), std::get<std::uint64_t>(b), f.characteristic());
}

FieldElem::BaseValue FieldElem::base_neg(const Field& f, const BaseValue& a) {
    if (f.is_rational()) return mpq_class(-std::get<mpq_class>(a));
    std::uint64_t v = std::get<std::uint64_t>(a);
    return v == 0 ? 0 : f.characteristic() - v;
}

bool FieldElem::base_is_zero(const BaseValue& a) {
    if (const auto* q = std::get_if<mpq_class>(&a)) return sgn(*q) == 0;
    return std::get<std::uint64_t>(a) == 0;
}

void FieldElem::check_same(const FieldElem& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatchError("mixed fields: " + field_.name() + " vs " + o.field_.name());
}

void FieldElem::require_base(const char* op) const {
    if (field_.is_laurent())
        throw PreconditionError(std::string(op) + " is defined only over Q and F_p");
}

void FieldElem::require_laurent(const char* op) const {
    if (!field_.is_laurent()) throw PreconditionError(std::string(op) + " requires a Laurent element");
}

// ---------------------------------------------------------------- construction

FieldElem FieldElem::zero(const Field& f) {
    if (f.is_rational()) return FieldElem(f, mpq_class(0));
    return FieldElem(f, std::uint64_t{0});
}

FieldElem FieldElem::one(const Field& f) { return from_int(f, 1); }

FieldElem FieldElem::from_int(const Field& f, long long v) {
    return from_rational(f, mpq_class(mpz_class(std::to_string(v))));
}

FieldElem FieldElem::from_rational(const Field& f, const mpq_class& v) {
    Field base = f.base_field();
    BaseValue bv;
    if (base.is_rational()) {
        mpq_class c(v);
        c.canonicalize();
        bv = c;
    } else {
        std::uint64_t p = base.characteristic();
        std::uint64_t den = reduce_mpz(v.get_den(), p);
        if (den == 0) throw DivisionByZeroError("denominator vanishes in " + base.name());
        bv = mul_mod(reduce_mpz(v.get_num(), p), inv_mod(den, p), p);
    }
    FieldElem out(base, bv);
    return f.is_laurent() ? out.to_laurent() : out;
}

FieldElem FieldElem::laurent_monomial(const Field& laurent_field, int exponent, const FieldElem& c) {
    if (!laurent_field.is_laurent()) throw PreconditionError("laurent_monomial needs a Laurent field");
    if (!(c.field() == laurent_field.base_field()))
        throw FieldMismatchError("Laurent coefficient must lie in " + laurent_field.base_field().name());
    FieldElem out = zero(laurent_field);
    if (!c.is_zero()) out.terms_.emplace_back(exponent, c.base_);
    return out;
}

FieldElem FieldElem::to_laurent() const {
    require_base("to_laurent");
    return laurent_monomial(field_.laurent(), 0, *this);
}

// ---------------------------------------------------------------- predicates

bool FieldElem::is_zero() const {
    if (field_.is_laurent()) return terms_.empty();
    return base_is_zero(base_);
}

bool FieldElem::is_one() const { return *this == one(field_); }

bool operator==(const FieldElem& a, const FieldElem& b) {
    if (!(a.field_ == b.field_)) return false;
    if (a.field_.is_laurent()) return a.terms_ == b.terms_;
    return a.base_ == b.base_;
}

// ---------------------------------------------------------------- arithmetic

FieldElem FieldElem::operator-() const {
    FieldElem out = *this;
    if (field_.is_laurent()) {
        Field b = field_.base_field();
        for (auto& [e, v] : out.terms_) v = base_neg(b, v);
    } else {
        out.base_ = base_neg(field_, base_);
    }
    return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
    check_same(o);
    if (!field_.is_laurent()) {
        base_ = base_add(field_, base_, o.base_);
        return *this;
    }
    Field b = field_.base_field();
    std::vector<std::pair<int, BaseValue>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
            merged.push_back(*i++);
        } else if (i == terms_.end() || j->first < i->first) {
            merged.push_back(*j++);
        } else {
            BaseValue s = base_add(b, i->second, j->second);
            if (!base_is_zero(s)) merged.emplace_back(i->first, std::move(s));
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this += -o; }

FieldElem& FieldElem::operator*=(const FieldElem& o) {
    check_same(o);
    if (!field_.is_laurent()) {
        base_ = base_mul(field_, base_, o.base_);
        return *this;
    }
    Field b = field_.base_field();
    FieldElem acc = zero(field_);
    for (const auto& [ei, vi] : terms_) {
        FieldElem part = zero(field_);
        for (const auto& [ej, vj] : o.terms_) part.terms_.emplace_back(ei + ej, base_mul(b, vi, vj));
        acc += part;
    }
    *this = std::move(acc);
    return *this;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw DivisionByZeroError("division by zero in " + field_.name());
    if (field_.is_laurent()) {
        if (terms_.size() != 1)
            throw DivisionByZeroError("Laurent element '" + to_string() +
                                      "' is not a monomial and has no inverse");
        FieldElem c = FieldElem(field_.base_field(), terms_.front().second).inverse();
        return laurent_monomial(field_, -terms_.front().first, c);
    }
    if (field_.is_rational()) return FieldElem(field_, mpq_class(1 / std::get<mpq_class>(base_)));
    return FieldElem(field_, inv_mod(std::get<std::uint64_t>(base_), field_.characteristic()));
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
    check_same(o);
    return *this *= o.inverse();
}

FieldElem FieldElem::pow(long long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    FieldElem result = one(field_);
    FieldElem b = *this;
    auto e = static_cast<unsigned long long>(exponent);
    while (e > 0) {
        if (e & 1U) result *= b;
        e >>= 1U;
        if (e > 0) b *= b;
    }
    return result;
}

// ---------------------------------------------------------------- squares

bool FieldElem::is_square() const {
    require_base("is_square");
    if (is_zero()) return true;
    if (field_.is_rational()) {
        const auto& q = std::get<mpq_class>(base_);
        if (sgn(q) < 0) return false;
        return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
               mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
    }
    std::uint64_t p = field_.characteristic();
    return pow_mod(std::get<std::uint64_t>(base_), (p - 1) / 2, p) == 1;
}

std::optional<FieldElem> FieldElem::sqrt() const {
    if (!is_square()) return std::nullopt;
    if (is_zero()) return *this;
    if (field_.is_rational()) {
        const auto& q = std::get<mpq_class>(base_);
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        return FieldElem(field_, mpq_class(n, d));
    }
    return FieldElem(field_, sqrt_mod(std::get<std::uint64_t>(base_), field_.characteristic()));
}

// ---------------------------------------------------------------- accessors

const mpq_class& FieldElem::rational() const {
    if (field_.is_laurent() || !field_.is_rational()) throw PreconditionError("not a rational scalar");
    return std::get<mpq_class>(base_);
}

std::uint64_t FieldElem::residue() const {
    if (field_.is_laurent() || field_.is_rational()) throw PreconditionError("not an F_p scalar");
    return std::get<std::uint64_t>(base_);
}

int FieldElem::valuation() const {
    require_laurent("valuation");
    return terms_.empty() ? kInfiniteValuation : terms_.front().first;
}

FieldElem FieldElem::laurent_coeff(int exponent) const {
    require_laurent("laurent_coeff");
    for (const auto& [e, v] : terms_)
        if (e == exponent) return FieldElem(field_.base_field(), v);
    return zero(field_.base_field());
}

std::vector<std::pair<int, FieldElem>> FieldElem::laurent_terms() const {
    require_laurent("laurent_terms");
    std::vector<std::pair<int, FieldElem>> out;
    out.reserve(terms_.size());
    for (const auto& [e, v] : terms_) out.emplace_back(e, FieldElem(field_.base_field(), v));
    return out;
}

FieldElem FieldElem::shift(int shift) const {
    require_laurent("shift");
    FieldElem out = *this;
    for (auto& term : out.terms_) term.first += shift;
    return out;
}

std::string FieldElem::to_string() const {
    if (!field_.is_laurent()) {
        if (field_.is_rational()) return std::get<mpq_class>(base_).get_str();
        return std::to_string(std::get<std::uint64_t>(base_));
    }
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, v] : terms_) {
        std::string c = FieldElem(field_.base_field(), v).to_string();
        bool negative = !c.empty() && c.front() == '-';
        if (negative) c.erase(0, 1);
        std::string term;
        if (e == 0) {
            term = c;
        } else {
            term = e == 1 ? "e" : "e^" + std::to_string(e);
            if (c != "1") term += "*" + c;
        }
        if (negative) out += "-";
        else if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

}  // namespace hyperjac
