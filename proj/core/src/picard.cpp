#include "hyperjac/picard.hpp"

#include <algorithm>

#include "hyperjac/random.hpp"

namespace hyperjac {

AbGroupDesc::AbGroupDesc(unsigned rank, std::vector<long long> tors) : free_rank(rank), torsion(std::move(tors)) {
    std::erase_if(torsion, [](long long x) { return x == 1; });
    for (long long t : torsion)
        if (t < 2) throw PreconditionError("torsion orders must be at least 2");
    std::sort(torsion.begin(), torsion.end());
}

std::string AbGroupDesc::to_string() const {
    std::vector<std::string> parts;
    if (free_rank == 1) parts.emplace_back("Z");
    else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
    for (long long t : torsion) parts.push_back("Z/" + std::to_string(t) + "Z");
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t x = 1; x < parts.size(); ++x) out += " + " + parts[x];
    return out;
}

namespace {

struct NamedStack {
    StackId id;
    const char* name;
};

constexpr NamedStack kStacks[] = {
    {StackId::hbar, "Hbar"}, {StackId::hbar_red, "Hbar_red"}, {StackId::hbar_int, "Hbar_int"},
    {StackId::hur, "Hur"},   {StackId::q, "Q"},               {StackId::q_sm, "Q_sm"},
    {StackId::q_lb, "Q_lb"}, {StackId::jbd, "Jbd"},           {StackId::jbd_lb, "Jbd_lb"},
    {StackId::j, "J"},
};

[[noreturn]] void refuse(const std::string& why) { throw UnsupportedError(why); }

void require_nminusg_even(const PicParams& p) {
    if (p.g <= 0) refuse("needs g > 0");
    if ((p.n - p.g) % 2 != 0)
        refuse("n - g is odd; the Picard group is not determined for this parity (the image of the "
               "restriction sequence is unknown)");
}

}  // namespace

StackId parse_stack_id(std::string_view name) {
    for (const auto& s : kStacks)
        if (name == s.name) return s.id;
    throw PreconditionError("unknown stack '" + std::string(name) +
                            "' (expected Hbar, Hbar_red, Hbar_int, Hur, Q, Q_sm, Q_lb, Jbd, Jbd_lb, J)");
}

std::string stack_name(StackId id) {
    for (const auto& s : kStacks)
        if (s.id == id) return s.name;
    return "?";
}

AbGroupDesc pic(StackId id, const PicParams& p) {
    const long long tors = 8LL * p.g + 4;
    const bool split = p.i != p.j;
    switch (id) {
        case StackId::hbar:
            return {1, {}};
        case StackId::hbar_red:
            if (p.g < 0) refuse("needs g >= 0");
            return {1, {}};
        case StackId::hbar_int:
            if (p.g < 1) refuse("needs g >= 1");
            return {1, {}};
        case StackId::hur:
            if (p.g < 0) refuse("needs g >= 0");
            return {0, {tors}};
        case StackId::q:
            return {split ? 3U : 2U, {}};
        case StackId::q_sm: {
            int g = p.i + p.j + p.k - 1;
            if (g <= 0 || 2 * std::min(p.i, p.j) + p.k <= 0) refuse("needs g > 0 and 2i+k > 0");
            return {split ? 2U : 1U, {8LL * g + 4}};
        }
        case StackId::q_lb:
            if (2 * std::min(p.i, p.j) + p.k < 0) refuse("needs 2i+k >= 0");
            return {split ? 3U : 2U, {}};
        case StackId::jbd:
        case StackId::jbd_lb:
            require_nminusg_even(p);
            return {3, {}};
        case StackId::j:
            require_nminusg_even(p);
            return {2, {tors}};
    }
    refuse("unknown stack");
}

// ---------------------------------------------------------------- weight checks

namespace {

std::string trial_failure(int trial, const std::string& what) {
    return "trial " + std::to_string(trial) + ": " + what;
}

FieldElem discdisc(const BinForm& a, const BinForm& b, const BinForm& c, const StratumIndex& idx) {
    Lbqf l(idx, a, b, c);
    BinForm d = disc_form(l);
    if (d.slot() == 0) return d.coeff(0);
    return disc_binform(d);
}

}  // namespace

WeightReport disc_weight_verify(int g, int trials, const Field& field, std::uint64_t seed) {
    if (g < 0) throw PreconditionError("disc_weight_verify needs g >= 0");
    if (field.is_laurent()) throw PreconditionError("disc_weight_verify needs Q or F_p");
    WeightReport rep;
    rep.trials = trials;
    rep.exponent = 4 * g + 2;
    rep.character_weight = 2 * rep.exponent;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        BinForm sigma = random_binform(field, 2 * g + 2, rng);
        FieldElem lam = random_nonzero_scalar(field, rng);
        FieldElem lhs = disc_binform(lam * sigma);
        FieldElem rhs = lam.pow(rep.exponent) * disc_binform(sigma);
        if (lhs == rhs) ++rep.passed;
        else rep.failures.push_back(trial_failure(t, "sigma = " + sigma.to_string()));
    }
    return rep;
}

WeightReport discdisc_weight_verify(const StratumIndex& idx0, int trials, const Field& field, std::uint64_t seed) {
    const StratumIndex idx = idx0.canonical() ? idx0 : idx0.swapped();
    if (idx.slot_a() < 0 || idx.slot_b() < 0 || idx.slot_c() < 0)
        throw PreconditionError("discdisc_weight_verify needs all three slots nonnegative");
    const int g = idx.genus();
    if (g < 0) throw PreconditionError("discdisc_weight_verify needs g >= 0");
    if (field.is_laurent()) throw PreconditionError("discdisc_weight_verify needs Q or F_p");
    WeightReport rep;
    rep.trials = trials;
    rep.exponent = 2 * (4 * g + 2);
    rep.character_weight = 8 * g + 4;
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        BinForm a = random_binform(field, idx.slot_a(), rng);
        BinForm b = random_binform(field, idx.slot_b(), rng);
        BinForm c = random_binform(field, idx.slot_c(), rng);
        FieldElem base = discdisc(a, b, c, idx);
        FieldElem lam = random_nonzero_scalar(field, rng);
        FieldElem r = random_nonzero_scalar(field, rng);
        FieldElem w = random_nonzero_scalar(field, rng);
        bool ok = discdisc(lam * a, lam * b, lam * c, idx) == lam.pow(rep.exponent) * base;
        if (idx.i < idx.j) {
            // x -> r x scales (a, b, c) by (r^2, r, 1); y -> w y by (1, w, w^2).
            ok = ok && discdisc((r * r) * a, r * b, c, idx) == r.pow(rep.character_weight) * base;
            ok = ok && discdisc(a, w * b, (w * w) * c, idx) == w.pow(rep.character_weight) * base;
        } else {
            Automorphism phi = random_automorphism(field, idx, rng());
            phi.lambda = FieldElem::one(field);
            Lbqf moved = apply_automorphism(Lbqf(idx, a, b, c), phi);
            ok = ok && discdisc(moved.a(), moved.b(), moved.c(), idx) == phi.det().pow(rep.character_weight) * base;
        }
        if (ok) ++rep.passed;
        else rep.failures.push_back(trial_failure(t, "(a,b,c) = (" + a.to_string() + ", " + b.to_string() + ", " +
                                                         c.to_string() + ")"));
    }
    return rep;
}

// ---------------------------------------------------------------- dimensions

StratumDims stratum_dims(const StratumIndex& idx0) {
    const StratumIndex idx = idx0.canonical() ? idx0 : idx0.swapped();
    auto dim_v = [](const StratumIndex& x) {
        return std::max(x.slot_a() + 1, 0) + std::max(x.slot_b() + 1, 0) + std::max(x.slot_c() + 1, 0);
    };
    auto dim_group = [](const StratumIndex& x) { return (x.i == x.j ? 4 : 2 + (x.j - x.i + 1)) + 1; };
    auto nonneg = [](const StratumIndex& x) { return x.slot_a() >= 0 && x.slot_b() >= 0 && x.slot_c() >= 0; };
    StratumDims out{dim_v(idx), dim_group(idx), std::nullopt, std::nullopt};
    if (nonneg(idx)) out.expected_dim_v = 3 * idx.genus() + 6;
    StratumIndex next{idx.i - 1, idx.j + 1, idx.k};
    if (nonneg(idx) && nonneg(next))
        out.relative_codim_to_next = (dim_v(idx) - dim_group(idx)) - (dim_v(next) - dim_group(next));
    return out;
}

}  // namespace hyperjac
