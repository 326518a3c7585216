#include "hyperjac/random.hpp"

#include <limits>

namespace hyperjac {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw PreconditionError("uniform_below(0)");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % n;
    }
}

long long uniform_between(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

FieldElem random_scalar(const Field& field, Rng& rng) {
    Field base = field.base_field();
    FieldElem x = base.is_rational()
                      ? FieldElem::from_int(base, uniform_between(rng, -9, 9))
                      : FieldElem::from_int(base, static_cast<long long>(uniform_below(rng, base.characteristic())));
    return field.is_laurent() ? x.to_laurent() : x;
}

FieldElem random_nonzero_scalar(const Field& field, Rng& rng) {
    for (;;) {
        FieldElem x = random_scalar(field, rng);
        if (!x.is_zero()) return x;
    }
}

BinForm random_binform(const Field& field, int slot, Rng& rng) {
    std::vector<FieldElem> c;
    for (int k = 0; k <= slot; ++k) c.push_back(random_scalar(field, rng));
    return BinForm(field, slot, std::move(c));
}

}  // namespace hyperjac
