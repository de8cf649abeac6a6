#include "gridwlp/field.hpp"

#include <limits>

namespace gridwlp {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (std::uint64_t{1} << 31)) {
        throw FieldError("modulus " + std::to_string(p) + " exceeds 31 bits");
    }
    if (!is_prime(p)) {
        throw FieldError("modulus " + std::to_string(p) + " is not prime");
    }
    barrett_ = std::numeric_limits<std::uint64_t>::max() / p;
}

std::string PrimeField::describe() const { return "GF(" + std::to_string(p_) + ")"; }

PrimeField::Element PrimeField::from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw FieldError("division by zero in " + describe());
    // Extended Euclid on signed values; p < 2^31 keeps everything in range.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return from_int(t);
}

std::optional<PrimeField::Element> PrimeField::try_div(Element a, Element b) const {
    if (b == 0) return std::nullopt;
    return div(a, b);
}

RationalField::Element RationalField::inv(const Element& a) const {
    if (sgn(a) == 0) throw FieldError("division by zero in QQ");
    Element r = 1 / a;
    r.canonicalize();
    return r;
}

std::optional<RationalField::Element> RationalField::try_div(const Element& a, const Element& b) const {
    if (sgn(b) == 0) return std::nullopt;
    return div(a, b);
}

}  // namespace gridwlp
