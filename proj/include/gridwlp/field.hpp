#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "gridwlp/random.hpp"

namespace gridwlp {

/// Raised on division by zero and on invalid field parameters.
class FieldError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

__extension__ using U128 = unsigned __int128;

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

bool is_prime(std::uint64_t n);

/// The prime field F_p for a single-word prime p < 2^31.
///
/// Elements are canonical residues in [0, p). A product of two residues plus a
/// residue fits in 64 bits, and reduction uses a precomputed Barrett constant instead of a
/// hardware division.
class PrimeField {
public:
    using Element = std::uint64_t;
    static constexpr bool is_rational = false;

    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint64_t modulus() const { return p_; }
    std::string describe() const;

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(std::int64_t v) const;

    bool is_zero(Element a) const { return a == 0; }
    bool equal(Element a, Element b) const { return a == b; }

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const { return reduce(a * b); }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    std::optional<Element> try_div(Element a, Element b) const;

    /// dst[i] -= f * src[i] for all i.
    void sub_scaled(std::span<Element> dst, Element f, std::span<const Element> src) const {
        const Element g = neg(f);
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] = reduce(dst[i] + g * src[i]);
        }
    }

    void scale(std::span<Element> row, Element f) const {
        for (auto& x : row) x = mul(x, f);
    }

    /// Uniform over the nonzero residues.
    Element random_nonzero(RandomStream& rng) const { return rng.uniform(1, p_ - 1); }

    std::string format(Element a) const { return std::to_string(a); }

    /// x < 2^64 reduced mod p.
    Element reduce(std::uint64_t x) const {
        const auto q = static_cast<std::uint64_t>((static_cast<U128>(x) * barrett_) >> 64);
        std::uint64_t r = x - q * p_;
        while (r >= p_) r -= p_;
        return r;
    }

private:
    std::uint64_t p_;
    std::uint64_t barrett_;  // floor(2^64 / p)
};

/// Exact rationals (GMP). Used as a cross-check on small instances.
class RationalField {
public:
    using Element = mpq_class;
    static constexpr bool is_rational = true;

    /// Random draws land in [1, kRandomMax].
    static constexpr std::uint64_t kRandomMax = 1000000;

    std::uint64_t modulus() const { return 0; }
    std::string describe() const { return "QQ"; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(std::int64_t v) const { return Element(static_cast<long>(v)); }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const { return a * inv(b); }
    std::optional<Element> try_div(const Element& a, const Element& b) const;

    void sub_scaled(std::span<Element> dst, const Element& f, std::span<const Element> src) const {
        if (is_zero(f)) return;
        mpq_class t;
        for (std::size_t i = 0; i < dst.size(); ++i) {
            if (sgn(src[i]) == 0) continue;
            t = f * src[i];
            dst[i] -= t;
        }
    }

    void scale(std::span<Element> row, const Element& f) const {
        for (auto& x : row) {
            if (sgn(x) != 0) x *= f;
        }
    }

    Element random_nonzero(RandomStream& rng) const {
        return from_int(static_cast<std::int64_t>(rng.uniform(1, kRandomMax)));
    }

    std::string format(const Element& a) const { return a.get_str(); }
};

}  // namespace gridwlp
