#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace gridwlp {

enum class GradingKind { Total, Bigraded };

/// Total degree in `nvars` variables, or the bidegree of k[x0,x1,y0,y1].
struct GradingSpec {
    GradingKind kind = GradingKind::Total;
    int nvars = 4;

    static constexpr GradingSpec total(int n) { return {GradingKind::Total, n}; }
    static constexpr GradingSpec bigraded() { return {GradingKind::Bigraded, 4}; }

    friend bool operator==(const GradingSpec&, const GradingSpec&) = default;
};

/// A degree t (total grading, `second` unused) or a bidegree (first, second).
struct Degree {
    int first = 0;
    int second = 0;

    friend bool operator==(const Degree&, const Degree&) = default;
};

inline constexpr int kMaxVars = 4;

/// Exponent vector; entries past nvars are zero. Bigraded order is x0,x1,y0,y1.
struct Monomial {
    std::array<int, kMaxVars> exp{};

    int total_degree() const { return exp[0] + exp[1] + exp[2] + exp[3]; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Number of monomials of degree t in n variables; 0 for t < 0.
std::size_t count_monomials(int nvars, int t);

std::size_t basis_size(GradingSpec spec, Degree deg);

/// The ordered basis of a graded piece: graded lex with x1 > x2 > ... (resp.
/// x0 > x1 > y0 > y1). Order is fixed and shared by every matrix in the library.
std::vector<Monomial> graded_basis(GradingSpec spec, Degree deg);

/// Position of `m` in graded_basis(spec, deg), computed in O(nvars).
std::size_t monomial_index(GradingSpec spec, Degree deg, const Monomial& m);

bool is_valid_degree(GradingSpec spec, Degree deg);

std::string to_string(GradingSpec spec, const Monomial& m);

}  // namespace gridwlp
