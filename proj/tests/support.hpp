#pragma once

// Brute-force oracles over F_p for p = 2^31 - 1. Nothing here calls into the
// library: polynomials are maps from exponent vectors, rank is schoolbook
// elimination with % arithmetic, and vanishing to order m is tested with every
// partial derivative of order < m.

#include <array>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace brute {

using u64 = std::uint64_t;
using Exp = std::array<int, 4>;
using Poly = std::map<Exp, u64>;

inline constexpr u64 P = 2147483647;

inline u64 mulm(u64 a, u64 b) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % P); }
inline u64 addm(u64 a, u64 b) { return (a + b) % P; }
inline u64 subm(u64 a, u64 b) { return (a + P - b % P) % P; }

inline u64 powm(u64 a, u64 e) {
    u64 r = 1;
    for (; e; e >>= 1, a = mulm(a, a)) {
        if (e & 1) r = mulm(r, a);
    }
    return r;
}

inline u64 invm(u64 a) { return powm(a, P - 2); }

inline u64 from_int(long long v) { return v >= 0 ? static_cast<u64>(v) % P : P - static_cast<u64>(-v) % P; }

inline std::size_t rank(std::vector<std::vector<u64>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const u64 inv = invm(rows[r][c]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const u64 f = mulm(rows[i][c], inv);
            for (std::size_t k = c; k < cols; ++k) rows[i][k] = subm(rows[i][k], mulm(f, rows[r][k]));
        }
        ++r;
    }
    return r;
}

inline void fill_monomials(int n, int i, int left, Exp& e, std::vector<Exp>& out) {
    if (i == n - 1) {
        e[i] = left;
        out.push_back(e);
        e[i] = 0;
        return;
    }
    for (int v = 0; v <= left; ++v) {
        e[i] = v;
        fill_monomials(n, i + 1, left - v, e, out);
    }
    e[i] = 0;
}

/// Exponent vectors of degree t in n <= 4 variables, any order.
inline std::vector<Exp> monomials(int n, int t) {
    std::vector<Exp> out;
    if (t < 0) return out;
    Exp e{};
    fill_monomials(n, 0, t, e, out);
    return out;
}

inline Poly mul(const Poly& f, const Poly& g) {
    Poly h;
    for (const auto& [e1, c1] : f) {
        for (const auto& [e2, c2] : g) {
            Exp e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
            h[e] = addm(h[e], mulm(c1, c2));
        }
    }
    for (auto it = h.begin(); it != h.end();) it = it->second == 0 ? h.erase(it) : std::next(it);
    return h;
}

inline Poly linear(const std::array<u64, 4>& l) {
    Poly f;
    for (int i = 0; i < 4; ++i) {
        Exp e{};
        e[i] = 1;
        if (l[i] % P) f[e] = l[i] % P;
    }
    return f;
}

inline Poly power(const Poly& f, int d) {
    Poly r{{Exp{}, 1}};
    for (int i = 0; i < d; ++i) r = mul(r, f);
    return r;
}

inline Poly monomial(const Exp& e) { return Poly{{e, 1}}; }

inline std::vector<u64> coords(const Poly& f, const std::vector<Exp>& basis) {
    std::vector<u64> v(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto it = f.find(basis[i]);
        if (it != f.end()) v[i] = it->second;
    }
    return v;
}

inline u64 falling(int n, int k) {
    u64 r = 1;
    for (int i = 0; i < k; ++i) r = mulm(r, static_cast<u64>(n - i));
    return r;
}

/// Row of the functional G -> (d^beta G)(point) on the monomial basis.
inline std::vector<u64> partial_row(const std::vector<Exp>& basis, const Exp& beta, const std::array<u64, 4>& point) {
    std::vector<u64> row(basis.size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        u64 v = 1;
        for (int k = 0; k < 4 && v; ++k) {
            if (basis[i][k] < beta[k]) {
                v = 0;
                break;
            }
            v = mulm(v, mulm(falling(basis[i][k], beta[k]), powm(point[k], static_cast<u64>(basis[i][k] - beta[k]))));
        }
        row[i] = v;
    }
    return row;
}

/// dim [I_X^{(m)}]_t in four variables: all partials of order < m vanish.
inline long long fat_points_dim(const std::vector<std::array<u64, 4>>& pts, int m, int t) {
    const auto basis = monomials(4, t);
    std::vector<std::vector<u64>> rows;
    for (const auto& p : pts) {
        for (int o = 0; o < m; ++o) {
            for (const auto& beta : monomials(4, o)) rows.push_back(partial_row(basis, beta, p));
        }
    }
    return static_cast<long long>(basis.size()) - static_cast<long long>(rank(rows));
}

/// Rows spanning [(l_1^d, ..., l_n^d)]_t.
inline std::vector<std::vector<u64>> powers_rows(const std::vector<std::array<u64, 4>>& forms, int d, int t) {
    const auto basis = monomials(4, t);
    std::vector<std::vector<u64>> rows;
    for (const auto& l : forms) {
        const Poly p = power(linear(l), d);
        for (const auto& m : monomials(4, t - d)) rows.push_back(coords(mul(p, monomial(m)), basis));
    }
    if (rows.empty()) rows.emplace_back(basis.size(), 0);
    return rows;
}

inline long long powers_ideal_dim(const std::vector<std::array<u64, 4>>& forms, int d, int t) {
    return static_cast<long long>(rank(powers_rows(forms, d, t)));
}

/// dim A_t for A = R / (l_i^d).
inline long long quotient_dim(const std::vector<std::array<u64, 4>>& forms, int d, int t) {
    return static_cast<long long>(monomials(4, t).size()) - powers_ideal_dim(forms, d, t);
}

/// Cokernel of x l : A_{t-1} -> A_t, from dim R_t - dim([I]_t + l R_{t-1}).
inline long long coker(const std::vector<std::array<u64, 4>>& forms, int d, const std::array<u64, 4>& l, int t) {
    const auto basis = monomials(4, t);
    auto rows = powers_rows(forms, d, t);
    const Poly lp = linear(l);
    for (const auto& m : monomials(4, t - 1)) rows.push_back(coords(mul(lp, monomial(m)), basis));
    return static_cast<long long>(basis.size()) - static_cast<long long>(rank(rows));
}

}  // namespace brute
