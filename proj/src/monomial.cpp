#include "gridwlp/monomial.hpp"

#include <stdexcept>

namespace gridwlp {

std::size_t count_monomials(int nvars, int t) {
    if (t < 0 || nvars < 0) return 0;
    if (nvars == 0) return t == 0 ? 1 : 0;
    // C(t + n - 1, n - 1), built incrementally to stay exact.
    std::size_t c = 1;
    for (int k = 1; k < nvars; ++k) {
        c = c * static_cast<std::size_t>(t + k) / static_cast<std::size_t>(k);
    }
    return c;
}

bool is_valid_degree(GradingSpec spec, Degree deg) {
    if (spec.kind == GradingKind::Bigraded) return deg.first >= 0 && deg.second >= 0;
    return deg.first >= 0 && spec.nvars >= 1 && spec.nvars <= kMaxVars;
}

std::size_t basis_size(GradingSpec spec, Degree deg) {
    if (!is_valid_degree(spec, deg)) return 0;
    if (spec.kind == GradingKind::Bigraded) {
        return static_cast<std::size_t>(deg.first + 1) * static_cast<std::size_t>(deg.second + 1);
    }
    return count_monomials(spec.nvars, deg.first);
}

namespace {

// Lex-descending enumeration of exponent vectors of degree t in vars [from, from+n).
void enumerate(int n, int t, int from, Monomial& cur, std::vector<Monomial>& out) {
    if (n == 1) {
        cur.exp[from] = t;
        out.push_back(cur);
        cur.exp[from] = 0;
        return;
    }
    for (int e = t; e >= 0; --e) {
        cur.exp[from] = e;
        enumerate(n - 1, t - e, from + 1, cur, out);
    }
    cur.exp[from] = 0;
}

// Number of monomials of degree t in n vars that precede `m` (restricted to
// vars [from, from+n)) in lex-descending order. Monomials whose leading exponent
// exceeds e0 come first; there are count_monomials(n, t - e0 - 1) of those.
std::size_t lex_rank(int n, int t, int from, const Monomial& m) {
    std::size_t idx = 0;
    for (int k = 0; k + 1 < n; ++k) {
        const int e = m.exp[from + k];
        idx += count_monomials(n - k, t - e - 1);
        t -= e;
    }
    return idx;
}

}  // namespace

std::vector<Monomial> graded_basis(GradingSpec spec, Degree deg) {
    std::vector<Monomial> out;
    if (!is_valid_degree(spec, deg)) return out;
    out.reserve(basis_size(spec, deg));
    Monomial cur;
    if (spec.kind == GradingKind::Total) {
        enumerate(spec.nvars, deg.first, 0, cur, out);
        return out;
    }
    for (int ex = deg.first; ex >= 0; --ex) {
        for (int ey = deg.second; ey >= 0; --ey) {
            out.push_back(Monomial{{ex, deg.first - ex, ey, deg.second - ey}});
        }
    }
    return out;
}

std::size_t monomial_index(GradingSpec spec, Degree deg, const Monomial& m) {
    if (spec.kind == GradingKind::Bigraded) {
        const auto ix = static_cast<std::size_t>(deg.first - m.exp[0]);
        const auto iy = static_cast<std::size_t>(deg.second - m.exp[2]);
        return ix * static_cast<std::size_t>(deg.second + 1) + iy;
    }
    return lex_rank(spec.nvars, deg.first, 0, m);
}

std::string to_string(GradingSpec spec, const Monomial& m) {
    static constexpr const char* total_names[] = {"x1", "x2", "x3", "x4"};
    static constexpr const char* bi_names[] = {"x0", "x1", "y0", "y1"};
    const auto* names = spec.kind == GradingKind::Bigraded ? bi_names : total_names;
    std::string s;
    for (int i = 0; i < spec.nvars; ++i) {
        if (m.exp[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += names[i];
        if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace gridwlp
