#include "gridwlp/poly.hpp"

#include <algorithm>

#include "gridwlp/field.hpp"

namespace gridwlp {

namespace {

template <class F>
using Table = std::vector<std::vector<typename F::Element>>;

// ff[a][b] = a! / (a-b)! for 0 <= b <= a <= n.
template <class F>
Table<F> falling_factorials(const F& field, int n) {
    Table<F> ff(static_cast<std::size_t>(n + 1));
    for (int a = 0; a <= n; ++a) {
        auto& row = ff[static_cast<std::size_t>(a)];
        row.resize(static_cast<std::size_t>(a + 1));
        row[0] = field.one();
        for (int b = 1; b <= a; ++b) row[b] = field.mul(row[b - 1], field.from_int(a - b + 1));
    }
    return ff;
}

// pw[i][e] = point[i]^e for e <= n.
template <class F>
Table<F> power_table(const F& field, std::span<const typename F::Element> point, int n) {
    Table<F> pw(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        pw[i].resize(static_cast<std::size_t>(n + 1));
        pw[i][0] = field.one();
        for (int e = 1; e <= n; ++e) pw[i][e] = field.mul(pw[i][e - 1], point[i]);
    }
    return pw;
}

Degree sum(Degree a, Degree b) { return {a.first + b.first, a.second + b.second}; }
Degree diff(Degree a, Degree b) { return {a.first - b.first, a.second - b.second}; }

bool divides(const Monomial& b, const Monomial& a) {
    for (int i = 0; i < kMaxVars; ++i) {
        if (b.exp[i] > a.exp[i]) return false;
    }
    return true;
}

int max_exponent_degree(GradingSpec spec, Degree d) {
    return spec.kind == GradingKind::Bigraded ? std::max(d.first, d.second) : d.first;
}

void require_same_grading(GradingSpec a, GradingSpec b) {
    if (!(a == b)) throw GradingMismatch("polynomials have different gradings");
}

}  // namespace

template <class F>
PolyVector<F> poly_from_terms(const F& field, GradingSpec spec, Degree deg,
                              const std::vector<std::pair<Monomial, std::int64_t>>& terms) {
    auto f = zero_poly(field, spec, deg);
    for (const auto& [m, c] : terms) {
        const bool ok = spec.kind == GradingKind::Bigraded
                            ? (m.exp[0] + m.exp[1] == deg.first && m.exp[2] + m.exp[3] == deg.second)
                            : m.total_degree() == deg.first;
        if (!ok) throw GradingMismatch("term of wrong degree");
        auto& slot = f.coeffs[monomial_index(spec, deg, m)];
        slot = field.add(slot, field.from_int(c));
    }
    return f;
}

template <class F>
bool is_zero_poly(const F& field, const PolyVector<F>& f) {
    return std::all_of(f.coeffs.begin(), f.coeffs.end(), [&](const auto& c) { return field.is_zero(c); });
}

template <class F>
bool poly_equal(const F& field, const PolyVector<F>& f, const PolyVector<F>& g) {
    if (!(f.grading == g.grading) || !(f.degree == g.degree)) return false;
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        if (!field.equal(f.coeffs[i], g.coeffs[i])) return false;
    }
    return true;
}

template <class F>
PolyVector<F> poly_add(const F& field, const PolyVector<F>& f, const PolyVector<F>& g) {
    require_same_grading(f.grading, g.grading);
    if (!(f.degree == g.degree)) throw GradingMismatch("poly_add: degrees differ");
    auto out = f;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = field.add(out.coeffs[i], g.coeffs[i]);
    return out;
}

template <class F>
PolyVector<F> poly_scale(const F& field, const PolyVector<F>& f, const typename F::Element& c) {
    auto out = f;
    for (auto& x : out.coeffs) x = field.mul(x, c);
    return out;
}

template <class F>
PolyVector<F> poly_mul(const F& field, const PolyVector<F>& f, const PolyVector<F>& g) {
    require_same_grading(f.grading, g.grading);
    const auto spec = f.grading;
    const Degree deg = sum(f.degree, g.degree);
    auto out = zero_poly(field, spec, deg);
    const auto fb = graded_basis(spec, f.degree);
    const auto gb = graded_basis(spec, g.degree);
    for (std::size_t i = 0; i < fb.size(); ++i) {
        if (field.is_zero(f.coeffs[i])) continue;
        for (std::size_t j = 0; j < gb.size(); ++j) {
            if (field.is_zero(g.coeffs[j])) continue;
            Monomial m;
            for (int k = 0; k < kMaxVars; ++k) m.exp[k] = fb[i].exp[k] + gb[j].exp[k];
            auto& slot = out.coeffs[monomial_index(spec, deg, m)];
            slot = field.add(slot, field.mul(f.coeffs[i], g.coeffs[j]));
        }
    }
    return out;
}

template <class F>
PolyVector<F> linear_form(const F& field, std::span<const typename F::Element> coeffs) {
    const auto spec = GradingSpec::total(static_cast<int>(coeffs.size()));
    PolyVector<F> out = zero_poly(field, spec, Degree{1});
    // Degree-1 basis is x1, x2, ... in order.
    for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] = coeffs[i];
    return out;
}

template <class F>
PolyVector<F> linear_power(const F& field, std::span<const typename F::Element> ell, int d) {
    if (d <= 0) throw std::invalid_argument("linear_power: exponent must be positive");
    const int n = static_cast<int>(ell.size());
    const auto spec = GradingSpec::total(n);
    const auto basis = graded_basis(spec, Degree{d});
    const auto pw = power_table(field, ell, d);
    const auto ff = falling_factorials(field, d);

    PolyVector<F> out{spec, Degree{d}, {}};
    out.coeffs.reserve(basis.size());
    for (const auto& m : basis) {
        // d! / prod(e_i!) as a product of binomials C(left, e_i).
        auto c = field.one();
        int left = d;
        for (int i = 0; i < n; ++i) {
            const int e = m.exp[i];
            c = field.mul(c, field.div(ff[left][e], ff[e][e]));
            c = field.mul(c, pw[i][e]);
            left -= e;
        }
        out.coeffs.push_back(c);
    }
    return out;
}

template <class F>
PolyVector<F> diff_action(const F& field, const PolyVector<F>& f, const PolyVector<F>& g) {
    require_same_grading(f.grading, g.grading);
    const auto spec = f.grading;
    const Degree deg = diff(f.degree, g.degree);
    if (deg.first < 0 || deg.second < 0) throw std::invalid_argument("diff_action: deg G > deg F");
    auto out = zero_poly(field, spec, deg);
    const auto fb = graded_basis(spec, f.degree);
    const auto gb = graded_basis(spec, g.degree);
    const auto ff = falling_factorials(field, max_exponent_degree(spec, f.degree));
    for (std::size_t j = 0; j < gb.size(); ++j) {
        if (field.is_zero(g.coeffs[j])) continue;
        for (std::size_t i = 0; i < fb.size(); ++i) {
            if (field.is_zero(f.coeffs[i]) || !divides(gb[j], fb[i])) continue;
            auto c = field.mul(f.coeffs[i], g.coeffs[j]);
            Monomial m;
            for (int k = 0; k < kMaxVars; ++k) {
                c = field.mul(c, ff[fb[i].exp[k]][gb[j].exp[k]]);
                m.exp[k] = fb[i].exp[k] - gb[j].exp[k];
            }
            auto& slot = out.coeffs[monomial_index(spec, deg, m)];
            slot = field.add(slot, c);
        }
    }
    return out;
}

template <class F>
typename F::Element evaluate(const F& field, const PolyVector<F>& f, std::span<const typename F::Element> point) {
    const auto basis = graded_basis(f.grading, f.degree);
    const auto pw = power_table(field, point, max_exponent_degree(f.grading, f.degree));
    auto acc = field.zero();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (field.is_zero(f.coeffs[i])) continue;
        auto term = f.coeffs[i];
        for (std::size_t k = 0; k < point.size(); ++k) term = field.mul(term, pw[k][basis[i].exp[k]]);
        acc = field.add(acc, term);
    }
    return acc;
}

template <class F>
DenseMatrix<F> partial_functionals(const F& field, GradingSpec spec, int t,
                                   std::span<const typename F::Element> point, int order) {
    if (spec.kind != GradingKind::Total || static_cast<int>(point.size()) != spec.nvars) {
        throw GradingMismatch("partial_functionals: point does not match grading");
    }
    const auto ops = graded_basis(spec, Degree{order});
    const auto cols = graded_basis(spec, Degree{t});
    check_ambient(cols.size());
    const auto pw = power_table(field, point, std::max(t, 0));
    const auto ff = falling_factorials(field, std::max(t, 0));
    DenseMatrix<F> m(field, ops.size(), cols.size());
    for (std::size_t r = 0; r < ops.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (!divides(ops[r], cols[c])) continue;
            auto v = field.one();
            for (int k = 0; k < spec.nvars; ++k) {
                const int a = cols[c].exp[k];
                const int b = ops[r].exp[k];
                v = field.mul(v, field.mul(ff[a][b], pw[k][a - b]));
            }
            m(r, c) = v;
        }
    }
    return m;
}

template <class F>
DenseMatrix<F> bigraded_partial_functionals(const F& field, Degree deg, const typename F::Element& x,
                                            const typename F::Element& y, int m) {
    const auto spec = GradingSpec::bigraded();
    const auto cols = graded_basis(spec, deg);
    check_ambient(cols.size());
    const int top = std::max({deg.first, deg.second, 0});
    const typename F::Element xy[2] = {x, y};
    const auto pw = power_table(field, std::span<const typename F::Element>(xy, 2), top);
    const auto ff = falling_factorials(field, top);
    DenseMatrix<F> out(field, 0, cols.size());
    for (int s = 0; s < m; ++s) {
        for (int i = s; i >= 0; --i) {
            const int j = s - i;
            auto row = out.append_row(field);
            for (std::size_t c = 0; c < cols.size(); ++c) {
                const int ax = cols[c].exp[1];
                const int ay = cols[c].exp[3];
                if (ax < i || ay < j) continue;
                row[c] = field.mul(field.mul(ff[ax][i], pw[0][ax - i]), field.mul(ff[ay][j], pw[1][ay - j]));
            }
        }
    }
    return out;
}

namespace {

template <class F>
std::vector<typename F::Element> apply(const F& field, const DenseMatrix<F>& m, const std::vector<typename F::Element>& v) {
    std::vector<typename F::Element> out(m.rows(), field.zero());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto acc = field.zero();
        for (std::size_t c = 0; c < m.cols(); ++c) acc = field.add(acc, field.mul(m(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

}  // namespace

template <class F>
std::vector<typename F::Element> partials_at_point(const F& field, const PolyVector<F>& f,
                                                   std::span<const typename F::Element> point, int m) {
    if (m < 1) throw std::invalid_argument("partials_at_point: order must be >= 1");
    const int order = std::min(m - 1, f.degree.first);
    return apply(field, partial_functionals(field, f.grading, f.degree.first, point, order), f.coeffs);
}

template <class F>
std::vector<typename F::Element> bigraded_partials_at_point(const F& field, const PolyVector<F>& f,
                                                            const typename F::Element& x,
                                                            const typename F::Element& y, int m) {
    if (f.grading.kind != GradingKind::Bigraded) throw GradingMismatch("expected a bigraded form");
    return apply(field, bigraded_partial_functionals(field, f.degree, x, y, m), f.coeffs);
}

template <class F>
DenseMatrix<F> derivation_matrix(const F& field, const PolyVector<F>& f, int s) {
    const auto spec = f.grading;
    const auto ops = graded_basis(spec, Degree{s});
    const Degree target{f.degree.first - s};
    DenseMatrix<F> out(field, ops.size(), basis_size(spec, target));
    if (target.first < 0) return out;
    for (std::size_t r = 0; r < ops.size(); ++r) {
        auto g = poly_from_terms(field, spec, Degree{s}, {{ops[r], 1}});
        auto d = diff_action(field, f, g);
        for (std::size_t c = 0; c < d.coeffs.size(); ++c) out(r, c) = d.coeffs[c];
    }
    return out;
}

#define GRIDWLP_INSTANTIATE(F)                                                                         \
    template PolyVector<F> poly_from_terms<F>(const F&, GradingSpec, Degree,                           \
                                              const std::vector<std::pair<Monomial, std::int64_t>>&);  \
    template bool is_zero_poly<F>(const F&, const PolyVector<F>&);                                     \
    template bool poly_equal<F>(const F&, const PolyVector<F>&, const PolyVector<F>&);                 \
    template PolyVector<F> poly_add<F>(const F&, const PolyVector<F>&, const PolyVector<F>&);          \
    template PolyVector<F> poly_scale<F>(const F&, const PolyVector<F>&, const F::Element&);           \
    template PolyVector<F> poly_mul<F>(const F&, const PolyVector<F>&, const PolyVector<F>&);          \
    template PolyVector<F> linear_form<F>(const F&, std::span<const F::Element>);                      \
    template PolyVector<F> linear_power<F>(const F&, std::span<const F::Element>, int);                \
    template PolyVector<F> diff_action<F>(const F&, const PolyVector<F>&, const PolyVector<F>&);       \
    template F::Element evaluate<F>(const F&, const PolyVector<F>&, std::span<const F::Element>);      \
    template DenseMatrix<F> partial_functionals<F>(const F&, GradingSpec, int,                         \
                                                   std::span<const F::Element>, int);                  \
    template DenseMatrix<F> bigraded_partial_functionals<F>(const F&, Degree, const F::Element&,       \
                                                            const F::Element&, int);                   \
    template std::vector<F::Element> partials_at_point<F>(const F&, const PolyVector<F>&,              \
                                                          std::span<const F::Element>, int);           \
    template std::vector<F::Element> bigraded_partials_at_point<F>(                                    \
        const F&, const PolyVector<F>&, const F::Element&, const F::Element&, int);                    \
    template DenseMatrix<F> derivation_matrix<F>(const F&, const PolyVector<F>&, int);

GRIDWLP_INSTANTIATE(PrimeField)
GRIDWLP_INSTANTIATE(RationalField)

#undef GRIDWLP_INSTANTIATE

}  // namespace gridwlp
