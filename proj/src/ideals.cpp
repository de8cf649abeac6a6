#include "gridwlp/ideals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gridwlp/field.hpp"
#include "gridwlp/predictor.hpp"

namespace gridwlp {

namespace {

Ambient total_ambient(int nvars, int t) { return {GradingSpec::total(nvars), Degree{t}}; }

// Appends the rows m * g for every monomial m of degree t - deg g.
template <class F>
void append_multiples(const F& field, const PolyVector<F>& g, int t, DenseMatrix<F>& rows) {
    const GradingSpec spec = g.grading;
    const int e = g.degree.first;
    if (t < e) return;
    const auto gbasis = graded_basis(spec, g.degree);
    std::vector<std::pair<Monomial, typename F::Element>> terms;
    for (std::size_t k = 0; k < gbasis.size(); ++k) {
        if (!field.is_zero(g.coeffs[k])) terms.emplace_back(gbasis[k], g.coeffs[k]);
    }
    const Degree target{t};
    for (const auto& mono : graded_basis(spec, Degree{t - e})) {
        auto row = rows.append_row(field);
        for (const auto& [alpha, c] : terms) {
            Monomial sum;
            for (int v = 0; v < kMaxVars; ++v) sum.exp[v] = mono.exp[v] + alpha.exp[v];
            row[monomial_index(spec, target, sum)] = c;
        }
    }
}

template <class F>
PolyVector<F> poly_power(const F& field, const PolyVector<F>& f, int k) {
    auto out = poly_from_terms(field, f.grading, Degree{0}, {{Monomial{}, 1}});
    for (int i = 0; i < k; ++i) out = poly_mul(field, out, f);
    return out;
}

}  // namespace

template <class F>
FatPointsSpec<F> grid_fat_points(const GridConfig<F>& grid, int m) {
    FatPointsSpec<F> out;
    out.m = m;
    for (const auto& p : grid.points()) out.points.emplace_back(p.begin(), p.end());
    return out;
}

template <class F>
BigradedFatPointsSpec<F> grid_bigraded_fat_points(const GridConfig<F>& grid, int m) {
    return {grid.segre_parameters(), m};
}

template <class F>
SubspaceBasis<F> fat_points_piece(const F& field, const FatPointsSpec<F>& spec, int t) {
    if (spec.m < 1) throw std::invalid_argument("fat points need m >= 1");
    if (spec.points.empty()) throw std::invalid_argument("fat points need at least one point");
    const int n = static_cast<int>(spec.points.front().size());
    const Ambient amb = total_ambient(n, t);
    if (t < 0) return SubspaceBasis<F>::zero(field, amb);
    check_ambient(amb.dim());
    const int order = std::min(spec.m - 1, t);
    DenseMatrix<F> conditions(field, 0, amb.dim());
    for (const auto& p : spec.points) {
        if (static_cast<int>(p.size()) != n) throw std::invalid_argument("fat points of mixed dimension");
        const auto rows = partial_functionals(field, amb.grading, t, std::span<const typename F::Element>(p), order);
        for (std::size_t r = 0; r < rows.rows(); ++r) conditions.append_row(rows.row(r));
    }
    return SubspaceBasis<F>::kernel_of(field, amb, conditions);
}

template <class F>
long long fat_points_dim(const F& field, const FatPointsSpec<F>& spec, int t) {
    return static_cast<long long>(fat_points_piece(field, spec, t).dim());
}

template <class F>
SubspaceBasis<F> bigraded_fat_points_piece(const F& field, const BigradedFatPointsSpec<F>& spec, Degree deg) {
    if (spec.m < 1) throw std::invalid_argument("fat points need m >= 1");
    const Ambient amb{GradingSpec::bigraded(), deg};
    if (deg.first < 0 || deg.second < 0) return SubspaceBasis<F>::zero(field, amb);
    check_ambient(amb.dim());
    DenseMatrix<F> conditions(field, 0, amb.dim());
    for (const auto& [x, y] : spec.points) {
        const auto rows = bigraded_partial_functionals(field, deg, x, y, spec.m);
        for (std::size_t r = 0; r < rows.rows(); ++r) conditions.append_row(rows.row(r));
    }
    return SubspaceBasis<F>::kernel_of(field, amb, conditions);
}

template <class F>
long long bigraded_fat_points_dim(const F& field, const BigradedFatPointsSpec<F>& spec, Degree deg) {
    return static_cast<long long>(bigraded_fat_points_piece(field, spec, deg).dim());
}

template <class F>
SubspaceBasis<F> powers_ideal_piece(const F& field, std::span<const Point4<F>> forms, int d, int t) {
    if (d < 1) throw std::invalid_argument("powers ideal needs d >= 1");
    const Ambient amb = total_ambient(4, t);
    if (t < d) return SubspaceBasis<F>::zero(field, amb);
    check_ambient(amb.dim());
    DenseMatrix<F> rows(field, 0, amb.dim());
    for (const auto& ell : forms) {
        append_multiples(field, linear_power(field, std::span<const typename F::Element>(ell), d), t, rows);
    }
    return SubspaceBasis<F>::span_of(field, amb, std::move(rows));
}

template <class F>
SubspaceBasis<F> powers_ideal_piece(const F& field, const GridConfig<F>& grid, int d, int t) {
    return powers_ideal_piece(field, std::span<const Point4<F>>(grid.points()), d, t);
}

template <class F>
SubspaceBasis<F> ci_power_piece(const F& field, const PolyVector<F>& f, const PolyVector<F>& g, int m, int t) {
    if (!(f.grading == GradingSpec::total(3)) || !(g.grading == GradingSpec::total(3))) {
        throw GradingMismatch("ci_power_piece: f and g must be forms in three variables");
    }
    if (m < 1) throw std::invalid_argument("ci_power_piece: m >= 1");
    const int a = f.degree.first;
    const int b = g.degree.first;
    auto s = [](int e) { return static_cast<long long>(count_monomials(3, e)); };
    for (int e = std::min(a, b); e <= a + b; ++e) {
        DenseMatrix<F> rows(field, 0, count_monomials(3, e));
        append_multiples(field, f, e, rows);
        append_multiples(field, g, e, rows);
        if (static_cast<long long>(rank(field, rows)) != s(e - a) + s(e - b) - s(e - a - b)) {
            throw std::invalid_argument("ci_power_piece: (f, g) is not a regular sequence");
        }
    }
    const Ambient amb = total_ambient(3, t);
    if (t < 0) return SubspaceBasis<F>::zero(field, amb);
    check_ambient(amb.dim());
    DenseMatrix<F> rows(field, 0, amb.dim());
    for (int i = 0; i <= m; ++i) {
        const auto gen = poly_mul(field, poly_power(field, f, m - i), poly_power(field, g, i));
        append_multiples(field, gen, t, rows);
    }
    return SubspaceBasis<F>::span_of(field, amb, std::move(rows));
}

long long ci_power_dim_formula(int a, int b, int m, int t) {
    if (a < 1 || b < 1 || m < 1) throw std::invalid_argument("ci_power_dim_formula: a, b, m >= 1");
    auto s = [](long long e) { return ext_binom(e + 2, 2); };
    long long out = 0;
    for (int i = 0; i <= m; ++i) out += s(t - a * (m - i) - b * i);
    for (int i = 0; i <= m - 1; ++i) out -= s(t - (a + b) - a * (m - 1 - i) - b * i);
    return out;
}

template <class F>
SubspaceBasis<F> perp_piece(const F& field, const PolyVector<F>& f, int s) {
    const Ambient amb{f.grading, Degree{s}};
    if (s < 0) return SubspaceBasis<F>::zero(field, amb);
    check_ambient(amb.dim());
    if (s > f.degree.first) return SubspaceBasis<F>::whole(field, amb);
    // G = sum c_k M_k kills F iff sum c_k d(F)/d(M_k) = 0.
    return SubspaceBasis<F>::kernel_of(field, amb, derivation_matrix(field, f, s).transpose());
}

template <class F>
PolyVector<F> restrict_to_quadric(const F& field, const PolyVector<F>& f) {
    if (!(f.grading == GradingSpec::total(4))) throw GradingMismatch("restrict_to_quadric: need a form in x1..x4");
    const int t = f.degree.first;
    auto out = zero_poly(field, GradingSpec::bigraded(), Degree{t, t});
    const auto basis = graded_basis(f.grading, f.degree);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (field.is_zero(f.coeffs[k])) continue;
        const auto& e = basis[k].exp;
        const Monomial image{{e[0] + e[1], e[2] + e[3], e[0] + e[2], e[1] + e[3]}};
        auto& c = out.coeffs[monomial_index(out.grading, out.degree, image)];
        c = field.add(c, f.coeffs[k]);
    }
    return out;
}

template <class F>
long long restriction_image_dim(const F& field, const SubspaceBasis<F>& piece) {
    const Ambient amb = piece.ambient();
    const int t = amb.degree.first;
    DenseMatrix<F> rows(field, 0, basis_size(GradingSpec::bigraded(), Degree{t, t}));
    for (std::size_t r = 0; r < piece.dim(); ++r) {
        const auto row = piece.rref().row(r);
        PolyVector<F> f{amb.grading, amb.degree, {row.begin(), row.end()}};
        rows.append_row(restrict_to_quadric(field, f).coeffs);
    }
    return static_cast<long long>(rank(field, rows));
}

template <class F>
GradedQuotient<F>::GradedQuotient(F field, PieceFn piece, int degree_cap, std::string label)
    : field_(std::move(field)), piece_(std::move(piece)), degree_cap_(degree_cap), label_(std::move(label)) {}

template <class F>
const SubspaceBasis<F>& GradedQuotient<F>::ideal(int t) const {
    {
        std::lock_guard lock(mutex_);
        auto it = cache_.find(t);
        if (it != cache_.end()) return *it->second;
    }
    auto piece = std::make_shared<const SubspaceBasis<F>>(piece_(t));
    std::lock_guard lock(mutex_);
    return *cache_.emplace(t, std::move(piece)).first->second;
}

template <class F>
long long GradedQuotient<F>::ideal_dim(int t) const {
    return static_cast<long long>(ideal(t).dim());
}

template <class F>
long long GradedQuotient<F>::dim(int t) const {
    if (t < 0 || t > degree_cap_) return 0;
    return static_cast<long long>(ideal(t).codim());
}

template <class F>
std::shared_ptr<GradedQuotient<F>> powers_quotient(const F& field, std::vector<Point4<F>> forms, int d) {
    if (d < 1) throw std::invalid_argument("powers ideal needs d >= 1");
    auto label = std::to_string(forms.size()) + " powers of degree " + std::to_string(d);
    auto piece = [field, forms = std::move(forms), d](int t) {
        return powers_ideal_piece(field, std::span<const Point4<F>>(forms), d, t);
    };
    return std::make_shared<GradedQuotient<F>>(field, std::move(piece), 4 * (d - 1), std::move(label));
}

template <class F>
std::shared_ptr<GradedQuotient<F>> powers_quotient(const F& field, const GridConfig<F>& grid, int d) {
    return powers_quotient(field, grid.points(), d);
}

template <class F>
std::shared_ptr<GradedQuotient<F>> perp_quotient(const F& field, PolyVector<F> f) {
    const int cap = f.degree.first;
    auto piece = [field, f = std::move(f)](int s) { return perp_piece(field, f, s); };
    return std::make_shared<GradedQuotient<F>>(field, std::move(piece), cap, "perp of a form of degree " + std::to_string(cap));
}

long long HilbertTable::at(int t) const {
    if (t >= first && t <= last()) return dims[static_cast<std::size_t>(t - first)];
    if (quotient && (t < 0 || t > last())) return 0;
    throw std::out_of_range("HilbertTable: degree " + std::to_string(t) + " not tabulated");
}

long long HilbertTable::delta(int t) const { return at(t) - at(t - 1); }

std::string HilbertTable::to_csv() const {
    std::ostringstream out;
    out << "t,dim,delta\n";
    for (int t = first; t <= last(); ++t) {
        out << t << ',' << at(t) << ',';
        if (quotient || t > first) out << delta(t);
        out << '\n';
    }
    return out.str();
}

template <class F>
HilbertTable hilbert_table(const GradedQuotient<F>& q) {
    HilbertTable out;
    for (int t = 0;; ++t) {
        const long long h = q.dim(t);
        out.dims.push_back(h);
        if (h == 0) break;
    }
    return out;
}

template <class F>
HilbertTable hilbert_table(const F& field, const FatPointsSpec<F>& spec, int first, int last) {
    HilbertTable out{false, first, {}};
    for (int t = first; t <= last; ++t) out.dims.push_back(fat_points_dim(field, spec, t));
    return out;
}

template <class F>
std::vector<long long> socle_dims(const GradedQuotient<F>& q, int first, int last) {
    const F& field = q.field();
    std::vector<long long> out;
    for (int t = first; t <= last; ++t) {
        const long long here = q.dim(t);
        const long long next = q.dim(t + 1);
        if (here == 0 || next == 0) {
            out.push_back(here);
            continue;
        }
        const auto& src = q.ideal(t);
        const auto& dst = q.ideal(t + 1);
        const GradingSpec spec = GradingSpec::total(4);
        const auto basis = graded_basis(spec, Degree{t});
        const auto n = static_cast<std::size_t>(next);
        DenseMatrix<F> m(field, 0, 4 * n);
        for (std::size_t col : src.free_columns()) {
            auto row = m.append_row(field);
            for (int v = 0; v < 4; ++v) {
                Monomial shifted = basis[col];
                ++shifted.exp[v];
                const std::pair<std::size_t, typename F::Element> term{monomial_index(spec, Degree{t + 1}, shifted),
                                                                       field.one()};
                dst.accumulate_normal_form(field, std::span(&term, 1), row.subspan(v * n, n));
            }
        }
        out.push_back(here - static_cast<long long>(rank(field, m)));
    }
    return out;
}

template <class F>
DualityCheck macaulay_dual_check(const F& field, const GridConfig<F>& grid, int d, int t) {
    if (t < d) throw std::invalid_argument("macaulay_dual_check needs t >= d");
    DualityCheck out;
    out.lhs = static_cast<long long>(count_monomials(4, t)) -
              static_cast<long long>(powers_ideal_piece(field, grid, d, t).dim());
    out.rhs = fat_points_dim(field, grid_fat_points(grid, t - d + 1), t);
    return out;
}

#define GRIDWLP_INSTANTIATE(F)                                                                                  \
    template FatPointsSpec<F> grid_fat_points<F>(const GridConfig<F>&, int);                                    \
    template BigradedFatPointsSpec<F> grid_bigraded_fat_points<F>(const GridConfig<F>&, int);                   \
    template SubspaceBasis<F> fat_points_piece<F>(const F&, const FatPointsSpec<F>&, int);                      \
    template long long fat_points_dim<F>(const F&, const FatPointsSpec<F>&, int);                               \
    template SubspaceBasis<F> bigraded_fat_points_piece<F>(const F&, const BigradedFatPointsSpec<F>&, Degree);  \
    template long long bigraded_fat_points_dim<F>(const F&, const BigradedFatPointsSpec<F>&, Degree);           \
    template SubspaceBasis<F> powers_ideal_piece<F>(const F&, std::span<const Point4<F>>, int, int);            \
    template SubspaceBasis<F> powers_ideal_piece<F>(const F&, const GridConfig<F>&, int, int);                  \
    template SubspaceBasis<F> ci_power_piece<F>(const F&, const PolyVector<F>&, const PolyVector<F>&, int, int); \
    template SubspaceBasis<F> perp_piece<F>(const F&, const PolyVector<F>&, int);                               \
    template PolyVector<F> restrict_to_quadric<F>(const F&, const PolyVector<F>&);                              \
    template long long restriction_image_dim<F>(const F&, const SubspaceBasis<F>&);                             \
    template class GradedQuotient<F>;                                                                           \
    template std::shared_ptr<GradedQuotient<F>> powers_quotient<F>(const F&, const GridConfig<F>&, int);        \
    template std::shared_ptr<GradedQuotient<F>> powers_quotient<F>(const F&, std::vector<Point4<F>>, int);      \
    template std::shared_ptr<GradedQuotient<F>> perp_quotient<F>(const F&, PolyVector<F>);                      \
    template HilbertTable hilbert_table<F>(const GradedQuotient<F>&);                                           \
    template HilbertTable hilbert_table<F>(const F&, const FatPointsSpec<F>&, int, int);                        \
    template std::vector<long long> socle_dims<F>(const GradedQuotient<F>&, int, int);                          \
    template DualityCheck macaulay_dual_check<F>(const F&, const GridConfig<F>&, int, int);

GRIDWLP_INSTANTIATE(PrimeField)
GRIDWLP_INSTANTIATE(RationalField)

#undef GRIDWLP_INSTANTIATE

}  // namespace gridwlp
