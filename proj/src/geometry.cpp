#include "gridwlp/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "gridwlp/field.hpp"
#include "gridwlp/ideals.hpp"

namespace gridwlp {

namespace {

template <class F>
bool has_duplicates(const F& field, const std::vector<typename F::Element>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (field.equal(xs[i], xs[j])) return true;
        }
    }
    return false;
}

template <class F>
std::vector<typename F::Element> distinct_random(const F& field, int n, RandomStream& rng) {
    if (field.modulus() != 0 && field.modulus() <= static_cast<std::uint64_t>(n)) {
        throw std::invalid_argument("F_" + std::to_string(field.modulus()) + " has fewer than " + std::to_string(n) +
                                    " distinct nonzero elements");
    }
    std::vector<typename F::Element> out;
    while (static_cast<int>(out.size()) < n) {
        auto x = field.random_nonzero(rng);
        if (std::none_of(out.begin(), out.end(), [&](const auto& y) { return field.equal(x, y); })) {
            out.push_back(x);
        }
    }
    return out;
}

template <class F>
Point4<F> combine(const F& field, const typename F::Element& s, const Point4<F>& p, const typename F::Element& t,
                  const Point4<F>& q) {
    Point4<F> out;
    for (int k = 0; k < 4; ++k) out[k] = field.add(field.mul(s, p[k]), field.mul(t, q[k]));
    return out;
}

template <class F>
bool is_grid_point(const F& field, const GridConfig<F>& grid, const Point4<F>& p) {
    return std::any_of(grid.points().begin(), grid.points().end(),
                       [&](const auto& q) { return proportional<F>(field, p, q); });
}

template <class F>
bool on_any_grid_chord(const F& field, const GridConfig<F>& grid, const Point4<F>& p) {
    const auto& pts = grid.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (on_line(field, p, pts[i], pts[j])) return true;
        }
    }
    return false;
}

void check_index(bool ok, const char* what) {
    if (!ok) throw GeometryError(std::string("locus index out of range: ") + what);
}

}  // namespace

template <class F>
GridConfig<F>::GridConfig(const F& field, std::vector<Element> u, std::vector<Element> v) {
    if (u.size() > v.size()) std::swap(u, v);
    if (u.size() < 2 || v.size() < 2) throw GeometryError("grid needs a, b >= 2");
    if (has_duplicates(field, u) || has_duplicates(field, v)) throw GeometryError("duplicate grid parameters");
    u_ = std::move(u);
    v_ = std::move(v);
    const int na = a();
    const int nb = b();
    points_.reserve(static_cast<std::size_t>(na * nb));
    planes_.reserve(static_cast<std::size_t>(na * nb));
    for (int i = 0; i < na; ++i) {
        for (int j = 0; j < nb; ++j) {
            const auto& ui = u_[static_cast<std::size_t>(i)];
            const auto& vj = v_[static_cast<std::size_t>(j)];
            points_.push_back({field.one(), vj, ui, field.mul(ui, vj)});
            planes_.push_back({field.mul(ui, vj), field.neg(ui), field.neg(vj), field.one()});
        }
    }
    quadric_ = poly_from_terms(field, GradingSpec::total(4), Degree{2},
                               {{Monomial{{1, 0, 0, 1}}, 1}, {Monomial{{0, 1, 1, 0}}, -1}});
}

template <class F>
std::vector<std::pair<typename F::Element, typename F::Element>> GridConfig<F>::segre_parameters() const {
    std::vector<std::pair<Element, Element>> out;
    for (const auto& ui : u_) {
        for (const auto& vj : v_) out.emplace_back(ui, vj);
    }
    return out;
}

template <class F>
GridConfig<F> make_grid(const F& field, int a, int b, RandomStream& rng) {
    if (a < 2 || b < 2) throw GeometryError("grid needs a, b >= 2");
    auto u = distinct_random(field, a, rng);
    auto v = distinct_random(field, b, rng);
    return GridConfig<F>(field, std::move(u), std::move(v));
}

template <class F>
GridConfig<F> seeded_grid(const F& field, int a, int b, RandomSeed seed) {
    RandomStream rng(seed, "grid", (static_cast<std::uint64_t>(a) << 16) | static_cast<std::uint64_t>(b));
    return make_grid(field, a, b, rng);
}

template <class F>
GridConfig<F> make_grid(const F& field, const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    if constexpr (!F::is_rational) {
        std::int64_t largest = 0;
        for (auto x : u) largest = std::max<std::int64_t>(largest, std::llabs(x));
        for (auto x : v) largest = std::max<std::int64_t>(largest, std::llabs(x));
        const long double bound = 2.0L * static_cast<long double>(largest) * largest * largest * largest;
        if (static_cast<long double>(field.modulus()) <= bound) {
            throw FieldError("prime too small for the explicit grid parameters");
        }
    }
    std::vector<typename F::Element> fu, fv;
    for (auto x : u) fu.push_back(field.from_int(x));
    for (auto x : v) fv.push_back(field.from_int(x));
    return GridConfig<F>(field, std::move(fu), std::move(fv));
}

Locus Locus::parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string head = text.substr(0, colon);
    std::vector<int> idx;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                idx.push_back(std::stoi(tok) - 1);
            } catch (const std::exception&) {
                throw GeometryError("bad locus index in '" + text + "'");
            }
        }
    }
    auto need = [&](std::size_t n) {
        if (idx.size() != n) throw GeometryError("locus '" + text + "' expects " + std::to_string(n) + " indices");
        for (int x : idx) {
            if (x < 0) throw GeometryError("locus indices are 1-based");
        }
    };
    if (head == "generic") {
        need(0);
        return generic();
    }
    if (head == "plane") {
        need(2);
        return plane(idx[0], idx[1]);
    }
    if (head == "lambda") {
        need(1);
        return lambda(idx[0]);
    }
    if (head == "mu") {
        need(1);
        return mu(idx[0]);
    }
    if (head == "chord") {
        need(4);
        return chord(idx[0], idx[1], idx[2], idx[3]);
    }
    throw GeometryError("unknown locus '" + text + "'");
}

std::string Locus::to_string() const {
    auto s = [](int x) { return std::to_string(x + 1); };
    switch (kind) {
        case Kind::Generic: return "generic";
        case Kind::Plane: return "plane:" + s(i) + "," + s(j);
        case Kind::Lambda: return "lambda:" + s(i);
        case Kind::Mu: return "mu:" + s(j);
        case Kind::Chord: return "chord:" + s(i) + "," + s(j) + "," + s(k) + "," + s(l);
    }
    return "?";
}

template <class F>
typename F::Element pairing(const F& field, std::span<const typename F::Element> form,
                         std::span<const typename F::Element> point) {
    auto acc = field.zero();
    for (std::size_t k = 0; k < form.size(); ++k) acc = field.add(acc, field.mul(form[k], point[k]));
    return acc;
}

template <class F>
bool proportional(const F& field, std::span<const typename F::Element> p, std::span<const typename F::Element> q) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            if (!field.equal(field.mul(p[i], q[j]), field.mul(p[j], q[i]))) return false;
        }
    }
    return true;
}

template <class F>
bool on_line(const F& field, const Point4<F>& p, const Point4<F>& a, const Point4<F>& b) {
    DenseMatrix<F> m(field, 3, 4);
    for (int k = 0; k < 4; ++k) {
        m(0, k) = p[k];
        m(1, k) = a[k];
        m(2, k) = b[k];
    }
    return rank(field, m) <= 2;
}

template <class F>
Point4<F> sample_form(const F& field, const GridConfig<F>& grid, const Locus& locus, RandomStream& rng) {
    using Kind = Locus::Kind;
    auto rnd = [&] { return field.random_nonzero(rng); };
    switch (locus.kind) {
        case Kind::Generic: {
            while (true) {
                Point4<F> p{rnd(), rnd(), rnd(), rnd()};
                if (!is_grid_point(field, grid, p)) return p;
            }
        }
        case Kind::Plane: {
            check_index(locus.i < grid.a() && locus.j < grid.b(), "plane");
            const auto& h = grid.tangent_plane(locus.i, locus.j);
            while (true) {
                Point4<F> p{rnd(), rnd(), rnd(), field.zero()};
                // h[3] == 1, so solve h . p = 0 for the last coordinate.
                p[3] = field.neg(field.add(field.add(field.mul(h[0], p[0]), field.mul(h[1], p[1])), field.mul(h[2], p[2])));
                if (!is_grid_point(field, grid, p) && !on_any_grid_chord(field, grid, p)) return p;
            }
        }
        case Kind::Lambda:
        case Kind::Mu: {
            const bool is_lambda = locus.kind == Kind::Lambda;
            check_index(is_lambda ? locus.i < grid.a() : locus.j < grid.b(), is_lambda ? "lambda" : "mu");
            const auto [p, q] = is_lambda ? grid.lambda(locus.i) : grid.mu(locus.j);
            while (true) {
                auto x = combine(field, rnd(), p, rnd(), q);
                if (!is_grid_point(field, grid, x)) return x;
            }
        }
        case Kind::Chord: {
            check_index(locus.i < grid.a() && locus.j < grid.b() && locus.k < grid.a() && locus.l < grid.b(), "chord");
            if (locus.i == locus.k && locus.j == locus.l) throw GeometryError("chord endpoints must differ");
            const auto& p = grid.point(locus.i, locus.j);
            const auto& q = grid.point(locus.k, locus.l);
            while (true) {
                auto x = combine(field, rnd(), p, rnd(), q);
                if (!is_grid_point(field, grid, x)) return x;
            }
        }
    }
    throw GeometryError("invalid locus");
}

template <class F>
Projection<F> projection_from(const F& field, const Point4<F>& center) {
    int k = 0;
    while (k < 4 && field.is_zero(center[static_cast<std::size_t>(k)])) ++k;
    if (k == 4) throw GeometryError("projection centre must be nonzero");
    Projection<F> proj{center, {}};
    int row = 0;
    for (int j = 0; j < 4; ++j) {
        if (j == k) continue;
        // L = c_k x_j - c_j x_k vanishes at the centre.
        Point4<F> form{field.zero(), field.zero(), field.zero(), field.zero()};
        form[j] = center[k];
        form[k] = field.neg(center[j]);
        proj.forms[row++] = form;
    }
    return proj;
}

template <class F>
Projection<F> reparametrize(const F& field, const Projection<F>& proj,
                            const std::array<std::array<typename F::Element, 3>, 3>& m) {
    DenseMatrix<F> mm(field, 3, 3);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) mm(r, c) = m[r][c];
    }
    if (rank(field, mm) != 3) throw GeometryError("reparametrisation must be invertible");
    Projection<F> out{proj.center, {}};
    for (int r = 0; r < 3; ++r) {
        Point4<F> form{field.zero(), field.zero(), field.zero(), field.zero()};
        for (int c = 0; c < 3; ++c) {
            for (int k = 0; k < 4; ++k) form[k] = field.add(form[k], field.mul(m[r][c], proj.forms[c][k]));
        }
        out.forms[r] = form;
    }
    return out;
}

template <class F>
PlanePointSet<F> project_points(const F& field, std::span<const Point4<F>> points, const Projection<F>& proj) {
    PlanePointSet<F> out;
    for (std::size_t s = 0; s < points.size(); ++s) {
        if (proportional<F>(field, points[s], proj.center)) throw GeometryError("projection centre is a point of the set");
        Point3<F> img;
        for (int r = 0; r < 3; ++r) img[r] = pairing<F>(field, proj.forms[r], points[s]);
        std::size_t pos = out.points.size();
        for (std::size_t q = 0; q < out.points.size(); ++q) {
            if (proportional<F>(field, img, out.points[q])) {
                pos = q;
                break;
            }
        }
        if (pos == out.points.size()) {
            out.points.push_back(img);
        } else {
            for (std::size_t t = 0; t < s; ++t) {
                if (out.image_of[t] == pos) out.collisions.emplace_back(t, s);
            }
        }
        out.image_of.push_back(pos);
    }
    return out;
}

template <class F>
PlanePointSet<F> project_from_point(const F& field, const GridConfig<F>& grid, const Projection<F>& proj) {
    return project_points<F>(field, grid.points(), proj);
}

template <class F>
PlanePointSet<F> project_from_point(const F& field, const GridConfig<F>& grid, const Point4<F>& center) {
    return project_from_point(field, grid, projection_from(field, center));
}

template <class F>
long long plane_points_hilbert(const F& field, const PlanePointSet<F>& pts, int t) {
    std::vector<std::vector<typename F::Element>> coords;
    for (const auto& p : pts.points) coords.emplace_back(p.begin(), p.end());
    const auto dim_s = static_cast<long long>(count_monomials(3, t));
    return dim_s - static_cast<long long>(fat_points_dim(field, FatPointsSpec<F>{coords, 1}, t));
}

template <class F>
bool is_ci_hilbert(const F& field, const PlanePointSet<F>& pts, int a, int b) {
    if (a > b) std::swap(a, b);
    if (static_cast<int>(pts.points.size()) != a * b) return false;
    auto s = [](int e) { return static_cast<long long>(count_monomials(3, e)); };
    for (int t = 0; t <= a + b - 2; ++t) {
        const long long ci = s(t) - s(t - a) - s(t - b) + s(t - a - b);
        if (plane_points_hilbert(field, pts, t) != ci) return false;
    }
    // Equal Hilbert functions do not suffice (five of nine points on a line
    // still give 1,3,6,8,9). The set is a complete intersection iff some f of
    // degree a and g of degree b in its ideal form a regular sequence; with f
    // fixed, any g outside (f) will do when one does.
    std::vector<std::vector<typename F::Element>> coords;
    for (const auto& p : pts.points) coords.emplace_back(p.begin(), p.end());
    const FatPointsSpec<F> spec{coords, 1};
    const auto low = fat_points_piece(field, spec, a);
    const auto high = fat_points_piece(field, spec, b);
    auto row_poly = [&](const SubspaceBasis<F>& piece, std::size_t r) {
        const auto row = piece.rref().row(r);
        return PolyVector<F>{piece.ambient().grading, piece.ambient().degree, {row.begin(), row.end()}};
    };
    const auto f = row_poly(low, 0);
    for (std::size_t r = a == b ? 1 : 0; r < high.dim(); ++r) {
        try {
            ci_power_piece(field, f, row_poly(high, r), 1, a + b);
            return true;
        } catch (const std::invalid_argument&) {
        }
    }
    return false;
}

#define GRIDWLP_INSTANTIATE(F)                                                                               \
    template class GridConfig<F>;                                                                            \
    template GridConfig<F> make_grid<F>(const F&, int, int, RandomStream&);                                  \
    template GridConfig<F> seeded_grid<F>(const F&, int, int, RandomSeed);                                   \
    template GridConfig<F> make_grid<F>(const F&, const std::vector<std::int64_t>&,                          \
                                        const std::vector<std::int64_t>&);                                   \
    template Point4<F> sample_form<F>(const F&, const GridConfig<F>&, const Locus&, RandomStream&);          \
    template F::Element pairing<F>(const F&, std::span<const F::Element>, std::span<const F::Element>);         \
    template bool proportional<F>(const F&, std::span<const F::Element>, std::span<const F::Element>);       \
    template bool on_line<F>(const F&, const Point4<F>&, const Point4<F>&, const Point4<F>&);                \
    template Projection<F> projection_from<F>(const F&, const Point4<F>&);                                   \
    template Projection<F> reparametrize<F>(const F&, const Projection<F>&,                                  \
                                            const std::array<std::array<F::Element, 3>, 3>&);                \
    template PlanePointSet<F> project_points<F>(const F&, std::span<const Point4<F>>, const Projection<F>&); \
    template PlanePointSet<F> project_from_point<F>(const F&, const GridConfig<F>&, const Point4<F>&);       \
    template PlanePointSet<F> project_from_point<F>(const F&, const GridConfig<F>&, const Projection<F>&);   \
    template long long plane_points_hilbert<F>(const F&, const PlanePointSet<F>&, int);                      \
    template bool is_ci_hilbert<F>(const F&, const PlanePointSet<F>&, int, int);

GRIDWLP_INSTANTIATE(PrimeField)
GRIDWLP_INSTANTIATE(RationalField)

#undef GRIDWLP_INSTANTIATE

}  // namespace gridwlp
