#include "gridwlp/predictor.hpp"

#include <algorithm>
#include <string>

namespace gridwlp {

long long ext_binom(long long n, long long k) {
    if (k < 0) throw std::invalid_argument("ext_binom: negative k");
    if (n < k) return 0;
    long long out = 1;
    for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

SquareGridParams SquareGridParams::make(int a, int d) {
    if (a < 2) throw std::invalid_argument("square grid needs a >= 2");
    if (d < a - 1) throw std::invalid_argument("square grid formulas need d >= a-1");
    return {a, d, d / (a - 1), d % (a - 1)};
}

NonSquareParams NonSquareParams::make(int a, int b, int d) {
    if (!(b > a && a >= 2)) throw std::invalid_argument("non-square grid needs b > a >= 2");
    if (d < a) throw std::invalid_argument("non-square formula needs d >= a");
    NonSquareParams p{a, b, d};
    p.q_prime = (d - 1) / (a - 1);
    p.r_prime = d - (a - 1) * p.q_prime;
    p.q = d / (b - 1);
    p.r = d % (b - 1);
    return p;
}

std::optional<long long> coker_formula_geproci(int a, int b, int d, int t) {
    if (a * (t + 1) + b <= d + t) return std::nullopt;
    long long sum = 0;
    for (int i = 0; i <= t + 1; ++i) sum += ext_binom(d + t + 2 - a * (t + 1) - (b - a) * i, 2);
    return sum;
}

SquarePrediction square_coker_and_delta(const SquareGridParams& p) {
    const long long a = p.a, q = p.q, r = p.r;
    SquarePrediction out;
    out.coker = (q + 1) * ext_binom(r + 1, 2);
    out.delta_critical = (2 * a * q * r + a * q + r * r + r - a * a * q) / 2;
    if (r == 0) out.delta_below = q * ext_binom(a, 2);
    return out;
}

long long nonsquare_coker(const NonSquareParams& p) {
    long long sum = 0;
    for (int i = 0; i <= p.q_prime; ++i) sum += ext_binom(p.r_prime + 1 - (p.b - p.a) * i, 2);
    return sum;
}

bool wlp_verdict_theorem_a(int a, int d) { return d <= a - 1 || d % (a - 1) == 0; }

std::optional<long long> low_degree_ideal_dim(int a, int b, int d, int t) {
    if (d < b - 1) return std::nullopt;
    const int q = d / (b - 1);
    if (t < d || t > d + q - 1) return std::nullopt;
    return static_cast<long long>(a) * b * ext_binom(t - d + 3, 3);
}

std::vector<long long> compressed_gorenstein_hf(int t) {
    if (t < 1) throw std::invalid_argument("compressed_gorenstein_hf: t >= 1");
    std::vector<long long> h;
    for (int s = 0; s <= 2 * t; ++s) h.push_back(std::min(ext_binom(s + 3, 3), ext_binom(2 * t - s + 3, 3)));
    return h;
}

}  // namespace gridwlp
