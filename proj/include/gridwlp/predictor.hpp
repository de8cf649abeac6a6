#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace gridwlp {

/// C(n, k) for n >= k >= 0 and 0 otherwise, negative n included. Throws for k < 0.
long long ext_binom(long long n, long long k);

/// d = (a-1) q + r with 0 <= r < a-1.
struct SquareGridParams {
    int a = 0;
    int d = 0;
    int q = 0;
    int r = 0;

    static SquareGridParams make(int a, int d);
};

/// d = (a-1) q' + r' with 1 <= r' <= a-1, and d = (b-1) q + r with 0 <= r < b-1.
struct NonSquareParams {
    int a = 0;
    int b = 0;
    int d = 0;
    int q_prime = 0;
    int r_prime = 0;
    int q = 0;
    int r = 0;

    static NonSquareParams make(int a, int b, int d);
};

/// Generic cokernel of A_{d+t-1} -> A_{d+t}, valid when a(t+1) + b > d + t.
std::optional<long long> coker_formula_geproci(int a, int b, int d, int t);

struct SquarePrediction {
    long long coker = 0;          // at the critical degree d+q-1
    long long delta_critical = 0; // Delta h_A(d+q-1)
    std::optional<long long> delta_below;  // Delta h_A(d+q-2), only when r = 0
};

SquarePrediction square_coker_and_delta(const SquareGridParams& p);

long long nonsquare_coker(const NonSquareParams& p);

/// WLP holds iff d <= a-1 or (a-1) | d.
bool wlp_verdict_theorem_a(int a, int d);

/// ab * C(t-d+3, 3) on the window d <= t <= d+q-1 where d = (b-1) q + r.
std::optional<long long> low_degree_ideal_dim(int a, int b, int d, int t);

/// h_s = min(C(s+3,3), C(2t-s+3,3)) for 0 <= s <= 2t.
std::vector<long long> compressed_gorenstein_hf(int t);

}  // namespace gridwlp
