#pragma once

// Independent brute-force oracles for the test suites. Everything here is
// deliberately written against the raw definitions (residue scans, dense
// linear algebra) rather than the library's algorithms.

#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "crat/polyq.hpp"

namespace oracles {

using crat::CRat;
using crat::Int;
using crat::PolyC;
using crat::Rat;

/// 1 in aZ + bZ + p^N Z, decided by scanning multiples of gcd(a, b) mod p^N.
inline bool one_in_closure_scan(long a, long b, long p, unsigned N = 8) {
    long g = std::gcd(a, b);
    long M = 1;
    for (unsigned i = 0; i < N; ++i) M *= p;
    if (g == 0) return false;
    long x = 0;
    for (long k = 0; k < M; ++k) {
        x = (x + g) % M;
        if (x == 1) return true;
        if (x == g && k > 0) return false;  // cycled without hitting 1
    }
    return false;
}

/// First x in [0, prod) with x = r_k mod m_k for all k.
inline std::optional<long> crt_scan(const std::vector<long>& moduli, const std::vector<long>& targets) {
    long prod = 1;
    for (long m : moduli) prod *= m;
    for (long x = 0; x < prod; ++x) {
        bool ok = true;
        for (size_t k = 0; k < moduli.size(); ++k)
            if ((x - targets[k]) % moduli[k] != 0) ok = false;
        if (ok) return x;
    }
    return std::nullopt;
}

/// B subseteq A + p^m Z decided by marking residues mod p^m.
inline bool covers_residue_scan(long gen_a, long gen_b, long p, unsigned m) {
    long M = 1;
    for (unsigned i = 0; i < m; ++i) M *= p;
    std::vector<char> reachable(M, 0);
    for (long l = 0; l < M; ++l) reachable[((gen_a % M) * l % M + M) % M] = 1;
    for (long k = 0; k < M; ++k)
        if (!reachable[((gen_b % M) * k % M + M) % M]) return false;
    return true;
}

/// Exact Gaussian elimination solve of the confluent Vandermonde system for
/// Hermite data: returns the unique polynomial of degree < sum(m_n + 1).
inline PolyC confluent_vandermonde_solve(const std::vector<CRat>& points,
                                         const std::vector<unsigned long>& orders,
                                         const std::vector<std::vector<CRat>>& jets) {
    using crat::cq_add;
    using crat::cq_div;
    using crat::cq_mul;
    using crat::cq_neg;
    using crat::cq_pow;
    using crat::cq_sub;

    size_t dim = 0;
    for (auto m : orders) dim += m + 1;
    std::vector<std::vector<CRat>> M(dim, std::vector<CRat>(dim + 1));

    size_t row = 0;
    for (size_t nidx = 0; nidx < points.size(); ++nidx) {
        for (unsigned long k = 0; k <= orders[nidx]; ++k, ++row) {
            // d^k/dz^k z^i at z_n = (i)_k z_n^(i-k); right side k! w_{k,n}.
            for (size_t i = 0; i < dim; ++i) {
                if (i < k) continue;
                Int falling(1);
                for (unsigned long t = 0; t < k; ++t) falling *= Int(i - t);
                M[row][i] = cq_mul(CRat(Rat(falling)), cq_pow(points[nidx], i - k));
            }
            M[row][dim] = cq_mul(CRat(Rat(crat::factorial(k))), jets[nidx][k]);
        }
    }

    for (size_t col = 0; col < dim; ++col) {
        size_t piv = col;
        while (piv < dim && M[piv][col].is_zero()) ++piv;
        if (piv == dim) return {};  // singular: cannot happen for distinct nodes
        std::swap(M[piv], M[col]);
        for (size_t r = 0; r < dim; ++r) {
            if (r == col || M[r][col].is_zero()) continue;
            CRat f = cq_div(M[r][col], M[col][col]);
            for (size_t c = col; c <= dim; ++c) M[r][c] = cq_sub(M[r][c], cq_mul(f, M[col][c]));
        }
    }
    PolyC out(dim);
    for (size_t i = 0; i < dim; ++i) out[i] = cq_div(M[i][dim], M[i][i]);
    return crat::poly_trim(std::move(out));
}

inline std::mt19937_64 rng(unsigned long seed) { return std::mt19937_64(seed); }

inline long rand_in(std::mt19937_64& g, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g);
}

inline Rat rand_rat(std::mt19937_64& g, long num_range, long den_range) {
    long d = rand_in(g, 1, den_range);
    return crat::make_rat(Int(rand_in(g, -num_range, num_range)), Int(d));
}

}  // namespace oracles
