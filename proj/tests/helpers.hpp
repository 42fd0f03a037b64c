#pragma once

#include <functional>
#include <numeric>
#include <random>

#include "nervelab/chain.hpp"

namespace nervelab::testing {

inline IntegerMatrix random_matrix(std::mt19937& gen, std::size_t max_dim, int lo, int hi) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(lo, hi);
    IntegerMatrix M(dim(gen), dim(gen));
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) {
            M.at(i, j) = entry(gen);
        }
    }
    return M;
}

/// Brute-force invariant factors: d_k = gcd of all k x k minors divided by
/// the gcd of all (k-1) x (k-1) minors.  Exponential; keep matrices small.
inline std::vector<Int> minor_gcd_invariant_factors(const IntegerMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    std::vector<Int> minor_gcds;  // minor_gcds[k-1] = gcd of all k x k minors
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        Int g = 0;
        std::vector<std::size_t> ri(k), ci(k);
        std::function<void(std::size_t, std::size_t)> pick_cols;
        std::function<void(std::size_t, std::size_t)> pick_rows =
            [&](std::size_t depth, std::size_t start) {
                if (depth == k) {
                    pick_cols(0, 0);
                    return;
                }
                for (std::size_t i = start; i < r; ++i) {
                    ri[depth] = i;
                    pick_rows(depth + 1, i + 1);
                }
            };
        pick_cols = [&](std::size_t depth, std::size_t start) {
            if (depth == k) {
                IntegerMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i) {
                    for (std::size_t j = 0; j < k; ++j) {
                        sub.at(i, j) = M.at(ri[i], ci[j]);
                    }
                }
                g = boost::multiprecision::gcd(g, determinant(sub));
                return;
            }
            for (std::size_t j = start; j < c; ++j) {
                ci[depth] = j;
                pick_cols(depth + 1, j + 1);
            }
        };
        pick_rows(0, 0);
        if (g == 0) break;  // rank reached; higher minors all vanish
        minor_gcds.push_back(g);
    }
    std::vector<Int> factors;
    for (std::size_t k = 0; k < minor_gcds.size(); ++k) {
        factors.push_back(k == 0 ? minor_gcds[0] : minor_gcds[k] / minor_gcds[k - 1]);
    }
    return factors;
}

/// Integer solvability of A x = b, decided through the Smith form of A.
inline bool solvable_over_z(const IntegerMatrix& A, const std::vector<Int>& b) {
    const SNFDecomposition snf = smith_normal_form(A);
    std::vector<Int> ub(A.rows(), 0);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.rows(); ++j) {
            ub[i] += snf.U.at(i, j) * b[j];
        }
    }
    const std::size_t n = std::min(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        const Int d = i < n ? snf.D.at(i, i) : Int(0);
        if (d == 0) {
            if (ub[i] != 0) return false;
        } else if (ub[i] % d != 0) {
            return false;
        }
    }
    return true;
}

/// Do two parallel chain maps induce the same map on homology in degree k?
/// Checked on a kernel basis of the source boundary: the difference of the
/// images must be an integral boundary of the target.
inline bool induce_same_homology(const ChainMap& f, const ChainMap& g, int k) {
    const IntegerMatrix dk = f.source.boundary_at(k);
    const SNFDecomposition snf = smith_normal_form(dk);
    const std::size_t n = f.source.rank_at(k);
    const IntegerMatrix fk = f.degree[static_cast<std::size_t>(k)];
    const IntegerMatrix gk = g.degree[static_cast<std::size_t>(k)];
    IntegerMatrix dt = f.target.boundary_at(k + 1);
    if (dt.rows() != f.target.rank_at(k)) {
        dt = IntegerMatrix(f.target.rank_at(k), f.target.rank_at(k + 1));
    }
    for (std::size_t j = 0; j < n; ++j) {
        const bool in_kernel =
            j >= std::min(dk.rows(), dk.cols()) || snf.D.at(j, j) == 0;
        if (!in_kernel) continue;
        std::vector<Int> diff(f.target.rank_at(k), 0);
        for (std::size_t i = 0; i < diff.size(); ++i) {
            for (std::size_t t = 0; t < n; ++t) {
                diff[i] += (fk.at(i, t) - gk.at(i, t)) * snf.V.at(t, j);
            }
        }
        if (!solvable_over_z(dt, diff)) return false;
    }
    return true;
}

}  // namespace nervelab::testing
