#include "nervelab/snf.hpp"

#include <algorithm>

namespace nervelab {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw MalformedInput("matrix dimension mismatch in product");
    IntegerMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out.at(i, j) += a * other.at(k, j);
            }
        }
    }
    return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntegerMatrix::add_row(std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
}

void IntegerMatrix::add_col(std::size_t a, std::size_t b, const Int& c) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
}

void IntegerMatrix::negate_row(std::size_t a) {
    for (std::size_t j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntegerMatrix::negate_col(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

std::vector<Int> SNFDecomposition::diagonal() const {
    std::vector<Int> d;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i) d.push_back(D.at(i, i));
    return d;
}

namespace {

struct Reducer {
    IntegerMatrix A;
    IntegerMatrix U, V;
    bool track;

    Reducer(const IntegerMatrix& M, bool with_transforms)
        : A(M),
          U(with_transforms ? IntegerMatrix::identity(M.rows()) : IntegerMatrix()),
          V(with_transforms ? IntegerMatrix::identity(M.cols()) : IntegerMatrix()),
          track(with_transforms) {}

    void row_add(std::size_t a, std::size_t b, const Int& c) {
        A.add_row(a, b, c);
        if (track) U.add_row(a, b, c);
    }
    void col_add(std::size_t a, std::size_t b, const Int& c) {
        A.add_col(a, b, c);
        if (track) V.add_col(a, b, c);
    }
    void row_swap(std::size_t a, std::size_t b) {
        A.swap_rows(a, b);
        if (track) U.swap_rows(a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        A.swap_cols(a, b);
        if (track) V.swap_cols(a, b);
    }
    void row_negate(std::size_t a) {
        A.negate_row(a);
        if (track) U.negate_row(a);
    }

    // Smallest nonzero |entry| in the trailing block, row-major tie break.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best;
        for (std::size_t i = t; i < A.rows(); ++i) {
            for (std::size_t j = t; j < A.cols(); ++j) {
                const Int& x = A.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        }
        return found;
    }

    void run() {
        const std::size_t n = std::min(A.rows(), A.cols());
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t pi, pj;
            if (!find_pivot(t, pi, pj)) break;
            row_swap(t, pi);
            col_swap(t, pj);

            for (;;) {
                // Clear column t.  Truncated quotients shrink remainders, so
                // this terminates; a surviving remainder becomes the next,
                // strictly smaller pivot.
                bool clean = true;
                for (std::size_t i = t + 1; i < A.rows(); ++i) {
                    if (A.at(i, t) == 0) continue;
                    Int q = A.at(i, t) / A.at(t, t);
                    if (q != 0) row_add(i, t, -q);
                    if (A.at(i, t) != 0) {
                        row_swap(t, i);
                        clean = false;
                        break;
                    }
                }
                if (!clean) continue;
                for (std::size_t j = t + 1; j < A.cols(); ++j) {
                    if (A.at(t, j) == 0) continue;
                    Int q = A.at(t, j) / A.at(t, t);
                    if (q != 0) col_add(j, t, -q);
                    if (A.at(t, j) != 0) {
                        col_swap(t, j);
                        clean = false;
                        break;
                    }
                }
                if (!clean) continue;

                // Row and column t are clear.  Enforce the divisibility
                // chain: fold in a row holding a non-divisible entry.
                bool divides = true;
                for (std::size_t i = t + 1; i < A.rows() && divides; ++i) {
                    for (std::size_t j = t + 1; j < A.cols(); ++j) {
                        if (A.at(i, j) % A.at(t, t) != 0) {
                            row_add(t, i, 1);
                            divides = false;
                            break;
                        }
                    }
                }
                if (divides) break;
            }
            if (A.at(t, t) < 0) row_negate(t);
        }
    }
};

}  // namespace

SNFDecomposition smith_normal_form(const IntegerMatrix& M) {
    Reducer r(M, true);
    r.run();
    return SNFDecomposition{std::move(r.A), std::move(r.U), std::move(r.V)};
}

std::vector<Int> invariant_factors(const IntegerMatrix& M) {
    Reducer r(M, false);
    r.run();
    std::vector<Int> factors;
    const std::size_t n = std::min(M.rows(), M.cols());
    for (std::size_t t = 0; t < n; ++t) {
        if (r.A.at(t, t) == 0) break;
        factors.push_back(r.A.at(t, t));
    }
    return factors;
}

Int determinant(const IntegerMatrix& M) {
    if (M.rows() != M.cols()) throw MalformedInput("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    // Fraction-free Bareiss elimination.
    IntegerMatrix A = M;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A.at(k, k) == 0) {
            std::size_t swap_i = k;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (A.at(i, k) != 0) {
                    swap_i = i;
                    break;
                }
            }
            if (swap_i == k) return 0;
            A.swap_rows(k, swap_i);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                A.at(i, j) = (A.at(k, k) * A.at(i, j) - A.at(i, k) * A.at(k, j)) / prev;
            }
            A.at(i, k) = 0;
        }
        prev = A.at(k, k);
    }
    return sign * A.at(n - 1, n - 1);
}

}  // namespace nervelab
