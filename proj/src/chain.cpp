#include "nervelab/chain.hpp"

#include <algorithm>
#include <map>

namespace nervelab {

namespace {

std::string simplex_label(const Simplex& s) {
    std::string out;
    for (const auto& v : s) out += (out.empty() ? "" : ",") + v;
    return out;
}

}  // namespace

std::size_t ChainComplex::rank_at(int degree) const {
    const int i = degree - min_degree;
    if (i < 0 || i >= static_cast<int>(basis.size())) return 0;
    return basis[i].size();
}

const IntegerMatrix& ChainComplex::boundary_at(int degree) const {
    static const IntegerMatrix empty;
    const int i = degree - min_degree;
    if (i < 0 || i >= static_cast<int>(boundary.size())) return empty;
    return boundary[i];
}

bool ChainComplex::boundaries_compose_to_zero() const {
    for (std::size_t i = 1; i < boundary.size(); ++i) {
        if (!(boundary[i - 1] * boundary[i]).is_zero()) return false;
    }
    return true;
}

ChainComplex chain_complex(const SimplicialComplex& K) {
    ChainComplex C;
    C.min_degree = 0;
    const int d = K.dim();
    if (d < 0) return C;

    std::vector<std::vector<Simplex>> faces(d + 1);
    std::vector<std::map<Simplex, std::size_t>> index(d + 1);
    for (int k = 0; k <= d; ++k) {
        faces[k] = K.faces_of_dim(k);
        for (std::size_t i = 0; i < faces[k].size(); ++i) index[k][faces[k][i]] = i;
    }

    C.basis.resize(d + 1);
    C.boundary.resize(d + 1);
    for (int k = 0; k <= d; ++k) {
        for (const auto& s : faces[k]) C.basis[k].push_back(simplex_label(s));
    }
    C.boundary[0] = IntegerMatrix(0, faces[0].size());
    for (int k = 1; k <= d; ++k) {
        IntegerMatrix B(faces[k - 1].size(), faces[k].size());
        for (std::size_t j = 0; j < faces[k].size(); ++j) {
            const Simplex& s = faces[k][j];
            for (std::size_t pos = 0; pos < s.size(); ++pos) {
                Simplex sub;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != pos) sub.push_back(s[i]);
                }
                B.at(index[k - 1].at(sub), j) = (pos % 2 == 0) ? 1 : -1;
            }
        }
        C.boundary[k] = std::move(B);
    }
    return C;
}

ChainComplex augment(const ChainComplex& C) {
    if (C.min_degree != 0) throw MalformedInput("augment expects a degree-0 based complex");
    ChainComplex A;
    A.min_degree = -1;
    A.basis.push_back({"[]"});
    for (const auto& b : C.basis) A.basis.push_back(b);
    A.boundary.push_back(IntegerMatrix(0, 1));
    if (!C.basis.empty()) {
        IntegerMatrix aug(1, C.basis[0].size());
        for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(0, j) = 1;
        A.boundary.push_back(std::move(aug));
        for (std::size_t i = 1; i < C.boundary.size(); ++i) A.boundary.push_back(C.boundary[i]);
    }
    return A;
}

bool ChainMap::commutes() const {
    const int top = std::max(source.top_degree(), target.top_degree());
    for (int k = 1; k <= top; ++k) {
        const std::size_t sk = source.rank_at(k);
        // target_d(k) . f(k) == f(k-1) . source_d(k)
        IntegerMatrix fk(target.rank_at(k), sk);
        if (static_cast<int>(degree.size()) > k) fk = degree[k];
        IntegerMatrix fk1(target.rank_at(k - 1), source.rank_at(k - 1));
        if (k - 1 < static_cast<int>(degree.size())) fk1 = degree[k - 1];

        IntegerMatrix lhs(target.rank_at(k - 1), sk);
        if (target.rank_at(k) > 0 && sk > 0) lhs = target.boundary_at(k) * fk;
        IntegerMatrix rhs(target.rank_at(k - 1), sk);
        if (source.rank_at(k) > 0 && source.rank_at(k - 1) > 0) {
            rhs = fk1 * source.boundary_at(k);
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

ChainMap induced_chain_map(const SimplicialMap& f) {
    if (auto why = simplicial_map_violation(f.source, f.target, f.vertex_map); !why.empty()) {
        throw MalformedInput("induced_chain_map: " + why);
    }
    ChainMap F;
    F.source = chain_complex(f.source);
    F.target = chain_complex(f.target);
    const int top = std::max(0, F.source.top_degree());

    for (int k = 0; k <= top; ++k) {
        auto src_faces = f.source.faces_of_dim(k);
        auto tgt_faces = f.target.faces_of_dim(k);
        std::map<Simplex, std::size_t> tgt_index;
        for (std::size_t i = 0; i < tgt_faces.size(); ++i) tgt_index[tgt_faces[i]] = i;

        IntegerMatrix M(tgt_faces.size(), src_faces.size());
        for (std::size_t j = 0; j < src_faces.size(); ++j) {
            const Simplex& s = src_faces[j];
            std::vector<Vertex> img;
            for (const auto& v : s) img.push_back(f(v));
            // Collapsed simplices go to zero.
            std::vector<Vertex> sorted = img;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            // Orientation sign: parity of the permutation sorting the image.
            int sign = 1;
            std::vector<Vertex> work = img;
            for (std::size_t a = 0; a < work.size(); ++a) {
                std::size_t m = a;
                for (std::size_t b = a + 1; b < work.size(); ++b) {
                    if (work[b] < work[m]) m = b;
                }
                if (m != a) {
                    std::swap(work[a], work[m]);
                    sign = -sign;
                }
            }
            M.at(tgt_index.at(work), j) = sign;
        }
        F.degree.push_back(std::move(M));
    }
    return F;
}

ChainComplex mapping_cone(const ChainMap& f) {
    if (!f.commutes()) throw MalformedInput("mapping_cone: chain map does not commute");
    if (f.source.min_degree != 0 || f.target.min_degree != 0) {
        throw MalformedInput("mapping_cone expects degree-0 based complexes");
    }
    ChainComplex cone;
    cone.min_degree = 0;
    const int top = std::max(f.source.top_degree() + 1, f.target.top_degree());
    if (top < 0) return cone;

    cone.basis.resize(top + 1);
    cone.boundary.resize(top + 1);
    for (int k = 0; k <= top; ++k) {
        for (int i = 0; i < static_cast<int>(f.source.rank_at(k - 1)); ++i) {
            cone.basis[k].push_back("s:" + f.source.basis[k - 1][i]);
        }
        if (k <= f.target.top_degree()) {
            for (const auto& lbl : f.target.basis[k]) cone.basis[k].push_back("t:" + lbl);
        }
    }
    for (int k = 0; k <= top; ++k) {
        const std::size_t src_k1 = f.source.rank_at(k - 1);
        const std::size_t tgt_k = f.target.rank_at(k);
        const std::size_t rows = (k >= 1) ? f.source.rank_at(k - 2) + f.target.rank_at(k - 1) : 0;
        IntegerMatrix B(rows, src_k1 + tgt_k);
        if (k >= 1) {
            const std::size_t row_split = f.source.rank_at(k - 2);
            // (a, b) -> (-da, db - f a)
            if (src_k1 > 0 && k - 1 >= 1) {
                const IntegerMatrix& ds = f.source.boundary_at(k - 1);
                for (std::size_t i = 0; i < ds.rows(); ++i) {
                    for (std::size_t j = 0; j < ds.cols(); ++j) {
                        B.at(i, j) = -ds.at(i, j);
                    }
                }
            }
            if (src_k1 > 0 && k - 1 < static_cast<int>(f.degree.size())) {
                const IntegerMatrix& fm = f.degree[k - 1];
                for (std::size_t i = 0; i < fm.rows(); ++i) {
                    for (std::size_t j = 0; j < fm.cols(); ++j) {
                        B.at(row_split + i, j) = -fm.at(i, j);
                    }
                }
            }
            if (tgt_k > 0 && k >= 1 && f.target.rank_at(k - 1) > 0) {
                const IntegerMatrix& dt = f.target.boundary_at(k);
                for (std::size_t i = 0; i < dt.rows(); ++i) {
                    for (std::size_t j = 0; j < dt.cols(); ++j) {
                        B.at(row_split + i, src_k1 + j) = dt.at(i, j);
                    }
                }
            }
        }
        cone.boundary[k] = std::move(B);
    }
    return cone;
}

}  // namespace nervelab
