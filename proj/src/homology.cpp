#include "digitop/homology.hpp"

#include <algorithm>
#include <stdexcept>

#include "digitop/homotopy.hpp"

namespace digitop {

namespace {

// cliques of size q+1, built by extending smaller cliques in lex order
void extend_cliques(const DigitalImage& X, std::vector<int>& current, int target,
                    std::vector<Simplex>& out) {
    if (static_cast<int>(current.size()) == target) {
        out.push_back(Simplex{current});
        return;
    }
    int start = current.empty() ? 0 : current.back() + 1;
    for (int v = start; v < X.size(); ++v) {
        bool ok = true;
        for (int u : current)
            if (!X.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) {
            current.push_back(v);
            extend_cliques(X, current, target, out);
            current.pop_back();
        }
    }
}

// sorts the tuple in place; returns the permutation sign, or 0 on repeats
int sort_sign(std::vector<int>& verts) {
    int sign = 1;
    for (std::size_t i = 1; i < verts.size(); ++i)
        for (std::size_t j = i; j > 0 && verts[j - 1] >= verts[j]; --j) {
            if (verts[j - 1] == verts[j])
                return 0;
            std::swap(verts[j - 1], verts[j]);
            sign = -sign;
        }
    return sign;
}

} // namespace

std::vector<Simplex> simplices(const DigitalImage& X, int q) {
    if (q < 0)
        throw std::invalid_argument("simplex dimension must be nonnegative");
    std::vector<Simplex> out;
    if (q >= X.size())
        return out;
    std::vector<int> current;
    extend_cliques(X, current, q + 1, out);
    return out;
}

ChainComplex::ChainComplex(ImagePtr X) : image_(std::move(X)) {
    for (int q = 0;; ++q) {
        auto s = simplices(*image_, q);
        if (s.empty())
            break;
        basis_.push_back(std::move(s));
    }
    boundary_.resize(basis_.size() + 1);
    for (int q = 0; q <= top_dimension() + 1; ++q) {
        IntegerMatrix m(q == 0 ? 0 : rank(q - 1), rank(q));
        if (q > 0) {
            const auto& bq = basis(q);
            for (int c = 0; c < static_cast<int>(bq.size()); ++c) {
                std::vector<int> face(bq[c].verts.size() - 1);
                for (std::size_t omit = 0; omit < bq[c].verts.size(); ++omit) {
                    std::size_t w = 0;
                    for (std::size_t i = 0; i < bq[c].verts.size(); ++i)
                        if (i != omit)
                            face[w++] = bq[c].verts[i];
                    int r = simplex_index(q - 1, face);
                    m.at(r, c) = (omit % 2 == 0) ? 1 : -1;
                }
            }
        }
        boundary_[q] = std::move(m);
    }
}

const std::vector<Simplex>& ChainComplex::basis(int q) const {
    if (q < 0)
        throw std::invalid_argument("negative chain dimension");
    if (q >= static_cast<int>(basis_.size()))
        return empty_basis_;
    return basis_[q];
}

const IntegerMatrix& ChainComplex::boundary_matrix(int q) const {
    if (q < 0)
        throw std::invalid_argument("negative chain dimension");
    if (q > top_dimension() + 1) {
        static const IntegerMatrix empty(0, 0);
        return empty;
    }
    return boundary_[q];
}

int ChainComplex::simplex_index(int q, const std::vector<int>& verts) const {
    const auto& b = basis(q);
    Simplex key{verts};
    auto it = std::lower_bound(b.begin(), b.end(), key);
    if (it == b.end() || !(*it == key))
        return -1;
    return static_cast<int>(it - b.begin());
}

HomologyPresentation homology(const ChainComplex& C, int q) {
    if (q < 0)
        throw std::invalid_argument("homology dimension must be nonnegative");
    HomologyPresentation out;
    out.q = q;
    int mq = C.rank(q);
    if (mq == 0) {
        out.cycle_basis = IntegerMatrix(0, 0);
        out.quotient_projection = IntegerMatrix(0, 0);
        out.representatives = IntegerMatrix(0, 0);
        return out;
    }

    // kernel of the boundary leaving dimension q
    SmithResult sa = smith_normal_form(C.boundary_matrix(q));
    int k = mq - sa.rank;
    std::vector<int> kernel_cols(k);
    for (int i = 0; i < k; ++i)
        kernel_cols[i] = sa.rank + i;
    IntegerMatrix K = sa.V.select_cols(kernel_cols);          // mq x k
    IntegerMatrix kernel_coords = sa.Vinv.select_rows(kernel_cols); // k x mq

    // boundaries entering dimension q, written in kernel coordinates
    IntegerMatrix B = C.boundary_matrix(q + 1);
    IntegerMatrix Bk = kernel_coords * B; // k x m_{q+1}

    SmithResult sb = smith_normal_form(Bk);
    out.betti = k - sb.rank;
    std::vector<int> keep_rows;
    std::vector<std::int64_t> moduli;
    for (int i = sb.rank; i < k; ++i) { // free coordinates first
        keep_rows.push_back(i);
        moduli.push_back(0);
    }
    for (int i = 0; i < sb.rank; ++i)
        if (sb.D.at(i, i) >= 2) {
            keep_rows.push_back(i);
            moduli.push_back(to_int64(sb.D.at(i, i)));
            out.torsion.push_back(to_int64(sb.D.at(i, i)));
        }

    out.cycle_basis = K;
    out.quotient_projection = (sb.U * kernel_coords).select_rows(keep_rows);
    out.representatives = (K * sb.Uinv).select_cols(keep_rows);
    out.row_moduli = std::move(moduli);
    return out;
}

HomologyPresentation homology(const DigitalImage& X, int q) {
    return homology(ChainComplex(share(X)), q);
}

IntegerMatrix induced_chain_map(const ChainComplex& CX, const ChainComplex& CY,
                                const VertexMap& f, int q) {
    if (!(f.dom() == CX.image()) || !(f.cod() == CY.image()))
        throw std::invalid_argument("induced map: complexes do not match the map");
    if (!is_continuous(f))
        throw std::invalid_argument("induced map requires a continuous map");
    IntegerMatrix m(CY.rank(q), CX.rank(q));
    const auto& bq = CX.basis(q);
    std::vector<int> image;
    for (int c = 0; c < static_cast<int>(bq.size()); ++c) {
        image.resize(bq[c].verts.size());
        for (std::size_t i = 0; i < bq[c].verts.size(); ++i)
            image[i] = f(bq[c].verts[i]);
        std::vector<int> sorted = image;
        int sign = sort_sign(sorted);
        if (sign == 0)
            continue; // degenerate simplex
        int r = CY.simplex_index(q, sorted);
        if (r < 0)
            throw std::logic_error("image of a simplex is not a simplex");
        m.at(r, c) = sign;
    }
    return m;
}

InducedHomologyMap induced_homology_map(const ChainComplex& CX, const ChainComplex& CY,
                                        const VertexMap& f, int q) {
    InducedHomologyMap out;
    out.source = homology(CX, q);
    out.target = homology(CY, q);
    long rs = out.source.rank(), rt = out.target.rank();
    if (rs == 0 || rt == 0) {
        out.matrix = IntegerMatrix(static_cast<int>(rt), static_cast<int>(rs));
        return out;
    }
    IntegerMatrix chain = induced_chain_map(CX, CY, f, q);
    out.matrix = out.target.quotient_projection * (chain * out.source.representatives);
    for (int i = 0; i < out.matrix.rows(); ++i) {
        std::int64_t d = out.target.row_moduli[i];
        if (d != 0)
            for (int j = 0; j < out.matrix.cols(); ++j)
                out.matrix.at(i, j) = ((out.matrix.at(i, j) % d) + d) % d;
    }
    return out;
}

InducedHomologyMap induced_homology_map(const VertexMap& f, int q) {
    return induced_homology_map(ChainComplex(f.dom_ptr()), ChainComplex(f.cod_ptr()), f, q);
}

bool homology_maps_equal(const InducedHomologyMap& A, const InducedHomologyMap& B) {
    if (!A.source.same_shape(B.source) || !A.target.same_shape(B.target) ||
        !(A.source.cycle_basis == B.source.cycle_basis) ||
        !(A.target.cycle_basis == B.target.cycle_basis))
        throw std::invalid_argument("homology map comparison across different presentations");
    for (int i = 0; i < A.matrix.rows(); ++i) {
        std::int64_t d = A.target.row_moduli[i];
        for (int j = 0; j < A.matrix.cols(); ++j) {
            const BigInt& a = A.matrix.at(i, j);
            const BigInt& b = B.matrix.at(i, j);
            if (d == 0 ? (a != b) : (BigInt(a - b) % d != 0))
                return false;
        }
    }
    return true;
}

IntegerMatrix prism_operator(const ChainComplex& CX, const ChainComplex& CY,
                             const VertexMap& f, const VertexMap& g, int q) {
    if (!(f.dom() == CX.image()) || !(f.cod() == CY.image()))
        throw std::invalid_argument("prism operator: complexes do not match the maps");
    if (!one_step_strong_homotopic(f, g))
        throw std::invalid_argument(
            "prism operator requires maps strongly homotopic in one step");
    IntegerMatrix m(CY.rank(q + 1), CX.rank(q));
    const auto& bq = CX.basis(q);
    for (int c = 0; c < static_cast<int>(bq.size()); ++c) {
        const auto& verts = bq[c].verts;
        int qq = static_cast<int>(verts.size()) - 1;
        for (int j = 0; j <= qq; ++j) {
            // <f(x_0),...,f(x_j),g(x_j),...,g(x_q)>
            std::vector<int> tuple;
            tuple.reserve(verts.size() + 1);
            for (int i = 0; i <= j; ++i)
                tuple.push_back(f(verts[i]));
            for (int i = j; i <= qq; ++i)
                tuple.push_back(g(verts[i]));
            int sign = sort_sign(tuple);
            if (sign == 0)
                continue;
            int r = CY.simplex_index(q + 1, tuple);
            if (r < 0)
                throw std::logic_error("prism term is not a simplex");
            m.at(r, c) += (j % 2 == 0) ? sign : -sign;
        }
    }
    return m;
}

} // namespace digitop
