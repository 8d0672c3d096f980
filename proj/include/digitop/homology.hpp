#pragma once

#include <cstdint>
#include <vector>

#include "digitop/image.hpp"
#include "digitop/map.hpp"
#include "digitop/matrix.hpp"

namespace digitop {

/// A q-simplex: q+1 mutually adjacent vertices, stored strictly
/// increasing (the canonical orientation; signs are carried separately).
struct Simplex {
    std::vector<int> verts;
    int dim() const { return static_cast<int>(verts.size()) - 1; }
    bool operator==(const Simplex& o) const = default;
    bool operator<(const Simplex& o) const { return verts < o.verts; }
};

/// All (q+1)-cliques of X as sorted simplices, lexicographic order.
std::vector<Simplex> simplices(const DigitalImage& X, int q);

/// Ordered simplex bases per dimension plus the exact-integer boundary
/// matrices between them.
class ChainComplex {
public:
    explicit ChainComplex(ImagePtr X);

    const DigitalImage& image() const { return *image_; }
    const ImagePtr& image_ptr() const { return image_; }

    /// Largest q with a nonempty basis (0 for a single point).
    int top_dimension() const { return static_cast<int>(basis_.size()) - 1; }

    /// Basis of C_q; empty above the top dimension.
    const std::vector<Simplex>& basis(int q) const;
    int rank(int q) const { return static_cast<int>(basis(q).size()); }

    /// Matrix of the boundary homomorphism C_q -> C_{q-1} in the stored
    /// bases (alternating-sign face sum); a 0 x rank(0) matrix for q = 0
    /// and an empty-column matrix above the top dimension.
    const IntegerMatrix& boundary_matrix(int q) const;

    /// Index of a sorted vertex tuple in basis(q), or -1 when absent.
    int simplex_index(int q, const std::vector<int>& verts) const;

private:
    ImagePtr image_;
    std::vector<std::vector<Simplex>> basis_;
    std::vector<IntegerMatrix> boundary_;
    std::vector<Simplex> empty_basis_;
};

/// H_q presented as Z^betti plus cyclic torsion factors, together with
/// the coordinate maps between cycles and quotient coordinates.
/// Quotient coordinates list the free summands first, then one
/// coordinate per torsion divisor.
struct HomologyPresentation {
    int q = 0;
    long betti = 0;
    std::vector<std::int64_t> torsion; ///< divisors >= 2, each dividing the next

    IntegerMatrix cycle_basis;         ///< chain coords of kernel generators
    IntegerMatrix quotient_projection; ///< (betti+t) x rank(C_q), cycles -> quotient coords
    IntegerMatrix representatives;     ///< rank(C_q) x (betti+t), section of the projection
    std::vector<std::int64_t> row_moduli; ///< 0 for free rows, d_i for torsion rows

    long rank() const { return betti + static_cast<long>(torsion.size()); }
    bool same_shape(const HomologyPresentation& o) const {
        return q == o.q && betti == o.betti && torsion == o.torsion;
    }
};

HomologyPresentation homology(const ChainComplex& C, int q);
HomologyPresentation homology(const DigitalImage& X, int q);

/// Chain-level induced map f_# in the stored bases: image simplex with
/// the sort-permutation sign, or a zero column when points repeat.
/// Requires f continuous.
IntegerMatrix induced_chain_map(const ChainComplex& CX, const ChainComplex& CY,
                                const VertexMap& f, int q);

struct InducedHomologyMap {
    HomologyPresentation source;
    HomologyPresentation target;
    IntegerMatrix matrix; ///< target.rank x source.rank, torsion rows reduced mod d_i
};

InducedHomologyMap induced_homology_map(const ChainComplex& CX, const ChainComplex& CY,
                                        const VertexMap& f, int q);
InducedHomologyMap induced_homology_map(const VertexMap& f, int q);

/// Equality of two maps written in the same quotient coordinates: exact
/// on free rows, modular on torsion rows.
bool homology_maps_equal(const InducedHomologyMap& A, const InducedHomologyMap& B);

/// Prism operator P: C_q(X) -> C_{q+1}(Y) for maps f, g that are
/// strongly homotopic in one step (refused otherwise). Satisfies
/// boundary(P) = g_# - f_# - P(boundary) when f and g differ at most at
/// one vertex.
IntegerMatrix prism_operator(const ChainComplex& CX, const ChainComplex& CY,
                             const VertexMap& f, const VertexMap& g, int q);

} // namespace digitop
