#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace digitop {

/// A finite digital image: vertices 0..n-1 with a symmetric, irreflexive
/// adjacency relation, i.e. a finite simple graph. Immutable after
/// construction; every reduction or relabeling builds a new image.
class DigitalImage {
public:
    /// Builds an image from an edge list. Edges are deduplicated and
    /// symmetrized; self-loops and out-of-range endpoints are rejected,
    /// as is n == 0.
    DigitalImage(int n, const std::vector<std::pair<int, int>>& edge_list,
                 std::vector<std::string> labels = {});

    int size() const { return n_; }
    long edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adj_[check_vertex(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[check_vertex(v)].size()); }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] >>
                (v & 63)) &
               1u;
    }
    bool adjacent_or_equal(int u, int v) const { return u == v || adjacent(u, v); }

    std::vector<std::pair<int, int>> edges() const;
    bool connected() const;

    /// Optional display names (empty vector when unset).
    const std::vector<std::string>& labels() const { return labels_; }
    /// Display name for a vertex: its label when set, else its index.
    std::string display_label(int v) const;

    bool operator==(const DigitalImage& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    long edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
    std::vector<std::string> labels_;
};

using ImagePtr = std::shared_ptr<const DigitalImage>;

inline ImagePtr share(DigitalImage img) {
    return std::make_shared<const DigitalImage>(std::move(img));
}

/// The digital interval [a,b]_Z: a path with consecutive integers adjacent.
DigitalImage interval_image(int a, int b);

/// The digital cycle C_n, n >= 3: vertex i adjacent to (i +- 1) mod n.
DigitalImage cycle_image(int n);

/// Complete image on n >= 1 vertices.
DigitalImage complete_image(int n);

/// Cartesian product of the factor vertex sets with the normal product
/// adjacency NP_u: two tuples are adjacent iff their coordinates are
/// adjacent in at least one and at most u positions and equal elsewhere.
/// Vertex encoding is row-major (first factor varies slowest).
DigitalImage product_image(const std::vector<DigitalImage>& factors, int u);

/// N*(x): the closed neighborhood adj(x) united with {x}, sorted.
std::vector<int> closed_neighborhood(const DigitalImage& X, int x);

struct SubimageResult {
    DigitalImage image;
    std::vector<int> old_to_new; ///< -1 for vertices that were dropped
    std::vector<int> new_to_old;
};

/// Induced subimage on the given (sorted, deduplicated) vertex set, with
/// the old->new translation table.
SubimageResult induced_subimage(const DigitalImage& X, const std::vector<int>& keep);

/// Relabels vertices: new_index = old_to_new[old_index] must be a permutation.
DigitalImage relabel_image(const DigitalImage& X, const std::vector<int>& old_to_new);

} // namespace digitop
