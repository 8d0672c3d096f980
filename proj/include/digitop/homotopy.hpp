#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "digitop/image.hpp"
#include "digitop/map.hpp"

namespace digitop {

/// A finite sequence of stage maps H_0..H_k with a common domain and
/// codomain. Validity (ordinary / strong / punctuated) is checked by the
/// predicates below, not enforced by the type.
class Homotopy {
public:
    explicit Homotopy(std::vector<VertexMap> stages);

    int steps() const { return static_cast<int>(stages_.size()) - 1; } ///< the time bound k
    const VertexMap& stage(int t) const { return stages_.at(t); }
    const std::vector<VertexMap>& stages() const { return stages_; }
    const VertexMap& first() const { return stages_.front(); }
    const VertexMap& last() const { return stages_.back(); }
    const DigitalImage& dom() const { return stages_.front().dom(); }
    const DigitalImage& cod() const { return stages_.front().cod(); }

    bool operator==(const Homotopy& o) const { return stages_ == o.stages_; }

private:
    std::vector<VertexMap> stages_;
};

struct ValidationResult {
    bool ok;
    std::string reason; ///< empty when ok; endpoint mismatches and continuity failures differ
};

/// Ordinary homotopy validity from f to g: endpoints match and the
/// flattened map on dom x [0,k]_Z with NP_1 product adjacency is
/// continuous.
ValidationResult validate_homotopy(const Homotopy& H, const VertexMap& f, const VertexMap& g);
bool is_valid_homotopy(const Homotopy& H, const VertexMap& f, const VertexMap& g);
bool is_valid_homotopy(const Homotopy& H);

/// Strong validity: the flattened map is continuous with NP_2 product
/// adjacency.
ValidationResult validate_strong_homotopy(const Homotopy& H);
bool is_valid_strong_homotopy(const Homotopy& H);

/// Stagewise characterizations (each stage continuous plus the one-step
/// relation between consecutive stages), kept as an independent route so
/// the two can be cross-checked.
bool is_valid_homotopy_stagewise(const Homotopy& H);
bool is_valid_strong_homotopy_stagewise(const Homotopy& H);

/// Pointwise adjacent-or-equal (requires f, g continuous with equal
/// domain and codomain).
bool one_step_homotopic(const VertexMap& f, const VertexMap& g);

/// f(x) adjacent-or-equal to g(x') for every pair x, x' that is
/// adjacent or equal; the exact condition for a one-step strong
/// homotopy. Symmetric in f and g.
bool one_step_strong_homotopic(const VertexMap& f, const VertexMap& g);

Homotopy reverse(const Homotopy& H);

/// Stage sequence H_0..H_k, G_0..G_l; the seam stages must agree.
Homotopy concatenate(const Homotopy& H, const Homotopy& G);

/// Consecutive stages differ at most at one vertex.
bool is_punctuated(const Homotopy& H);

/// The k = n stage construction moving vertex i at time i+1; requires
/// one_step_strong_homotopic(f, g). With drop_duplicate_stages the
/// stages where nothing moved are removed.
Homotopy puncturate_one_step(const VertexMap& f, const VertexMap& g,
                             bool drop_duplicate_stages = false);

/// All continuous g one step (strong) homotopic to f, lexicographic by
/// value vector. Throws BudgetExceeded past max_results.
std::vector<VertexMap> homotopy_neighbors(const VertexMap& f,
                                          std::uint64_t max_results = 10'000'000);
std::vector<VertexMap> strong_neighbors(const VertexMap& f,
                                        std::uint64_t max_results = 10'000'000);

enum class Verdict { Yes, No, Undecided };

struct SearchBudget {
    std::uint64_t max_visited_maps = 1'000'000;
};

struct SearchResult {
    Verdict verdict = Verdict::Undecided;
    std::optional<Homotopy> witness; ///< stage chain from f to g when Yes
    std::uint64_t visited = 0;
    explicit operator bool() const { return verdict == Verdict::Yes; }
};

/// Breadth-first reachability in the graph of continuous maps whose
/// edges are one-step (strong) homotopies. Yes/No are exact; Undecided
/// reports budget exhaustion.
SearchResult strongly_homotopic(const VertexMap& f, const VertexMap& g,
                                const SearchBudget& budget = {});
SearchResult homotopic(const VertexMap& f, const VertexMap& g, const SearchBudget& budget = {});

/// Partition of a set of parallel continuous maps into (strong) homotopy
/// classes by pairwise one-step tests; returns a class id per map.
std::vector<int> one_step_partition(const std::vector<VertexMap>& maps, bool strong);

/// Least witness pair (x, y), x != y, with N*(x) contained in N*(y); the
/// image is strongly reducible iff such a pair exists.
std::optional<std::pair<int, int>> is_strongly_reducible(const DigitalImage& X);

/// True iff some nonsurjective continuous map is one-step homotopic to
/// the identity (one step suffices for reducibility). The step budget
/// bounds the pruned candidate search.
Verdict is_reducible(const DigitalImage& X, std::uint64_t step_budget = 50'000'000);

struct StrongCore {
    ImagePtr core;
    std::vector<int> old_to_new; ///< -1 for deleted vertices
    VertexMap retraction;        ///< composite of the one-point deformations, X -> core
};

/// Deletes dominated vertices (least witness first) until none remain.
StrongCore strong_core(ImagePtr X);

struct ContractionOrdering {
    std::vector<int> order;     ///< deletion order; all n vertices
    std::vector<int> witnesses; ///< witnesses[i] dominates order[i] among the still-present vertices
};

/// Greedy dominated-vertex removal with backtracking fallback; nullopt
/// when no ordering exists.
std::optional<ContractionOrdering> strong_contraction_ordering(const DigitalImage& X);

/// Greedy only (least dominated vertex each round); may stall where the
/// backtracking version succeeds -- kept separate so tests can compare.
std::optional<ContractionOrdering> strong_contraction_ordering_greedy(const DigitalImage& X);

/// Checks the defining inclusions of an ordering (with its witnesses).
bool validate_contraction_ordering(const DigitalImage& X, const ContractionOrdering& ord);

bool is_strongly_contractible(const DigitalImage& X);

/// BFS from the identity through one-step strong homotopies whose stages
/// all fix the basepoint; Yes iff the constant map at the basepoint is
/// reached.
SearchResult pointed_strongly_contractible(const ImagePtr& X, int basepoint,
                                           const SearchBudget& budget = {});

} // namespace digitop
