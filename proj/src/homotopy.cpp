#include "digitop/homotopy.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "digitop/errors.hpp"

namespace digitop {

namespace {

void require_parallel_continuous(const VertexMap& f, const VertexMap& g, const char* who) {
    if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
        throw std::invalid_argument(std::string(who) + ": maps must share domain and codomain");
    if (!is_continuous(f) || !is_continuous(g))
        throw std::invalid_argument(std::string(who) + ": maps must be continuous");
}

// raw Prop-1.4 condition, continuity of f and g assumed
bool pointwise_adjacent(const VertexMap& f, const VertexMap& g) {
    const DigitalImage& Y = f.cod();
    for (int v = 0; v < f.dom().size(); ++v)
        if (!Y.adjacent_or_equal(f(v), g(v)))
            return false;
    return true;
}

// raw one-step strong condition over adjacent-or-equal pairs
bool strong_pair_condition(const VertexMap& f, const VertexMap& g) {
    const DigitalImage& X = f.dom();
    const DigitalImage& Y = f.cod();
    for (int v = 0; v < X.size(); ++v) {
        if (!Y.adjacent_or_equal(f(v), g(v)))
            return false;
        for (int u : X.neighbors(v))
            if (!Y.adjacent_or_equal(f(u), g(v)))
                return false;
    }
    return true;
}

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// per-vertex candidate targets for one-step moves from f, then DFS with
// continuity pruning; emits value vectors in lexicographic order
void enumerate_from_candidates(const VertexMap& f, const std::vector<std::vector<int>>& cand,
                               std::uint64_t max_results,
                               const std::function<void(const std::vector<int>&)>& emit) {
    const DigitalImage& X = f.dom();
    const DigitalImage& Y = f.cod();
    std::vector<int> values(X.size(), 0);
    std::uint64_t produced = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == X.size()) {
            if (++produced > max_results)
                throw BudgetExceeded("one-step neighbor enumeration exceeded " +
                                     std::to_string(max_results) + " maps");
            emit(values);
            return;
        }
        for (int y : cand[i]) {
            bool ok = true;
            for (int w : X.neighbors(i)) {
                if (w >= i)
                    break;
                if (!Y.adjacent_or_equal(values[w], y)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                values[i] = y;
                self(self, i + 1);
            }
        }
    };
    rec(rec, 0);
}

std::vector<std::vector<int>> ordinary_candidates(const VertexMap& f) {
    std::vector<std::vector<int>> cand(f.dom().size());
    for (int v = 0; v < f.dom().size(); ++v)
        cand[v] = closed_neighborhood(f.cod(), f(v));
    return cand;
}

std::vector<std::vector<int>> strong_candidates(const VertexMap& f) {
    const DigitalImage& X = f.dom();
    const DigitalImage& Y = f.cod();
    std::vector<std::vector<int>> cand(X.size());
    for (int v = 0; v < X.size(); ++v) {
        // g(v) must be adjacent-or-equal to f(u) for every u in N*(v)
        std::vector<int> current = closed_neighborhood(Y, f(v));
        for (int u : X.neighbors(v)) {
            std::vector<int> next;
            const auto& allow = closed_neighborhood(Y, f(u));
            std::set_intersection(current.begin(), current.end(), allow.begin(), allow.end(),
                                  std::back_inserter(next));
            current.swap(next);
            if (current.empty())
                break;
        }
        cand[v] = std::move(current);
    }
    return cand;
}

enum class StepKind { Ordinary, Strong };

SearchResult bfs_search(const VertexMap& start, const std::vector<int>& target_values,
                        StepKind kind, const SearchBudget& budget, int fixed_vertex = -1) {
    struct Node {
        std::vector<int> values;
        int parent;
    };
    std::vector<Node> nodes;
    std::unordered_map<std::vector<int>, int, VecHash> seen;
    std::deque<int> frontier;

    auto push = [&](const std::vector<int>& values, int parent) -> int {
        auto [it, inserted] = seen.emplace(values, static_cast<int>(nodes.size()));
        if (!inserted)
            return -1;
        nodes.push_back({values, parent});
        frontier.push_back(it->second);
        return it->second;
    };

    SearchResult result;
    push(start.values(), -1);
    int found = (start.values() == target_values) ? 0 : -1;

    while (found < 0 && !frontier.empty()) {
        if (nodes.size() > budget.max_visited_maps) {
            result.verdict = Verdict::Undecided;
            result.visited = nodes.size();
            return result;
        }
        int cur = frontier.front();
        frontier.pop_front();
        VertexMap f(start.dom_ptr(), start.cod_ptr(), nodes[cur].values);
        auto cand = (kind == StepKind::Strong) ? strong_candidates(f) : ordinary_candidates(f);
        if (fixed_vertex >= 0) {
            auto& c = cand[fixed_vertex];
            if (std::binary_search(c.begin(), c.end(), fixed_vertex))
                c = {fixed_vertex};
            else
                c.clear();
        }
        try {
            enumerate_from_candidates(f, cand, budget.max_visited_maps + 1,
                                      [&](const std::vector<int>& values) {
                                          int id = push(values, cur);
                                          if (id >= 0 && values == target_values && found < 0)
                                              found = id;
                                      });
        } catch (const BudgetExceeded&) {
            result.verdict = Verdict::Undecided;
            result.visited = nodes.size();
            return result;
        }
        if (nodes.size() > budget.max_visited_maps) {
            result.verdict = Verdict::Undecided;
            result.visited = nodes.size();
            return result;
        }
    }

    result.visited = nodes.size();
    if (found < 0) {
        result.verdict = Verdict::No;
        return result;
    }
    result.verdict = Verdict::Yes;
    std::vector<VertexMap> chain;
    for (int id = found; id >= 0; id = nodes[id].parent)
        chain.emplace_back(start.dom_ptr(), start.cod_ptr(), nodes[id].values);
    std::reverse(chain.begin(), chain.end());
    result.witness = Homotopy(std::move(chain));
    return result;
}

} // namespace

Homotopy::Homotopy(std::vector<VertexMap> stages) : stages_(std::move(stages)) {
    if (stages_.empty())
        throw std::invalid_argument("homotopy requires at least one stage");
    for (const auto& s : stages_)
        if (!(s.dom() == stages_.front().dom()) || !(s.cod() == stages_.front().cod()))
            throw std::invalid_argument("homotopy stages must share domain and codomain");
}

namespace {

// flattened product-route continuity check shared by both validators
ValidationResult product_route(const Homotopy& H, int u) {
    const DigitalImage& X = H.dom();
    int k = H.steps();
    DigitalImage prod = product_image({X, interval_image(0, k)}, u);
    std::vector<int> values(static_cast<std::size_t>(X.size()) * (k + 1));
    for (int x = 0; x < X.size(); ++x)
        for (int t = 0; t <= k; ++t)
            values[static_cast<std::size_t>(x) * (k + 1) + t] = H.stage(t)(x);
    VertexMap flat(share(std::move(prod)), H.first().cod_ptr(), std::move(values));
    if (!is_continuous(flat))
        return {false, std::string("not continuous on the NP_") + std::to_string(u) +
                           " product of the domain with the time interval"};
    return {true, ""};
}

} // namespace

ValidationResult validate_homotopy(const Homotopy& H, const VertexMap& f, const VertexMap& g) {
    if (!(H.first() == f))
        return {false, "endpoint mismatch: stage 0 differs from f"};
    if (!(H.last() == g))
        return {false, "endpoint mismatch: stage k differs from g"};
    return product_route(H, 1);
}

bool is_valid_homotopy(const Homotopy& H, const VertexMap& f, const VertexMap& g) {
    return validate_homotopy(H, f, g).ok;
}

bool is_valid_homotopy(const Homotopy& H) {
    return product_route(H, 1).ok;
}

ValidationResult validate_strong_homotopy(const Homotopy& H) {
    return product_route(H, 2);
}

bool is_valid_strong_homotopy(const Homotopy& H) {
    return validate_strong_homotopy(H).ok;
}

bool is_valid_homotopy_stagewise(const Homotopy& H) {
    for (const auto& s : H.stages())
        if (!is_continuous(s))
            return false;
    for (int t = 0; t < H.steps(); ++t)
        if (!pointwise_adjacent(H.stage(t), H.stage(t + 1)))
            return false;
    return true;
}

bool is_valid_strong_homotopy_stagewise(const Homotopy& H) {
    for (const auto& s : H.stages())
        if (!is_continuous(s))
            return false;
    for (int t = 0; t < H.steps(); ++t)
        if (!strong_pair_condition(H.stage(t), H.stage(t + 1)))
            return false;
    return true;
}

bool one_step_homotopic(const VertexMap& f, const VertexMap& g) {
    require_parallel_continuous(f, g, "one_step_homotopic");
    return pointwise_adjacent(f, g);
}

bool one_step_strong_homotopic(const VertexMap& f, const VertexMap& g) {
    require_parallel_continuous(f, g, "one_step_strong_homotopic");
    return strong_pair_condition(f, g);
}

Homotopy reverse(const Homotopy& H) {
    std::vector<VertexMap> stages(H.stages().rbegin(), H.stages().rend());
    return Homotopy(std::move(stages));
}

Homotopy concatenate(const Homotopy& H, const Homotopy& G) {
    if (!(H.last() == G.first()))
        throw std::invalid_argument("concatenate: seam stages disagree");
    std::vector<VertexMap> stages = H.stages();
    stages.insert(stages.end(), G.stages().begin(), G.stages().end());
    return Homotopy(std::move(stages));
}

bool is_punctuated(const Homotopy& H) {
    for (int t = 0; t < H.steps(); ++t) {
        int moved = 0;
        for (int v = 0; v < H.dom().size(); ++v)
            if (H.stage(t)(v) != H.stage(t + 1)(v))
                ++moved;
        if (moved > 1)
            return false;
    }
    return true;
}

Homotopy puncturate_one_step(const VertexMap& f, const VertexMap& g,
                             bool drop_duplicate_stages) {
    if (!one_step_strong_homotopic(f, g))
        throw std::invalid_argument(
            "puncturate_one_step requires maps strongly homotopic in one step");
    int n = f.dom().size();
    std::vector<VertexMap> stages;
    for (int t = 0; t <= n; ++t) {
        std::vector<int> values(n);
        for (int i = 0; i < n; ++i)
            values[i] = (i >= t) ? f(i) : g(i);
        if (drop_duplicate_stages && !stages.empty() && stages.back().values() == values)
            continue;
        stages.emplace_back(f.dom_ptr(), f.cod_ptr(), std::move(values));
    }
    return Homotopy(std::move(stages));
}

std::vector<VertexMap> homotopy_neighbors(const VertexMap& f, std::uint64_t max_results) {
    if (!is_continuous(f))
        throw std::invalid_argument("homotopy_neighbors requires a continuous map");
    std::vector<VertexMap> out;
    enumerate_from_candidates(f, ordinary_candidates(f), max_results,
                              [&](const std::vector<int>& values) {
                                  out.emplace_back(f.dom_ptr(), f.cod_ptr(), values);
                              });
    return out;
}

std::vector<VertexMap> strong_neighbors(const VertexMap& f, std::uint64_t max_results) {
    if (!is_continuous(f))
        throw std::invalid_argument("strong_neighbors requires a continuous map");
    std::vector<VertexMap> out;
    enumerate_from_candidates(f, strong_candidates(f), max_results,
                              [&](const std::vector<int>& values) {
                                  out.emplace_back(f.dom_ptr(), f.cod_ptr(), values);
                              });
    return out;
}

SearchResult strongly_homotopic(const VertexMap& f, const VertexMap& g,
                                const SearchBudget& budget) {
    require_parallel_continuous(f, g, "strongly_homotopic");
    return bfs_search(f, g.values(), StepKind::Strong, budget);
}

SearchResult homotopic(const VertexMap& f, const VertexMap& g, const SearchBudget& budget) {
    require_parallel_continuous(f, g, "homotopic");
    return bfs_search(f, g.values(), StepKind::Ordinary, budget);
}

std::vector<int> one_step_partition(const std::vector<VertexMap>& maps, bool strong) {
    int m = static_cast<int>(maps.size());
    std::vector<int> parent(m);
    for (int i = 0; i < m; ++i)
        parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            bool related = strong ? strong_pair_condition(maps[i], maps[j])
                                  : pointwise_adjacent(maps[i], maps[j]);
            if (related) {
                int a = find(i), b = find(j);
                if (a != b)
                    parent[a] = b;
            }
        }
    std::vector<int> cls(m), rename(m, -1);
    int next = 0;
    for (int i = 0; i < m; ++i) {
        int r = find(i);
        if (rename[r] < 0)
            rename[r] = next++;
        cls[i] = rename[r];
    }
    return cls;
}

std::optional<std::pair<int, int>> is_strongly_reducible(const DigitalImage& X) {
    for (int x = 0; x < X.size(); ++x) {
        auto nx = closed_neighborhood(X, x);
        for (int y = 0; y < X.size(); ++y) {
            if (y == x)
                continue;
            auto ny = closed_neighborhood(X, y);
            if (std::includes(ny.begin(), ny.end(), nx.begin(), nx.end()))
                return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

Verdict is_reducible(const DigitalImage& X, std::uint64_t step_budget) {
    // a dominated vertex already gives a nonsurjective one-step map
    if (is_strongly_reducible(X))
        return Verdict::Yes;

    int n = X.size();
    std::vector<std::vector<int>> cand(n);
    for (int v = 0; v < n; ++v)
        cand[v] = closed_neighborhood(X, v);

    std::vector<int> values(n);
    std::vector<int> hits(n, 0);
    std::uint64_t steps = 0;
    int distinct = 0;
    bool found = false;

    auto rec = [&](auto&& self, int i) -> bool {
        if (++steps > step_budget)
            throw BudgetExceeded("reducibility search budget exhausted");
        if (i == n)
            return distinct < n; // nonsurjective witness
        for (int y : cand[i]) {
            bool ok = true;
            for (int w : X.neighbors(i)) {
                if (w >= i)
                    break;
                if (!X.adjacent_or_equal(values[w], y)) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            values[i] = y;
            if (hits[y]++ == 0)
                ++distinct;
            if (self(self, i + 1))
                return true;
            if (--hits[y] == 0)
                --distinct;
        }
        return false;
    };
    try {
        found = rec(rec, 0);
    } catch (const BudgetExceeded&) {
        return Verdict::Undecided;
    }
    return found ? Verdict::Yes : Verdict::No;
}

StrongCore strong_core(ImagePtr X) {
    int n = X->size();
    std::vector<int> surviving(n);
    for (int i = 0; i < n; ++i)
        surviving[i] = i;
    std::vector<int> retract(n);
    for (int i = 0; i < n; ++i)
        retract[i] = i;

    for (;;) {
        auto sub = induced_subimage(*X, surviving);
        auto witness = is_strongly_reducible(sub.image);
        if (!witness)
            break;
        int x = surviving[witness->first];
        int y = surviving[witness->second];
        for (int v = 0; v < n; ++v)
            if (retract[v] == x)
                retract[v] = y;
        surviving.erase(std::find(surviving.begin(), surviving.end(), x));
    }

    auto sub = induced_subimage(*X, surviving);
    ImagePtr core = share(std::move(sub.image));
    std::vector<int> values(n);
    for (int v = 0; v < n; ++v)
        values[v] = sub.old_to_new[retract[v]];
    VertexMap retraction(X, core, std::move(values));
    return StrongCore{core, std::move(sub.old_to_new), std::move(retraction)};
}

namespace {

// masks over original vertex indices; n <= 64
struct DismantleCtx {
    int n;
    std::vector<std::uint64_t> closed;

    // least y != x in S whose closed set within S covers x's
    int dominator(std::uint64_t S, int x) const {
        std::uint64_t nx = closed[x] & S;
        for (int y = 0; y < n; ++y)
            if (y != x && ((S >> y) & 1) && (nx & ~(closed[y] & S)) == 0)
                return y;
        return -1;
    }
};

} // namespace

std::optional<ContractionOrdering> strong_contraction_ordering_greedy(const DigitalImage& X) {
    if (X.size() > 64)
        throw std::invalid_argument("contraction ordering limited to n <= 64");
    DismantleCtx ctx{X.size(), {}};
    ctx.closed.resize(X.size());
    for (int v = 0; v < X.size(); ++v) {
        ctx.closed[v] = std::uint64_t{1} << v;
        for (int w : X.neighbors(v))
            ctx.closed[v] |= std::uint64_t{1} << w;
    }
    std::uint64_t S = (X.size() == 64) ? ~std::uint64_t{0}
                                       : ((std::uint64_t{1} << X.size()) - 1);
    ContractionOrdering ord;
    while (std::popcount(S) > 1) {
        bool removed = false;
        for (int x = 0; x < X.size() && !removed; ++x) {
            if (!((S >> x) & 1))
                continue;
            int y = ctx.dominator(S, x);
            if (y >= 0) {
                ord.order.push_back(x);
                ord.witnesses.push_back(y);
                S &= ~(std::uint64_t{1} << x);
                removed = true;
            }
        }
        if (!removed)
            return std::nullopt;
    }
    for (int x = 0; x < X.size(); ++x)
        if ((S >> x) & 1)
            ord.order.push_back(x);
    return ord;
}

std::optional<ContractionOrdering> strong_contraction_ordering(const DigitalImage& X) {
    auto greedy = strong_contraction_ordering_greedy(X);
    if (greedy)
        return greedy;

    // backtracking over dominated-vertex choices, memoizing dead sets
    DismantleCtx ctx{X.size(), {}};
    ctx.closed.resize(X.size());
    for (int v = 0; v < X.size(); ++v) {
        ctx.closed[v] = std::uint64_t{1} << v;
        for (int w : X.neighbors(v))
            ctx.closed[v] |= std::uint64_t{1} << w;
    }
    std::unordered_set<std::uint64_t> dead;
    ContractionOrdering ord;
    auto rec = [&](auto&& self, std::uint64_t S) -> bool {
        if (std::popcount(S) == 1) {
            ord.order.push_back(std::countr_zero(S));
            return true;
        }
        if (dead.count(S))
            return false;
        for (int x = 0; x < X.size(); ++x) {
            if (!((S >> x) & 1))
                continue;
            int y = ctx.dominator(S, x);
            if (y < 0)
                continue;
            ord.order.push_back(x);
            ord.witnesses.push_back(y);
            if (self(self, S & ~(std::uint64_t{1} << x)))
                return true;
            ord.order.pop_back();
            ord.witnesses.pop_back();
        }
        dead.insert(S);
        return false;
    };
    std::uint64_t all = (X.size() == 64) ? ~std::uint64_t{0}
                                         : ((std::uint64_t{1} << X.size()) - 1);
    if (rec(rec, all))
        return ord;
    return std::nullopt;
}

bool validate_contraction_ordering(const DigitalImage& X, const ContractionOrdering& ord) {
    int n = X.size();
    if (static_cast<int>(ord.order.size()) != n ||
        static_cast<int>(ord.witnesses.size()) != n - 1)
        return false;
    std::vector<char> present(n, 1);
    {
        std::vector<char> seen(n, 0);
        for (int v : ord.order) {
            if (v < 0 || v >= n || seen[v])
                return false;
            seen[v] = 1;
        }
    }
    for (int i = 0; i + 1 < n; ++i) {
        int x = ord.order[i], y = ord.witnesses[i];
        if (y < 0 || y >= n || y == x || !present[y] || !present[x])
            return false;
        std::vector<int> sub;
        for (int v = 0; v < n; ++v)
            if (present[v])
                sub.push_back(v);
        auto s = induced_subimage(X, sub);
        auto nx = closed_neighborhood(s.image, s.old_to_new[x]);
        auto ny = closed_neighborhood(s.image, s.old_to_new[y]);
        if (!std::includes(ny.begin(), ny.end(), nx.begin(), nx.end()))
            return false;
        present[x] = 0;
    }
    return true;
}

bool is_strongly_contractible(const DigitalImage& X) {
    return strong_contraction_ordering(X).has_value();
}

SearchResult pointed_strongly_contractible(const ImagePtr& X, int basepoint,
                                           const SearchBudget& budget) {
    if (basepoint < 0 || basepoint >= X->size())
        throw std::invalid_argument("basepoint out of range");
    VertexMap id = identity_map(X);
    std::vector<int> target(X->size(), basepoint);
    return bfs_search(id, target, StepKind::Strong, budget, basepoint);
}

} // namespace digitop
