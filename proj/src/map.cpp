#include "digitop/map.hpp"

#include <stdexcept>
#include <string>

#include "digitop/errors.hpp"

namespace digitop {

VertexMap::VertexMap(ImagePtr dom, ImagePtr cod, std::vector<int> values)
    : dom_(std::move(dom)), cod_(std::move(cod)), values_(std::move(values)) {
    if (!dom_ || !cod_)
        throw std::invalid_argument("vertex map requires domain and codomain");
    if (static_cast<int>(values_.size()) != dom_->size())
        throw std::invalid_argument("vertex map is not total: " + std::to_string(values_.size()) +
                                    " values for " + std::to_string(dom_->size()) + " vertices");
    for (int v : values_)
        if (v < 0 || v >= cod_->size())
            throw std::invalid_argument("vertex map value out of codomain range");
}

bool VertexMap::surjective() const {
    std::vector<char> hit(cod_->size(), 0);
    int count = 0;
    for (int v : values_)
        if (!hit[v]) {
            hit[v] = 1;
            ++count;
        }
    return count == cod_->size();
}

bool is_continuous(const VertexMap& f) {
    const DigitalImage& X = f.dom();
    const DigitalImage& Y = f.cod();
    for (int u = 0; u < X.size(); ++u)
        for (int v : X.neighbors(u)) {
            if (v < u)
                continue;
            if (!Y.adjacent_or_equal(f(u), f(v)))
                return false;
        }
    return true;
}

VertexMap identity_map(ImagePtr X) {
    std::vector<int> values(X->size());
    for (int v = 0; v < X->size(); ++v)
        values[v] = v;
    return VertexMap(X, X, std::move(values));
}

VertexMap constant_map(ImagePtr dom, ImagePtr cod, int target) {
    if (target < 0 || target >= cod->size())
        throw std::invalid_argument("constant map target out of range");
    std::vector<int> values(dom->size(), target);
    return VertexMap(std::move(dom), std::move(cod), std::move(values));
}

VertexMap compose(const VertexMap& g, const VertexMap& f) {
    if (!(f.cod() == g.dom()))
        throw std::invalid_argument("compose: codomain of inner map differs from domain of outer");
    std::vector<int> values(f.dom().size());
    for (int v = 0; v < f.dom().size(); ++v)
        values[v] = g(f(v));
    return VertexMap(f.dom_ptr(), g.cod_ptr(), std::move(values));
}

std::vector<VertexMap> all_continuous_maps(const ImagePtr& dom, const ImagePtr& cod,
                                           std::uint64_t max_results) {
    const DigitalImage& X = *dom;
    const DigitalImage& Y = *cod;
    std::vector<VertexMap> out;
    std::vector<int> values(X.size(), 0);

    // DFS in vertex order; continuity against already-assigned neighbors
    // prunes most of the |Y|^|X| candidate space.
    auto rec = [&](auto&& self, int i) -> void {
        if (i == X.size()) {
            if (out.size() >= max_results)
                throw BudgetExceeded("continuous map enumeration exceeded " +
                                     std::to_string(max_results) + " results");
            out.emplace_back(dom, cod, values);
            return;
        }
        for (int y = 0; y < Y.size(); ++y) {
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
    return out;
}

} // namespace digitop
