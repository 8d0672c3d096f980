#pragma once

#include <cstdint>
#include <vector>

#include "digitop/image.hpp"

namespace digitop {

/// A total function between digital images. Totality (every value in
/// range) is enforced at construction; continuity is a property checked
/// by is_continuous.
class VertexMap {
public:
    VertexMap(ImagePtr dom, ImagePtr cod, std::vector<int> values);

    const DigitalImage& dom() const { return *dom_; }
    const DigitalImage& cod() const { return *cod_; }
    const ImagePtr& dom_ptr() const { return dom_; }
    const ImagePtr& cod_ptr() const { return cod_; }

    int operator()(int v) const { return values_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& values() const { return values_; }

    bool surjective() const;

    /// Structural equality: same domain and codomain graphs, same values.
    bool operator==(const VertexMap& other) const {
        return values_ == other.values_ && *dom_ == *other.dom_ && *cod_ == *other.cod_;
    }

private:
    ImagePtr dom_;
    ImagePtr cod_;
    std::vector<int> values_;
};

/// True iff every domain edge maps to an adjacent-or-equal pair.
bool is_continuous(const VertexMap& f);

VertexMap identity_map(ImagePtr X);
VertexMap constant_map(ImagePtr dom, ImagePtr cod, int target);

/// g after f; requires f.cod == g.dom (structurally).
VertexMap compose(const VertexMap& g, const VertexMap& f);

/// All continuous maps dom -> cod in lexicographic value order.
/// Throws BudgetExceeded when more than max_results would be produced.
std::vector<VertexMap> all_continuous_maps(const ImagePtr& dom, const ImagePtr& cod,
                                           std::uint64_t max_results = 10'000'000);

} // namespace digitop
