#include "digitop/cycles.hpp"

#include <stdexcept>

namespace digitop::cycles {

namespace {

// natural cycle structure in vertex order, as produced by cycle_image
void require_cycle(const DigitalImage& X, int min_n, const char* who) {
    int n = X.size();
    if (n < min_n)
        throw std::invalid_argument(std::string(who) + ": requires a cycle on at least " +
                                    std::to_string(min_n) + " points");
    for (int i = 0; i < n; ++i)
        if (X.degree(i) != 2 || !X.adjacent(i, (i + 1) % n))
            throw std::invalid_argument(std::string(who) +
                                        ": image is not a digital cycle in natural order");
}

int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace

VertexMap rotation_map(const ImagePtr& Cn, int d) {
    require_cycle(*Cn, 4, "rotation_map");
    int n = Cn->size();
    std::vector<int> values(n);
    for (int i = 0; i < n; ++i)
        values[i] = mod(i + d, n);
    return VertexMap(Cn, Cn, std::move(values));
}

VertexMap rotation_map(int n, int d) {
    return rotation_map(share(cycle_image(n)), d);
}

VertexMap flip_map(const ImagePtr& Cn) {
    require_cycle(*Cn, 4, "flip_map");
    int n = Cn->size();
    std::vector<int> values(n);
    for (int i = 0; i < n; ++i)
        values[i] = mod(-i, n);
    return VertexMap(Cn, Cn, std::move(values));
}

VertexMap flip_map(int n) {
    return flip_map(share(cycle_image(n)));
}

VertexMap constant_map(const ImagePtr& Cn, int target) {
    require_cycle(*Cn, 4, "constant_map");
    return digitop::constant_map(Cn, Cn, target);
}

VertexMap constant_map(int n, int target) {
    return constant_map(share(cycle_image(n)), target);
}

CycleClass classify_selfmap(const VertexMap& f) {
    const DigitalImage& X = f.dom();
    require_cycle(X, 4, "classify_selfmap");
    if (!(X == f.cod()))
        throw std::invalid_argument("classify_selfmap: not a selfmap");
    int n = X.size();
    if (n <= 4)
        throw std::invalid_argument("classify_selfmap: classification requires n > 4 "
                                    "(out of theorem scope)");
    if (!is_continuous(f))
        throw std::invalid_argument("classify_selfmap: map must be continuous");

    int d = f(0);
    bool rotation = true, flip = true;
    for (int i = 0; i < n; ++i) {
        if (f(i) != mod(i + d, n))
            rotation = false;
        if (f(i) != mod(d - i, n))
            flip = false;
    }
    if (rotation)
        return CycleClass{CycleClass::Tag::Identity, d};
    if (flip)
        return CycleClass{CycleClass::Tag::Flip, d};
    return CycleClass{CycleClass::Tag::Constant, 0};
}

ExpectedInduced expected_induced(const CycleClass& cls, int q) {
    if (q < 0)
        throw std::invalid_argument("expected_induced: q must be nonnegative");
    if (q == 0)
        return {0, 1};
    if (q > 1)
        return {q, 0};
    switch (cls.tag) {
    case CycleClass::Tag::Identity:
        return {1, 1};
    case CycleClass::Tag::Flip:
        return {1, -1};
    case CycleClass::Tag::Constant:
        return {1, 0};
    }
    return {1, 0};
}

ExpectedInduced expected_induced(const VertexMap& f, int q) {
    return expected_induced(classify_selfmap(f), q);
}

} // namespace digitop::cycles
