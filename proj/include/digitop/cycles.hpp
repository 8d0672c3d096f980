#pragma once

#include "digitop/map.hpp"

namespace digitop::cycles {

/// The three homotopy classes of continuous selfmaps of C_n, n > 4:
/// rotations r_d, flipped rotations r_d after l, and maps homotopic to a
/// constant.
struct CycleClass {
    enum class Tag { Identity, Flip, Constant };
    Tag tag = Tag::Constant;
    int parameter = 0; ///< rotation offset d reduced mod n; 0 for Constant

    bool operator==(const CycleClass& o) const = default;
};

/// r_d(c_i) = c_{i+d} on C_n (n >= 4); d is reduced mod n.
VertexMap rotation_map(const ImagePtr& Cn, int d);
VertexMap rotation_map(int n, int d);

/// l(c_i) = c_{-i}.
VertexMap flip_map(const ImagePtr& Cn);
VertexMap flip_map(int n);

/// Constant selfmap at target.
VertexMap constant_map(const ImagePtr& Cn, int target);
VertexMap constant_map(int n, int target);

/// Classifies a continuous selfmap of C_n, n > 4: Identity(d) iff it
/// equals r_d, Flip(d) iff it equals r_d after l, Constant otherwise.
CycleClass classify_selfmap(const VertexMap& f);

/// Expected induced homomorphism on H_q(C_n) as a scalar: +1 for q = 0,
/// the class table (+1 / -1 / 0) for q = 1, and 0 above (trivial group).
struct ExpectedInduced {
    int q = 0;
    int scalar = 0;
};
ExpectedInduced expected_induced(const CycleClass& cls, int q);
ExpectedInduced expected_induced(const VertexMap& f, int q);

} // namespace digitop::cycles
