#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "digitop/image.hpp"

namespace digitop {

/// Canonical labeling (old index -> new position), invariant under vertex
/// relabeling. Iterated neighborhood-color refinement with backtracking
/// over the surviving cells; twin vertices are collapsed to a single
/// branch. Supports n <= 64.
std::vector<int> canonical_labeling(const DigitalImage& X);

/// Canonical form: graph6 encoding of the canonically relabeled image.
/// Equal strings iff the images are isomorphic.
std::string canonical_form(const DigitalImage& X);

bool is_isomorphic(const DigitalImage& X, const DigitalImage& Y);

namespace detail {

/// Low-level canonical labeling over single-word adjacency rows
/// (bit v of rows[u] set iff u ~ v). Used by the catalog generator.
std::vector<int> canonical_labeling_rows(int n, const std::uint64_t* rows);

/// Packed upper-triangle code (graph6 bit order) of the canonically
/// relabeled graph; unique per isomorphism class for fixed n <= 11.
std::uint64_t canonical_code_rows(int n, const std::uint64_t* rows);

std::uint64_t code_from_rows(int n, const std::uint64_t* rows, const std::vector<int>& perm);
void rows_from_code(int n, std::uint64_t code, std::uint64_t* rows);

} // namespace detail

} // namespace digitop
