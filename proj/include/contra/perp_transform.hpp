#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace contra {

/// In-place unnormalized Walsh–Hadamard transform over F₂^k, k = log2(size).
void walsh_hadamard(std::span<std::int64_t> values);

/// For a set S ⊆ F₂^{2d} given by its 0/1 indicator, returns for every x the
/// count |S ∩ x^⊥| with respect to the standard symplectic form.
/// Uses |S ∩ x^⊥| = (|S| + Ŝ(swap(x))) / 2 where Ŝ is the Walsh transform.
std::vector<std::uint64_t> perp_intersection_counts(std::span<const std::uint8_t> indicator);

}  // namespace contra
