#pragma once

#include <cstdint>
#include <span>

namespace depnet {

/// Radical-inverse (van der Corput) value of `index` in the given base.
double radical_inverse(std::uint64_t index, std::uint64_t base);

/// Writes the Halton point with the given 1-based index into `out`,
/// one prime base per coordinate. Deterministic, values in (0, 1).
void halton_point(std::uint64_t index, std::span<double> out);

}  // namespace depnet
