#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bihole/bigraph.hpp"

namespace bihole {

enum class Model { Gnp, Complete, Edgeless, Matching, Cycle, Crown };

const char* to_string(Model m);
// Accepts the lower-case names printed by to_string; throws InvalidArgument.
Model parse_model(std::string_view name);

// Balanced n x n graph from a model.
//
//   Gnp       each of the n^2 pairs (l, r) is visited in row-major order and
//             kept iff (x >> 11) < p * 2^53, where x is the next output of
//             std::mt19937_64 seeded with `seed`. Both the engine and this
//             threshold test are fully specified, so the result is identical
//             on every platform.
//   Complete  K_{n,n}
//   Edgeless  no edges
//   Matching  l ~ r iff l == r
//   Cycle     the 2n-cycle: l ~ l and l ~ (l + 1) mod n; requires n >= 2
//   Crown     K_{n,n} minus the matching l ~ l
//
// `p` and `seed` are ignored by every model except Gnp.
BipartiteGraph generate(Model model, std::size_t n, double p = 0.0, std::uint64_t seed = 0);

}  // namespace bihole
