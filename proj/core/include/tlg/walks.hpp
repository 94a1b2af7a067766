#pragma once

#include "tlg/derived.hpp"
#include "tlg/rng.hpp"

#include <span>

namespace tlg {

/// Periodic extension of a finite exhaustive walk, truncated to `length`.
/// The base pattern is a depth-first spanning-tree tour from `start`
/// (re-entering each node on backtrack), so every period covers all nodes
/// and the pattern's last node is adjacent to its first.
std::vector<TriId> periodic_exhaustive_walk(const DerivedGraph& d, TriId start,
                                            int length);

/// Each step uniform over the neighbors of the current node.
std::vector<TriId> simple_random_walk(const DerivedGraph& d, TriId start,
                                      int length, std::uint64_t seed);

/// I.i.d. uniform triangle ids; generally not a walk.
std::vector<TriId> uniform_random_sequence(const DerivedGraph& d, int length,
                                           std::uint64_t seed);

enum class ExhaustiveMode { Finite, Window };

/// Finite mode: every node visited at least once. Window mode: every node
/// visited in each full window of `period` steps.
bool is_exhaustive(const DerivedGraph& d, std::span<const TriId> walk,
                   ExhaustiveMode mode, int period = 0);

}  // namespace tlg
