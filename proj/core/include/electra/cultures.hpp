#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "electra/election.hpp"

namespace electra {

enum class Culture { impartial, walsh_sp, conitzer_sp, identity, antagonism };

std::string to_string(Culture culture);
std::optional<Culture> parse_culture(std::string_view name);

/// Seed-deterministic synthetic election with m unnamed candidates.
///
/// impartial: i.i.d. uniform permutations. walsh_sp: uniform over the votes
/// single-peaked on the axis 0, 1, ..., m-1, built from the bottom by taking
/// the leftmost or rightmost remaining candidate with probability 1/2.
/// conitzer_sp: uniform peak on the same axis, then the ranking grows left
/// or right with probability 1/2. identity: n copies of one uniform
/// permutation. antagonism: n/2 copies of a uniform permutation followed by
/// n/2 copies of its reverse; throws InvalidElection for odd n.
Election sample_culture(Culture culture, int m, int n, std::uint64_t seed);

}  // namespace electra
