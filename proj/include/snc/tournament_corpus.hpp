#pragma once

#include <cstdint>
#include <span>

#include "snc/digraph.hpp"

namespace snc {

/// Tournament encoding: bit k covers the k-th pair i < j in lexicographic
/// order and is set when the arc is i -> j.
using TournamentCode = std::uint32_t;

struct TournamentClass {
  std::size_t n;
  TournamentCode code;  ///< smallest code over all relabelings
};

/// Every isomorphism class of tournaments on 1 to 5 vertices (1, 1, 2, 4
/// and 12 classes), canonical codes ascending within each order.
std::span<const TournamentClass> small_tournament_classes();

/// Unit-weight tournament for a code. n <= 8.
Digraph tournament_from_code(std::size_t n, TournamentCode code);
TournamentCode tournament_code(const Digraph& tournament);
/// Minimum code over all n! relabelings.
TournamentCode canonical_code(const Digraph& tournament);

}  // namespace snc
