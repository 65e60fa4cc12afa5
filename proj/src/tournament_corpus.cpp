#include "snc/tournament_corpus.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "snc/errors.hpp"

namespace snc {

namespace {

constexpr std::array<TournamentClass, 20> classes{{
    {1, 0},
    {2, 0},
    {3, 0}, {3, 2},
    {4, 0}, {4, 2}, {4, 4}, {4, 5},
    {5, 0}, {5, 2}, {5, 4}, {5, 5}, {5, 8}, {5, 9}, {5, 10}, {5, 11}, {5, 12}, {5, 40}, {5, 41}, {5, 76},
}};

}  // namespace

std::span<const TournamentClass> small_tournament_classes() { return classes; }

Digraph tournament_from_code(std::size_t n, TournamentCode code) {
  if (n > 8) throw PreconditionError("tournament codes cover n <= 8");
  Digraph d(n);
  unsigned bit = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++bit) {
      if (code >> bit & 1U) {
        d.add_arc(i, j);
      } else {
        d.add_arc(j, i);
      }
    }
  }
  return d;
}

TournamentCode tournament_code(const Digraph& tournament) {
  if (!is_tournament(tournament) || tournament.size() > 8) throw PreconditionError("expected a tournament on n <= 8");
  TournamentCode code = 0;
  unsigned bit = 0;
  for (Vertex i = 0; i < tournament.size(); ++i) {
    for (Vertex j = i + 1; j < tournament.size(); ++j, ++bit) {
      if (tournament.has_arc(i, j)) code |= TournamentCode{1} << bit;
    }
  }
  return code;
}

TournamentCode canonical_code(const Digraph& tournament) {
  const std::size_t n = tournament.size();
  if (!is_tournament(tournament) || n > 8) throw PreconditionError("expected a tournament on n <= 8");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  TournamentCode best = ~TournamentCode{0};
  do {
    // perm maps old label -> new label.
    TournamentCode code = 0;
    for (const auto& arc : tournament.arcs()) {
      Vertex a = perm[arc.tail];
      Vertex b = perm[arc.head];
      if (a < b) code |= TournamentCode{1} << (a * (2 * n - a - 1) / 2 + (b - a - 1));
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace snc
