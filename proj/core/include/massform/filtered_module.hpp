#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "massform/char_group.hpp"
#include "massform/field.hpp"
#include "massform/rational.hpp"

namespace massform {

// The graded pieces of the filtered F_p-module W attached to F, indexed
// by the break level where each piece enters the filtration:
//   - OmegaLine: the level-0 line, fixed by G through omega;
//   - Body: at each level n = i p + j (j in [1, p-1]), one residue-field
//     copy of F_p-dimension f (p-1) whose chi-eigenspaces are cut out by
//     the valuation class vbar(omega) - (i + j);
//   - TrivialTop: the level-e*p line in mixed characteristic, fixed by
//     G through the trivial character.
// No piece sits at a level divisible by p except TrivialTop at e*p.
enum class PieceKind { OmegaLine, Body, TrivialTop };

struct GradedPiece {
  long level = 0;
  PieceKind kind = PieceKind::Body;
  ValClass val_class;  // Body only: which vbar(chi) has a nonzero eigenspace
  long fp_dim = 1;

  // F_p-dimension of the chi-eigenspace of this piece.
  long eigen_dim(const CharClass& chi, const CharClass& omega_char, long f) const;
};

struct FilteredModule {
  LocalField field;
  std::vector<GradedPiece> pieces;  // sorted by level
  long max_level = 0;               // e*p in mixed characteristic, the cutoff otherwise

  explicit FilteredModule(LocalField F) : field(std::move(F)) {}

  long total_fp_dim() const;
};

// A line (1-dimensional F_p-subspace) of a chi-eigenspace, recorded by
// its break level and its coordinates in the eigenspace basis ordered
// by level, normalized so the first nonzero coordinate is 1.
struct LineRecord {
  CharClass chi;
  long level = 0;
  std::vector<std::uint8_t> coords;

  std::string to_string() const;  // "chi=(a,b) level=n rep=c0,c1,..."
};

inline constexpr long kDefaultEnumerationGuard = 20;

// Builds W. Mixed characteristic: the full module, levels 0..e*p
// (max_level, if given, must equal e*p). Equal characteristic: W is
// infinite-dimensional, so a truncation level is required
// (MissingTruncation).
FilteredModule build_module(const LocalField& F, std::optional<long> max_level = std::nullopt);

// F_p-dimension of the chi-eigenspace of the filtration step at
// up_to_level (inclusive). up_to_level must lie in [0, max_level]
// (LevelOutOfRange).
long eigen_dim(const FilteredModule& W, const CharClass& chi, long up_to_level);

// All lines of the full chi-eigenspace, sorted by (level, coords).
// Refuses eigenspaces of dimension > guard (EigenspaceTooLarge).
std::vector<LineRecord> enumerate_stable_lines(const FilteredModule& W, const CharClass& chi,
                                               long guard = kDefaultEnumerationGuard);

// Mass recomputed from the line census: every line of level n > 0
// carries p extensions (one if chi == omega) of discriminant level n,
// each weighing q^-n. Equals contribution(F, chi).total in mixed
// characteristic and its truncation at max_level otherwise.
Rational oracle_mass(const FilteredModule& W, const CharClass& chi,
                     long guard = kDefaultEnumerationGuard);

}  // namespace massform
