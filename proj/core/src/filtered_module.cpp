#include "massform/filtered_module.hpp"

#include <algorithm>
#include <string>

#include "massform/errors.hpp"
#include "massform/mass.hpp"

namespace massform {

long GradedPiece::eigen_dim(const CharClass& chi, const CharClass& omega_char, long f) const {
  switch (kind) {
    case PieceKind::OmegaLine:
      return chi == omega_char ? 1 : 0;
    case PieceKind::Body:
      return vbar(chi) == val_class ? f : 0;
    case PieceKind::TrivialTop:
      return chi.is_trivial() ? 1 : 0;
  }
  return 0;
}

long FilteredModule::total_fp_dim() const {
  long d = 0;
  for (const GradedPiece& gp : pieces) d += gp.fp_dim;
  return d;
}

std::string LineRecord::to_string() const {
  std::string out = "chi=" + chi.to_string() + " level=" + std::to_string(level) + " rep=";
  for (size_t k = 0; k < coords.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(static_cast<int>(coords[k]));
  }
  return out;
}

FilteredModule build_module(const LocalField& F, std::optional<long> max_level) {
  long p = F.p();
  FilteredModule W(F);

  if (F.is_mixed()) {
    long top = F.e() * p;
    if (max_level.has_value() && *max_level != top)
      raise(Errc::LevelOutOfRange,
            "mixed-characteristic module is complete at level e*p = " + std::to_string(top));
    W.max_level = top;
  } else {
    if (!max_level.has_value())
      raise(Errc::MissingTruncation,
            "equal-characteristic module is infinite; a truncation level is required");
    if (*max_level < 0) raise(Errc::LevelOutOfRange, "truncation level must be >= 0");
    W.max_level = *max_level;
  }

  GradedPiece base;
  base.level = 0;
  base.kind = PieceKind::OmegaLine;
  base.val_class = ValClass(0, F.char_modulus());
  base.fp_dim = 1;
  W.pieces.push_back(base);

  long vw = vbar_omega(F);
  long i_hi = F.is_mixed() ? F.e() - 1 : (W.max_level - 1) / p;
  for (long i = 0; i <= i_hi; ++i) {
    for (long j = 1; j <= p - 1; ++j) {
      long n = i * p + j;
      if (n > W.max_level) break;
      GradedPiece body;
      body.level = n;
      body.kind = PieceKind::Body;
      body.val_class = ValClass(vw - (i + j), F.char_modulus());
      body.fp_dim = F.f() * (p - 1);
      W.pieces.push_back(body);
    }
  }

  if (F.is_mixed()) {
    GradedPiece top;
    top.level = F.e() * p;
    top.kind = PieceKind::TrivialTop;
    top.val_class = ValClass(0, F.char_modulus());
    top.fp_dim = 1;
    W.pieces.push_back(top);
  }

  std::sort(W.pieces.begin(), W.pieces.end(),
            [](const GradedPiece& x, const GradedPiece& y) { return x.level < y.level; });
  return W;
}

long eigen_dim(const FilteredModule& W, const CharClass& chi, long up_to_level) {
  if (up_to_level < 0 || up_to_level > W.max_level)
    raise(Errc::LevelOutOfRange, "filtration level out of range: " + std::to_string(up_to_level));
  CharClass w = omega(W.field);
  long d = 0;
  for (const GradedPiece& gp : W.pieces)
    if (gp.level <= up_to_level) d += gp.eigen_dim(chi, w, W.field.f());
  return d;
}

std::vector<LineRecord> enumerate_stable_lines(const FilteredModule& W, const CharClass& chi,
                                               long guard) {
  CharClass w = omega(W.field);
  long p = W.field.p();

  // One slot per F_p basis vector of the chi-eigenspace, tagged with the
  // level of the piece it comes from; pieces are level-sorted already.
  std::vector<long> slot_level;
  for (const GradedPiece& gp : W.pieces) {
    long d = gp.eigen_dim(chi, w, W.field.f());
    for (long k = 0; k < d; ++k) slot_level.push_back(gp.level);
  }
  long dim = static_cast<long>(slot_level.size());
  if (dim > guard)
    raise(Errc::EigenspaceTooLarge, "eigenspace dimension " + std::to_string(dim) +
                                        " exceeds the enumeration guard " + std::to_string(guard));

  std::vector<LineRecord> lines;
  if (dim == 0) return lines;

  // Canonical line representatives: the first nonzero coordinate (the
  // pivot) is 1, every later coordinate runs over all of F_p.
  std::vector<std::uint8_t> coords(static_cast<size_t>(dim), 0);
  for (long pivot = 0; pivot < dim; ++pivot) {
    std::fill(coords.begin(), coords.end(), 0);
    coords[static_cast<size_t>(pivot)] = 1;
    bool more = true;
    while (more) {
      LineRecord rec;
      rec.chi = chi;
      rec.coords = coords;
      long lvl = 0;
      for (long k = 0; k < dim; ++k)
        if (coords[static_cast<size_t>(k)] != 0) lvl = slot_level[static_cast<size_t>(k)];
      rec.level = lvl;
      lines.push_back(std::move(rec));

      // odometer over the free coordinates pivot+1..dim-1
      more = false;
      for (long k = dim - 1; k > pivot; --k) {
        auto& c = coords[static_cast<size_t>(k)];
        if (c + 1 < p) {
          ++c;
          more = true;
          break;
        }
        c = 0;
      }
    }
  }

  std::sort(lines.begin(), lines.end(), [](const LineRecord& x, const LineRecord& y) {
    if (x.level != y.level) return x.level < y.level;
    return x.coords < y.coords;
  });
  return lines;
}

Rational oracle_mass(const FilteredModule& W, const CharClass& chi, long guard) {
  CharClass w = omega(W.field);
  Rational per_line(chi == w ? 1 : W.field.p());
  Rational sum;
  for (const LineRecord& rec : enumerate_stable_lines(W, chi, guard))
    if (rec.level > 0) sum += per_line * W.field.q_pow(-rec.level);
  return sum;
}

}  // namespace massform
