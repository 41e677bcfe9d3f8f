#include "massform/artin_schreier.hpp"

#include <algorithm>
#include <string>

#include "massform/errors.hpp"

namespace massform {

namespace {

void drop_if_zero(ASOracle::Rep& rep, long n) {
  auto it = rep.find(n);
  if (it != rep.end() && it->second == 0) rep.erase(it);
}

}  // namespace

ASOracle::ASOracle(long p, long f)
    : p_(p), f_(f), l_(p, static_cast<int>(f * (p - 1))) {
  if (p != 2 && p != 3)
    raise(Errc::UnsupportedPrime, "concrete oracle supports p in {2, 3}, got " + std::to_string(p));
  if (f < 1) raise(Errc::IndexOutOfRange, "residue degree f must be >= 1");
  // canonical trace-one constant: smallest encoding works and is stable
  for (GaloisField::Elem x = 0; x < l_.order(); ++x) {
    if (l_.trace(x) == 1) {
      theta_ = x;
      break;
    }
  }
}

ASOracle::Rep ASOracle::add(const Rep& x, const Rep& y) const {
  Rep out = x;
  for (const auto& [n, c] : y) {
    out[n] = l_.add(out.count(n) ? out[n] : 0, c);
    drop_if_zero(out, n);
  }
  return out;
}

ASOracle::Rep ASOracle::neg(const Rep& x) const {
  Rep out;
  for (const auto& [n, c] : x) out[n] = l_.neg(c);
  return out;
}

ASOracle::Rep ASOracle::artin_schreier_map(const Rep& x) const {
  // (sum a_n S^-n)^p = sum a_n^p S^-np in characteristic p
  Rep powed;
  for (const auto& [n, c] : x) powed[n * p_] = l_.pow(c, static_cast<std::uint64_t>(p_));
  return add(powed, neg(x));
}

ASOracle::Rep ASOracle::normalize(const Rep& x, Rep* witness) const {
  if (witness) witness->clear();
  Rep rep;
  for (const auto& [n, c] : x) {
    if (n < 0) raise(Errc::IndexOutOfRange, "negative pole exponent in class representative");
    if (c != 0) rep[n] = c;
  }

  // Fold every pole of order np down to order n via the p-th root: the
  // two monomials differ by x^p - x of the root monomial.
  while (true) {
    long bad = -1;
    for (auto it = rep.rbegin(); it != rep.rend(); ++it) {
      if (it->first >= 1 && it->first % p_ == 0) {
        bad = it->first;
        break;
      }
    }
    if (bad < 0) break;
    GaloisField::Elem a = rep[bad];
    rep.erase(bad);
    long m = bad / p_;
    GaloisField::Elem root = l_.frobenius_inv(a);
    rep[m] = l_.add(rep.count(m) ? rep[m] : 0, root);
    drop_if_zero(rep, m);
    if (witness) {
      (*witness)[m] = l_.add(witness->count(m) ? (*witness)[m] : 0, root);
      drop_if_zero(*witness, m);
    }
  }

  // Constants reduce to t * theta, t in F_p: the image of x^p - x on the
  // coefficient field is exactly the kernel of the trace.
  GaloisField::Elem c = rep.count(0) ? rep[0] : 0;
  long t = l_.trace(c);
  GaloisField::Elem target = l_.mul(theta_, l_.from_int(t));
  if (c != target) {
    GaloisField::Elem diff = l_.sub(c, target);
    GaloisField::Elem u = 0;
    bool found = false;
    for (GaloisField::Elem y = 0; y < l_.order(); ++y) {
      if (l_.sub(l_.pow(y, static_cast<std::uint64_t>(p_)), y) == diff) {
        u = y;
        found = true;
        break;
      }
    }
    if (!found) raise(Errc::VerificationFailed, "trace-zero constant without a preimage");
    rep[0] = target;
    drop_if_zero(rep, 0);
    if (witness) {
      (*witness)[0] = l_.add(witness->count(0) ? (*witness)[0] : 0, u);
      drop_if_zero(*witness, 0);
    }
  }
  return rep;
}

ASOracle::Rep ASOracle::act_sigma(const Rep& x) const {
  Rep out;
  for (const auto& [n, c] : x) out[n] = l_.frobenius_iter(c, static_cast<int>(f_));
  return normalize(out);
}

ASOracle::Rep ASOracle::act_tau(const Rep& x) const {
  if (p_ == 2) return normalize(x);
  Rep out;
  for (const auto& [n, c] : x) out[n] = (n % 2 == 0) ? c : l_.neg(c);
  return normalize(out);
}

bool ASOracle::is_normal(const Rep& x) const {
  for (const auto& [n, c] : x) {
    if (c == 0) return false;
    if (n < 0) return false;
    if (n >= 1 && n % p_ == 0) return false;
    if (n == 0 && c != l_.mul(theta_, l_.from_int(l_.trace(c)))) return false;
  }
  return true;
}

long ASOracle::level(const Rep& x) const {
  long lvl = 0;
  for (const auto& [n, c] : x)
    if (c != 0 && n > lvl) lvl = n;
  return lvl;
}

namespace {

using Vec = std::vector<std::uint8_t>;
using Mat = std::vector<Vec>;

// Reduced row echelon form over F_p; returns the pivot column of each
// surviving row.
std::vector<long> rref(Mat& m, long p) {
  std::vector<long> pivots;
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    // scale the pivot row to 1
    long inv = 1;
    for (long t = 1; t < p; ++t)
      if ((static_cast<long>(m[r][c]) * t) % p == 1) inv = t;
    for (size_t k = c; k < cols; ++k)
      m[r][k] = static_cast<std::uint8_t>((m[r][k] * inv) % p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      long factor = m[i][c];
      for (size_t k = c; k < cols; ++k)
        m[i][k] = static_cast<std::uint8_t>(((m[i][k] - factor * m[r][k]) % p + p) % p);
    }
    pivots.push_back(static_cast<long>(c));
    ++r;
  }
  m.resize(pivots.size());
  return pivots;
}

// Basis of the kernel of m (given in RREF with its pivot list), one
// vector per free column, in column order.
Mat kernel_basis(const Mat& m, const std::vector<long>& pivots, size_t cols, long p) {
  std::vector<bool> is_pivot(cols, false);
  for (long c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  Mat basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < m.size(); ++r) {
      long pc = pivots[r];
      long val = (p - m[r][free] % p) % p;
      v[static_cast<size_t>(pc)] = static_cast<std::uint8_t>(val);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<LineRecord> as_stable_lines(const LocalField& F, long max_level, long guard) {
  if (!F.is_equal_char())
    raise(Errc::WrongCharacteristic, "the class-space oracle needs an EqualChar field");
  if (max_level < 1) raise(Errc::IndexOutOfRange, "truncation level must be >= 1");
  if (max_level > 30)
    raise(Errc::TruncationTooLarge, "truncation level capped at 30, got " + std::to_string(max_level));

  long p = F.p();
  long f = F.f();
  ASOracle oracle(p, f);
  const GaloisField& l = oracle.coeff_field();
  int d = l.degree();

  // Slots of the truncated class space: the constant line, then one
  // coefficient-field block per pole order not divisible by p.
  struct Slot {
    long n;  // pole order, 0 = constant
    int k;   // digit within the block
  };
  std::vector<Slot> slots;
  slots.push_back({0, 0});
  for (long n = 1; n <= max_level; ++n) {
    if (n % p == 0) continue;
    for (int k = 0; k < d; ++k) slots.push_back({n, k});
  }
  size_t dim = slots.size();

  auto vec_to_rep = [&](const Vec& v) {
    ASOracle::Rep rep;
    rep[0] = l.mul(oracle.theta(), l.from_int(v[0]));
    drop_if_zero(rep, 0);
    size_t s = 1;
    while (s < dim) {
      long n = slots[s].n;
      std::vector<long> digits;
      while (s < dim && slots[s].n == n) digits.push_back(v[s]), ++s;
      GaloisField::Elem c = l.from_digits(digits);
      if (c != 0) rep[n] = c;
    }
    return rep;
  };

  auto rep_to_vec = [&](const ASOracle::Rep& rep) {
    Vec v(dim, 0);
    for (const auto& [n, c] : rep) {
      if (n == 0) {
        v[0] = static_cast<std::uint8_t>(l.trace(c));
        continue;
      }
      if (n > max_level)
        raise(Errc::VerificationFailed, "group action escaped the truncation window");
      for (size_t s = 1; s < dim; ++s)
        if (slots[s].n == n) v[s] = static_cast<std::uint8_t>(l.digit(c, slots[s].k));
    }
    return v;
  };

  // matrices of the two generators on the truncated class space
  auto action_matrix = [&](bool tau) {
    Mat cols(dim);
    for (size_t s = 0; s < dim; ++s) {
      Vec unit(dim, 0);
      unit[s] = 1;
      ASOracle::Rep img = tau ? oracle.act_tau(vec_to_rep(unit)) : oracle.act_sigma(vec_to_rep(unit));
      cols[s] = rep_to_vec(img);
    }
    // transpose columns into row-major form
    Mat m(dim, Vec(dim, 0));
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) m[r][c] = cols[c][r];
    return m;
  };

  Mat msigma = action_matrix(false);
  Mat mtau = p == 2 ? Mat() : action_matrix(true);

  std::vector<LineRecord> out;
  for (const CharClass& chi : enumerate_chars(F)) {
    Mat basis;
    if (p == 2) {
      // trivial group: the whole space is the eigenspace
      basis.assign(dim, Vec(dim, 0));
      for (size_t s = 0; s < dim; ++s) basis[s][s] = 1;
    } else {
      long lam_tau = chi.a == 0 ? 1 : p - 1;  // (-1)^a mod p
      long lam_sigma = chi.b == 0 ? 1 : p - 1;
      Mat sys;
      auto append_eigen_rows = [&](const Mat& m, long lam) {
        for (size_t r = 0; r < dim; ++r) {
          Vec row(dim, 0);
          for (size_t c = 0; c < dim; ++c) {
            long v = m[r][c] - (r == c ? lam : 0);
            row[c] = static_cast<std::uint8_t>(((v % p) + p) % p);
          }
          sys.push_back(std::move(row));
        }
      };
      append_eigen_rows(msigma, lam_sigma);
      append_eigen_rows(mtau, lam_tau);
      std::vector<long> pivots = rref(sys, p);
      basis = kernel_basis(sys, pivots, dim, p);
    }

    long edim = static_cast<long>(basis.size());
    if (edim > guard)
      raise(Errc::EigenspaceTooLarge, "eigenspace dimension " + std::to_string(edim) +
                                          " exceeds the enumeration guard " + std::to_string(guard));
    if (edim == 0) continue;

    // canonical line representatives over the eigenspace basis
    Vec coords(static_cast<size_t>(edim), 0);
    for (long pivot = 0; pivot < edim; ++pivot) {
      std::fill(coords.begin(), coords.end(), 0);
      coords[static_cast<size_t>(pivot)] = 1;
      bool more = true;
      while (more) {
        Vec full(dim, 0);
        for (long i = 0; i < edim; ++i) {
          if (coords[static_cast<size_t>(i)] == 0) continue;
          for (size_t s = 0; s < dim; ++s)
            full[s] = static_cast<std::uint8_t>(
                (full[s] + coords[static_cast<size_t>(i)] * basis[static_cast<size_t>(i)][s]) % p);
        }
        LineRecord rec;
        rec.chi = chi;
        rec.coords = coords;
        rec.level = 0;
        for (size_t s = 0; s < dim; ++s)
          if (full[s] != 0) rec.level = std::max(rec.level, slots[s].n);
        out.push_back(std::move(rec));

        more = false;
        for (long k = edim - 1; k > pivot; --k) {
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
  }

  std::sort(out.begin(), out.end(), [](const LineRecord& x, const LineRecord& y) {
    if (x.chi != y.chi) return x.chi < y.chi;
    if (x.level != y.level) return x.level < y.level;
    return x.coords < y.coords;
  });
  return out;
}

}  // namespace massform
