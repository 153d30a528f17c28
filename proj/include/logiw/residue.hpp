#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "error.hpp"
#include "integer.hpp"

// Linear algebra over Z / ell^N with machine-word residues. Used as an
// independent check on the exact-integer computations in growth.hpp.
namespace logiw {

class ResidueRing {
public:
  using word = std::uint64_t;

  /// Largest N with ell^N < 2^62, so sums of two residues never overflow.
  static unsigned max_precision(unsigned long ell) {
    unsigned n = 0;
    unsigned __int128 p = 1;
    while (p * ell < (static_cast<unsigned __int128>(1) << 62)) {
      p *= ell;
      ++n;
    }
    return n;
  }

  explicit ResidueRing(unsigned long ell, unsigned precision = 0) : ell_(ell) {
    if (ell < 3) fail(ErrorCode::InvalidArgument, "residue ring needs an odd prime");
    const unsigned cap = max_precision(ell);
    precision_ = precision == 0 ? cap : precision;
    if (precision_ > cap)
      fail(ErrorCode::InvalidArgument, "precision " + std::to_string(precision_) + " exceeds machine words");
    powers_.push_back(1);
    for (unsigned i = 0; i < precision_; ++i) powers_.push_back(powers_.back() * ell);
    modulus_ = powers_.back();
  }

  unsigned long ell() const { return ell_; }
  unsigned precision() const { return precision_; }
  word modulus() const { return modulus_; }
  word ell_power(unsigned k) const { return powers_.at(k); }

  word reduce(const Integer &x) const { return mod(x, Integer(std::to_string(modulus_))).get_ui(); }
  word add(word a, word b) const { return (a + b) % modulus_; }
  word sub(word a, word b) const { return (a + modulus_ - b) % modulus_; }
  word neg(word a) const { return a == 0 ? 0 : modulus_ - a; }
  word mul(word a, word b) const {
    return static_cast<word>(static_cast<unsigned __int128>(a) * b % modulus_);
  }

  /// ell-adic valuation of a residue; precision() for zero.
  unsigned valuation(word a) const {
    if (a == 0) return precision_;
    unsigned v = 0;
    while (a % ell_ == 0) {
      a /= ell_;
      ++v;
    }
    return v;
  }

  word inverse(word a) const {
    // extended Euclid on signed 128-bit values
    __int128 r0 = modulus_, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      __int128 q = r0 / r1;
      __int128 t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    if (r0 != 1) fail(ErrorCode::NonUnit, "residue is not a unit");
    __int128 m = modulus_;
    return static_cast<word>(((s0 % m) + m) % m);
  }

private:
  unsigned long ell_;
  unsigned precision_ = 0;
  word modulus_ = 1;
  std::vector<word> powers_;
};

using WordMatrix = std::vector<std::vector<ResidueRing::word>>;

inline WordMatrix identity_matrix(std::size_t n) {
  WordMatrix m(n, std::vector<ResidueRing::word>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline WordMatrix mat_mul(const ResidueRing &R, const WordMatrix &a, const WordMatrix &b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  WordMatrix c(n, std::vector<ResidueRing::word>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = R.add(c[i][j], R.mul(a[i][t], b[t][j]));
    }
  return c;
}

inline WordMatrix mat_add(const ResidueRing &R, const WordMatrix &a, const WordMatrix &b) {
  WordMatrix c = a;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] = R.add(c[i][j], b[i][j]);
  return c;
}

inline WordMatrix mat_pow(const ResidueRing &R, WordMatrix base, unsigned long e) {
  WordMatrix r = identity_matrix(base.size());
  while (e > 0) {
    if (e & 1) r = mat_mul(R, r, base);
    e >>= 1;
    if (e) base = mat_mul(R, base, base);
  }
  return r;
}

/// I + G + G^2 + ... + G^(count-1).
inline WordMatrix geometric_sum(const ResidueRing &R, const WordMatrix &g, unsigned long count) {
  const std::size_t n = g.size();
  WordMatrix sum(n, std::vector<ResidueRing::word>(n, 0)), term = identity_matrix(n);
  for (unsigned long j = 0; j < count; ++j) {
    sum = mat_add(R, sum, term);
    term = mat_mul(R, term, g);
  }
  return sum;
}

/// A column as (row, value) pairs with nonzero values.
using SparseColumn = std::vector<std::pair<std::uint32_t, ResidueRing::word>>;

/// ell-adic valuations of the elementary divisors of (Z/ell^N)^rows modulo
/// the span of the given columns, one per row; a zero divisor reports N.
///
/// Pivots are always of minimal valuation, which keeps every elimination
/// exact over the local ring. Matrices are held sparsely, and the pivot search
/// stops as soon as it meets the known lower bound, so diagonal blocks of
/// size ell^n cost linear time.
inline std::vector<unsigned> elementary_divisor_valuations(const ResidueRing &R, std::size_t rows,
                                                           const std::vector<SparseColumn> &columns) {
  using word = ResidueRing::word;
  std::vector<std::map<std::uint32_t, word>> row_entries(rows);
  std::vector<std::set<std::uint32_t>> col_rows(columns.size());
  for (std::uint32_t c = 0; c < columns.size(); ++c) {
    for (const auto &[r, x] : columns[c]) {
      if (r >= rows) fail(ErrorCode::InvalidArgument, "row index out of range");
      word v = x % R.modulus();
      if (v == 0) continue;
      word &slot = row_entries[r][c];
      slot = R.add(slot, v);
      if (slot == 0) {
        row_entries[r].erase(c);
        col_rows[c].erase(r);
      } else {
        col_rows[c].insert(r);
      }
    }
  }
  std::set<std::uint32_t> alive;
  for (std::uint32_t r = 0; r < rows; ++r) alive.insert(r);

  std::vector<unsigned> out;
  unsigned floor = 0;
  while (!alive.empty()) {
    std::uint32_t pr = 0, pc = 0;
    unsigned best = R.precision();
    for (auto r : alive) {
      for (const auto &[c, x] : row_entries[r]) {
        unsigned v = R.valuation(x);
        if (v < best) {
          best = v;
          pr = r;
          pc = c;
          if (v == floor) break;
        }
      }
      if (best == floor) break;
    }
    if (best >= R.precision()) break;
    floor = best;
    const word unit_inv = R.inverse(row_entries[pr][pc] / R.ell_power(best));
    const std::vector<std::uint32_t> targets(col_rows[pc].begin(), col_rows[pc].end());
    const std::vector<std::pair<std::uint32_t, word>> pivot_row(row_entries[pr].begin(), row_entries[pr].end());
    for (auto r : targets) {
      if (r == pr) continue;
      const word f = R.mul(row_entries[r][pc] / R.ell_power(best), unit_inv);
      for (const auto &[c, y] : pivot_row) {
        word &slot = row_entries[r][c];
        slot = R.sub(slot, R.mul(f, y));
        if (slot == 0) {
          row_entries[r].erase(c);
          col_rows[c].erase(r);
        } else {
          col_rows[c].insert(r);
        }
      }
    }
    for (const auto &[c, y] : pivot_row) col_rows[c].erase(pr);
    row_entries[pr].clear();
    alive.erase(pr);
    out.push_back(best);
  }
  while (out.size() < rows) out.push_back(R.precision());
  return out;
}

/// Dense matrix columns to the sparse form taken above.
inline std::vector<SparseColumn> dense_columns(const WordMatrix &m) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  std::vector<SparseColumn> out(cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (m[i][j] != 0) out[j].emplace_back(static_cast<std::uint32_t>(i), m[i][j]);
  return out;
}

} // namespace logiw
