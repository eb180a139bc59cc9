#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "seaweed/arith.hpp"
#include "seaweed/errors.hpp"

namespace seaweed {

/****************************************************************************

  Exact linear algebra over the rationals.

  The dense engine is fraction-free (Bareiss) elimination over integers:
  every intermediate entry is a minor of the scaled input, so growth is
  bounded and every division is exact. Pivot rows are chosen by sparsity.
  Kernels are recovered from the integer echelon form by rational back
  substitution and returned as primitive integer vectors.

  The modular engine runs the same elimination over GF(p) for a fixed
  61-bit Mersenne prime. A modular rank is a lower bound on the rational
  rank, so a modular kernel dimension is an upper bound on the rational one;
  paired with an explicitly exhibited exact kernel vector this yields exact
  certificates without big-integer elimination. The sparse variants serve
  matrices too large for the dense path.

 ****************************************************************************/

using DenseInt = std::vector<std::vector<Int>>;
using SparseRat = std::vector<std::map<int, Rat>>;

// Row-scale a rational matrix to integers (kernel and rank are unchanged).
inline DenseInt clear_denominators(const SparseRat& rows, int cols) {
  DenseInt a(rows.size(), std::vector<Int>(static_cast<std::size_t>(cols), Int(0)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Int lcm(1);
    for (const auto& [j, v] : rows[i]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& [j, v] : rows[i]) {
      Rat scaled = v * Rat(lcm);
      scaled.canonicalize();
      a[i][static_cast<std::size_t>(j)] = scaled.get_num();
    }
  }
  return a;
}

struct EchelonInt {
  DenseInt rows;               // echelon rows, pivots left to right
  std::vector<int> pivot_cols; // strictly increasing
  int rank = 0;
};

// Fraction-free forward elimination. Within each column the surviving row
// with the fewest nonzeros is promoted.
inline EchelonInt bareiss_echelon(DenseInt a) {
  const std::size_t m = a.size();
  const std::size_t cols = m ? a[0].size() : 0;
  EchelonInt e;
  Int prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m; ++col) {
    std::size_t best = m;
    std::size_t best_nnz = 0;
    for (std::size_t i = row; i < m; ++i) {
      if (a[i][col] == 0) continue;
      std::size_t nnz = 0;
      for (std::size_t j = col; j < cols; ++j)
        if (a[i][j] != 0) ++nnz;
      if (best == m || nnz < best_nnz) {
        best = i;
        best_nnz = nnz;
      }
    }
    if (best == m) continue;
    std::swap(a[row], a[best]);
    const Int pivot = a[row][col];
    for (std::size_t i = row + 1; i < m; ++i) {
      if (a[i][col] == 0) {
        // still rescale to keep the fraction-free invariant
        for (std::size_t j = col; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          Int t = a[i][j] * pivot;
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          a[i][j] = t;
        }
        continue;
      }
      const Int factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        Int t = a[i][j] * pivot - factor * a[row][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    }
    e.pivot_cols.push_back(static_cast<int>(col));
    prev = pivot;
    ++row;
  }
  e.rank = static_cast<int>(row);
  a.resize(row);
  e.rows = std::move(a);
  return e;
}

// Primitive integer kernel basis, one vector per free column, back-substituted
// over the echelon form. Vectors are normalized so the first nonzero entry is
// positive and the entries are coprime.
inline std::vector<std::vector<Int>> kernel_from_echelon(const EchelonInt& e, int cols) {
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<Int>> kernel;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    std::vector<Rat> x(static_cast<std::size_t>(cols), Rat(0));
    x[static_cast<std::size_t>(free_col)] = 1;
    for (int k = e.rank - 1; k >= 0; --k) {
      const int pc = e.pivot_cols[static_cast<std::size_t>(k)];
      Rat s(0);
      for (int j = pc + 1; j < cols; ++j) {
        const Int& coef = e.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
        if (coef != 0 && x[static_cast<std::size_t>(j)] != 0)
          s += Rat(coef) * x[static_cast<std::size_t>(j)];
      }
      if (s != 0) {
        x[static_cast<std::size_t>(pc)] =
            -s / Rat(e.rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(pc)]);
        x[static_cast<std::size_t>(pc)].canonicalize();
      }
    }
    Int lcm(1);
    for (const Rat& v : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> iv(static_cast<std::size_t>(cols));
    Int gcd(0);
    for (std::size_t j = 0; j < iv.size(); ++j) {
      Rat scaled = x[j] * Rat(lcm);
      scaled.canonicalize();
      iv[j] = scaled.get_num();
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), iv[j].get_mpz_t());
    }
    if (gcd > 1)
      for (Int& v : iv) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), gcd.get_mpz_t());
    for (const Int& v : iv) {
      if (v == 0) continue;
      if (v < 0)
        for (Int& w : iv) w = -w;
      break;
    }
    kernel.push_back(std::move(iv));
  }
  return kernel;
}

struct ExactKernel {
  int rank = 0;
  std::vector<std::vector<Int>> kernel;
};

inline ExactKernel dense_rank_kernel(const SparseRat& rows, int cols) {
  EchelonInt e = bareiss_echelon(clear_denominators(rows, cols));
  ExactKernel out;
  out.rank = e.rank;
  out.kernel = kernel_from_echelon(e, cols);
  return out;
}

// Exact determinant of a square integer matrix (Bareiss; zero on rank
// deficiency).
inline Int bareiss_determinant(DenseInt a) {
  const std::size_t m = a.size();
  Int prev(1);
  int swaps = 0;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t best = m;
    for (std::size_t i = col; i < m; ++i)
      if (a[i][col] != 0) {
        best = i;
        break;
      }
    if (best == m) return Int(0);
    if (best != col) {
      std::swap(a[col], a[best]);
      ++swaps;
    }
    const Int pivot = a[col][col];
    for (std::size_t i = col + 1; i < m; ++i) {
      const Int factor = a[i][col];
      for (std::size_t j = col; j < m; ++j) {
        Int t = a[i][j] * pivot - factor * a[col][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    }
    prev = pivot;
  }
  Int det = a[m - 1][m - 1];
  return swaps % 2 ? Int(-det) : det;
}

/* ------------------------------ modular ------------------------------- */

inline constexpr std::uint64_t kModulus = (1ULL << 61) - 1;  // Mersenne prime

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % kModulus);
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, b);
    b = mod_mul(b, b);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t mod_inv(std::uint64_t a) { return mod_pow(a, kModulus - 2); }

inline std::uint64_t mod_of(const Int& z) {
  Int r = z % Int(static_cast<unsigned long>(kModulus));
  if (r < 0) r += Int(static_cast<unsigned long>(kModulus));
  return r.get_ui();
}

inline std::uint64_t mod_of(const Rat& q) {
  const std::uint64_t den = mod_of(Int(q.get_den()));
  if (den == 0) throw ConsistencyError("denominator vanishes modulo the working prime");
  return mod_mul(mod_of(Int(q.get_num())), mod_inv(den));
}

// Rank over GF(p) by sparse elimination with least-fill pivoting. A modular
// rank never exceeds the rational rank.
inline int sparse_rank_modp(const SparseRat& rows) {
  std::vector<std::map<int, std::uint64_t>> r(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i])
      if (std::uint64_t m = mod_of(v); m != 0) r[i][j] = m;

  std::vector<char> done(r.size(), 0);
  int rank = 0;
  for (;;) {
    std::size_t best = r.size();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (done[i] || r[i].empty()) continue;
      if (best == r.size() || r[i].size() < r[best].size()) best = i;
    }
    if (best == r.size()) break;
    done[best] = 1;
    ++rank;
    const int pc = r[best].begin()->first;
    const std::uint64_t inv = mod_inv(r[best].begin()->second);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (done[i] || !r[i].count(pc)) continue;
      const std::uint64_t f = mod_mul(r[i][pc], inv);
      for (const auto& [j, v] : r[best]) {
        auto it = r[i].find(j);
        const std::uint64_t sub = mod_mul(f, v);
        std::uint64_t nv = (it == r[i].end() ? 0 : it->second) + kModulus - sub;
        nv %= kModulus;
        if (nv == 0) {
          if (it != r[i].end()) r[i].erase(it);
        } else if (it == r[i].end()) {
          r[i][j] = nv;
        } else {
          it->second = nv;
        }
      }
    }
  }
  return rank;
}

// Exact rational rank by sparse elimination; intended for large sparse
// matrices where the dense path is out of reach.
inline int sparse_rank_exact(SparseRat r) {
  std::vector<char> done(r.size(), 0);
  int rank = 0;
  for (;;) {
    std::size_t best = r.size();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (done[i] || r[i].empty()) continue;
      if (best == r.size() || r[i].size() < r[best].size()) best = i;
    }
    if (best == r.size()) break;
    done[best] = 1;
    ++rank;
    const int pc = r[best].begin()->first;
    const Rat pivot = r[best].begin()->second;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (done[i]) continue;
      auto pit = r[i].find(pc);
      if (pit == r[i].end()) continue;
      Rat f = pit->second / pivot;
      f.canonicalize();
      for (const auto& [j, v] : r[best]) {
        auto it = r[i].find(j);
        Rat nv = (it == r[i].end() ? Rat(0) : it->second) - f * v;
        nv.canonicalize();
        if (nv == 0) {
          if (it != r[i].end()) r[i].erase(it);
        } else if (it == r[i].end()) {
          r[i][j] = nv;
        } else {
          it->second = nv;
        }
      }
    }
  }
  return rank;
}

}  // namespace seaweed
