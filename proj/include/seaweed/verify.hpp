#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "seaweed/algebra.hpp"
#include "seaweed/composition.hpp"
#include "seaweed/errors.hpp"
#include "seaweed/forms.hpp"
#include "seaweed/linalg.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/winding.hpp"

namespace seaweed {

/****************************************************************************

  Certification. The Kirillov form of a functional f is the skew bilinear
  form (x,y) -> f([x,y]); its matrix over the canonical basis decides
  regularity (kernel dimension equal to the combinatorial index) and the
  contact property (odd dimension, one-dimensional kernel, f nonzero on it).

  Everything here is certified with exact arithmetic. Small and medium
  matrices go through dense fraction-free elimination, which also produces an
  exact kernel basis. Large instances combine a modular rank bound with an
  explicitly verified kernel: if the modular kernel dimension equals the
  number of exhibited exact kernel vectors, the rational kernel dimension is
  pinned exactly (the modular rank can only undershoot). The report records
  which route produced it.

 ****************************************************************************/

struct KirillovMatrix {
  int dim = 0;
  SparseRat rows;  // skew; rows[a][b] = f([x_a, x_b])
};

inline KirillovMatrix kirillov_matrix(const SeaweedDescriptor& d, const OneForm& f) {
  if (f.n() != d.n) throw InvalidDescriptorError("form and descriptor have different half-rank");
  const auto basis = chevalley_basis(d);
  const int dim = static_cast<int>(basis.size());
  std::vector<AlgebraElement> x;
  x.reserve(basis.size());
  for (const BasisElement& b : basis) x.push_back(materialize(b, d.n));
  KirillovMatrix m;
  m.dim = dim;
  m.rows.resize(basis.size());
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      Rat v = evaluate(f, bracket(x[static_cast<std::size_t>(a)], x[static_cast<std::size_t>(b)]));
      if (v == 0) continue;
      m.rows[static_cast<std::size_t>(a)][b] = v;
      m.rows[static_cast<std::size_t>(b)][a] = -v;
    }
  return m;
}

// Exact rank and kernel, kernel vectors re-expressed in the algebra.
struct RankKernel {
  int rank = 0;
  std::vector<std::vector<Int>> kernel_coords;   // over the canonical basis
  std::vector<AlgebraElement> kernel_elements;
};

inline RankKernel rank_and_kernel(const SeaweedDescriptor& d, const KirillovMatrix& m) {
  ExactKernel ek = dense_rank_kernel(m.rows, m.dim);
  if ((m.dim - ek.rank) % 2 != m.dim % 2 || ek.rank % 2 != 0)
    throw ConsistencyError("skew matrix with odd rank");
  RankKernel out;
  out.rank = ek.rank;
  out.kernel_coords = std::move(ek.kernel);
  const auto basis = chevalley_basis(d);
  for (const auto& vec : out.kernel_coords) {
    AlgebraElement h(d.n);
    for (std::size_t k = 0; k < vec.size(); ++k) {
      if (vec[k] == 0) continue;
      AlgebraElement xb = materialize(basis[k], d.n);
      xb *= Rat(vec[k]);
      h += xb;
    }
    out.kernel_elements.push_back(std::move(h));
  }
  return out;
}

// True when B.h = 0 exactly, checked sparsely against the basis.
inline bool in_kirillov_kernel(const SeaweedDescriptor& d, const OneForm& f,
                               const AlgebraElement& h) {
  for (const BasisElement& b : chevalley_basis(d))
    if (evaluate(f, bracket(h, materialize(b, d.n))) != 0) return false;
  return true;
}

enum class RankEngine { automatic, dense_exact, sparse_modp, sparse_exact };

struct VerificationReport {
  std::string descriptor;
  int dimension = 0;
  int combinatorial_index = 0;
  int kernel_dimension = -1;
  std::vector<AlgebraElement> kernel_basis;
  Rat phi_of_kernel;     // f on the kernel generator (kernel dimension one only)
  bool is_regular = false;
  bool is_contact = false;
  bool kernel_certified = false;  // kernel dimension is exact, not only a bound
  std::string engine;
  std::optional<bool> bordered_agrees;
  std::optional<int> oracle_index;
};

// Contact / regularity verdict for (d, f). An optional candidate kernel
// generator lets large instances certify without exact elimination.
inline VerificationReport is_contact_form(const SeaweedDescriptor& d, const OneForm& f,
                                          const AlgebraElement* candidate_kernel = nullptr,
                                          RankEngine engine = RankEngine::automatic,
                                          int dense_limit = 512) {
  VerificationReport rep;
  rep.descriptor = notation(d);
  rep.dimension = dimension(d);
  rep.combinatorial_index = index_via_meander(d);
  const KirillovMatrix m = kirillov_matrix(d, f);

  if (engine == RankEngine::automatic)
    engine = m.dim <= dense_limit ? RankEngine::dense_exact : RankEngine::sparse_modp;

  if (engine == RankEngine::dense_exact) {
    RankKernel rk = rank_and_kernel(d, m);
    rep.kernel_dimension = m.dim - rk.rank;
    rep.kernel_basis = std::move(rk.kernel_elements);
    rep.kernel_certified = true;
    rep.engine = "dense-exact";
  } else if (engine == RankEngine::sparse_exact) {
    rep.kernel_dimension = m.dim - sparse_rank_exact(m.rows);
    rep.kernel_certified = true;
    rep.engine = "sparse-exact";
  } else {
    const int bound = m.dim - sparse_rank_modp(m.rows);
    rep.kernel_dimension = bound;
    rep.engine = "sparse-modp";
    if (candidate_kernel && bound == 1 && !candidate_kernel->zero() &&
        in_kirillov_kernel(d, f, *candidate_kernel)) {
      // the exhibited vector forces kernel dimension >= 1, the modular rank
      // forces <= 1, so the value 1 is exact
      rep.kernel_certified = true;
      rep.engine = "sparse-modp+kernel-certificate";
    }
  }

  if (candidate_kernel && rep.kernel_basis.empty() && rep.kernel_dimension == 1)
    rep.kernel_basis.push_back(*candidate_kernel);
  if (rep.kernel_dimension == 1 && !rep.kernel_basis.empty())
    rep.phi_of_kernel = evaluate(f, rep.kernel_basis.front());
  rep.is_regular = rep.kernel_dimension == rep.combinatorial_index;
  rep.is_contact = rep.dimension % 2 == 1 && rep.kernel_dimension == 1 &&
                   !rep.kernel_basis.empty() && rep.phi_of_kernel != 0;
  return rep;
}

// Independent contact test: border the Kirillov matrix with the value row
// and column of f and test the determinant. Exact, and required to agree
// with is_contact_form wherever both run.
inline bool bordered_contact_oracle(const SeaweedDescriptor& d, const OneForm& f) {
  const int dim = dimension(d);
  if (dim % 2 == 0)
    throw InvalidDescriptorError("bordered contact oracle needs an odd-dimensional seaweed");
  const KirillovMatrix m = kirillov_matrix(d, f);
  SparseRat bordered(static_cast<std::size_t>(dim) + 1);
  const auto basis = chevalley_basis(d);
  for (int j = 0; j < dim; ++j) {
    const Rat v = evaluate(f, materialize(basis[static_cast<std::size_t>(j)], d.n));
    if (v == 0) continue;
    bordered[0][j + 1] = v;
    bordered[static_cast<std::size_t>(j) + 1][0] = -v;
  }
  for (int i = 0; i < dim; ++i)
    for (const auto& [j, v] : m.rows[static_cast<std::size_t>(i)])
      bordered[static_cast<std::size_t>(i) + 1][j + 1] = v;
  return bareiss_determinant(clear_denominators(bordered, dim + 1)) != 0;
}

// Randomized index upper bound: minimum kernel dimension of the Kirillov
// form over `trials` integer forms with coefficients in [-bound, bound] on
// the admissible representatives. Deterministic for a fixed seed. The
// minimizing trial is re-certified exactly when the dimension permits.
inline int index_oracle(const SeaweedDescriptor& d, int trials = 20, long bound = 1000,
                        std::uint64_t seed = 12345, int dense_limit = 512) {
  if (trials < 1) throw InvalidDescriptorError("index oracle needs at least one trial");
  const AdmissibleSet adm(d);
  std::vector<Location> reps;
  for (int i = 1; i <= 2 * d.n; ++i)
    for (int j = 1; j <= 2 * d.n; ++j)
      if (i + j <= 2 * d.n + 1 && adm.contains({i, j})) reps.push_back({i, j});

  std::mt19937_64 rng(seed);
  auto random_form = [&]() {
    OneForm f(d.n);
    for (const Location& l : reps) {
      const long c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
      if (c != 0) f.add(l, Rat(c));
    }
    return f;
  };

  int best = dimension(d);
  std::optional<OneForm> best_form;
  for (int t = 0; t < trials; ++t) {
    OneForm f = random_form();
    const KirillovMatrix m = kirillov_matrix(d, f);
    const int kdim = m.dim - sparse_rank_modp(m.rows);
    if (kdim < best) {
      best = kdim;
      best_form = std::move(f);
    }
  }
  if (best_form && dimension(d) <= dense_limit) {
    // exact recount of the winning trial; the modular count can only exceed it
    const KirillovMatrix m = kirillov_matrix(d, *best_form);
    const int exact = m.dim - dense_rank_kernel(m.rows, m.dim).rank;
    if (exact != best)
      throw ConsistencyError("modular and exact kernel dimensions disagree on the oracle minimum");
  }
  return best;
}

// Index shortcut for two-part numerators over a one-part denominator:
// for alpha + beta = n and gamma in {n-1, n-2},
//   index C2n alpha|beta / gamma = gcd(alpha + beta, beta + gamma) - 1.
inline int gcd_index(int n, int alpha, int beta, int gamma) {
  if (alpha < 1 || beta < 1 || gamma < 1)
    throw InvalidDescriptorError("gcd index parameters must be positive");
  if (alpha + beta != n)
    throw InvalidDescriptorError("gcd index requires alpha + beta = n");
  if (gamma != n - 1 && gamma != n - 2)
    throw InvalidDescriptorError("gcd index requires gamma = n-1 or n-2");
  return std::gcd(alpha + beta, beta + gamma) - 1;
}

// Spot-check that h really annihilates the form through the bracket against
// random algebra elements.
inline bool kernel_certifies(const SeaweedDescriptor& d, const OneForm& f, const AlgebraElement& h,
                             int samples = 100, std::uint64_t seed = 7) {
  const auto basis = chevalley_basis(d);
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    AlgebraElement y(d.n);
    for (const BasisElement& b : basis) {
      const long c = static_cast<long>(rng() % 7) - 3;
      if (c == 0) continue;
      AlgebraElement xb = materialize(b, d.n);
      xb *= Rat(c);
      y += xb;
    }
    if (evaluate(f, bracket(h, y)) != 0) return false;
  }
  return true;
}

}  // namespace seaweed
