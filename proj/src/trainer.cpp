// Copyright 2026-present the vqsd project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vqsd/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <random>
#include <stdexcept>

#include "vqsd/pauli.hpp"

namespace vqsd {

namespace {

// Permutation-plus-phase form of a Pauli word: P|c> = phase[c] |c ^ mask>.
struct SparsePauli {
  std::size_t mask = 0;
  std::vector<cd> phases;

  static SparsePauli from_string(const PauliString& p) {
    const std::size_t n = p.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    SparsePauli sp;
    sp.phases.assign(dim, cd{1.0, 0.0});
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = n - 1 - q;
      switch (p.letters[q]) {
        case PauliLetter::I:
          break;
        case PauliLetter::X:
          sp.mask |= std::size_t{1} << bit;
          break;
        case PauliLetter::Y:
          sp.mask |= std::size_t{1} << bit;
          for (std::size_t c = 0; c < dim; ++c)
            sp.phases[c] *= ((c >> bit) & 1u) ? cd{0, -1} : cd{0, 1};
          break;
        case PauliLetter::Z:
          for (std::size_t c = 0; c < dim; ++c)
            if ((c >> bit) & 1u) sp.phases[c] = -sp.phases[c];
          break;
      }
    }
    return sp;
  }
};

std::vector<double> probs_from_unitary(const ComplexMatrix& u,
                                       const DensityMatrix& rho) {
  const std::size_t dim = rho.dim();
  const ComplexMatrix e = mul(u, rho.matrix());
  std::vector<double> probs(dim);
  double sum = 0.0;
  for (std::size_t b = 0; b < dim; ++b) {
    cd acc{0.0, 0.0};
    for (std::size_t j = 0; j < dim; ++j) acc += e(b, j) * std::conj(u(b, j));
    const double p = std::clamp(acc.real(), 0.0, 1.0);
    probs[b] = p;
    sum += p;
  }
  if (sum > 0.0)
    for (auto& p : probs) p /= sum;
  return probs;
}

double objective_from_probs(ObjectiveKind kind, const std::vector<double>& probs,
                            std::size_t n) {
  switch (kind) {
    case ObjectiveKind::GlobalD: {
      double d = 0.0;
      for (double p : probs) d += p * p;
      return d;
    }
    case ObjectiveKind::SingleQubitPi:
      return probs[0];
    case ObjectiveKind::LocalL: {
      std::vector<double> pi(n, 0.0);
      for (std::size_t b = 0; b < probs.size(); ++b)
        for (std::size_t q = 0; q < n; ++q)
          if (((b >> (n - 1 - q)) & 1u) == 0u) pi[q] += probs[b];
      return local_objective(pi);
    }
  }
  throw std::logic_error("objective_from_probs: unreachable");
}

// Per-epoch objective evaluator with a cheap per-coordinate shift path
// for finite differences.
class CoordEvaluator {
 public:
  virtual ~CoordEvaluator() = default;
  virtual void set_base(const std::vector<double>& theta) = 0;
  virtual double eval_base() = 0;
  virtual double eval_shifted(std::size_t coord, double delta) = 0;
  virtual const ComplexMatrix& base_unitary() const = 0;
};

// exp(-i(G + d P)) = V exp(-i(L + d V^t P V)) V^t with (V, L) = eigh(G):
// the shifted eigenproblem is nearly diagonal and converges in a sweep
// or two.
class UniversalPauliEvaluator final : public CoordEvaluator {
 public:
  UniversalPauliEvaluator(const DensityMatrix& rho, ObjectiveKind kind)
      : rho_(rho), kind_(kind), n_(rho.n_qubits()), dim_(rho.dim()) {
    const auto strings = enumerate_pauli_group(n_);
    sparse_.reserve(strings.size());
    for (const auto& s : strings) sparse_.push_back(SparsePauli::from_string(s));
  }

  void set_base(const std::vector<double>& theta) override {
    if (theta.size() != sparse_.size())
      throw std::invalid_argument("UniversalPauliEvaluator: bad parameter count");
    ComplexMatrix g(dim_, dim_);
    for (std::size_t i = 0; i < theta.size(); ++i) {
      if (theta[i] == 0.0) continue;
      const auto& sp = sparse_[i];
      for (std::size_t c = 0; c < dim_; ++c)
        g(c ^ sp.mask, c) += theta[i] * sp.phases[c];
    }
    eig_ = eigh(g);
    vh_ = eig_.eigenvectors.adjoint();
    base_u_ = unitary_from_eigh(eig_);
  }

  double eval_base() override {
    return objective_from_probs(kind_, probs_from_unitary(base_u_, rho_), n_);
  }

  double eval_shifted(std::size_t coord, double delta) override {
    const auto& sp = sparse_[coord];
    const auto& v = eig_.eigenvectors;
    // t = P v (row permutation with phases), m = v^t t
    ComplexMatrix t(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
      const std::size_t src = r ^ sp.mask;
      const cd ph = sp.phases[src];
      for (std::size_t j = 0; j < dim_; ++j) t(r, j) = ph * v(src, j);
    }
    ComplexMatrix b = mul(vh_, t);
    b.scale(cd{delta, 0.0});
    for (std::size_t k = 0; k < dim_; ++k) b(k, k) += eig_.eigenvalues[k];

    EigenDecomposition shifted = eigh(b);
    shifted.eigenvectors = mul(v, shifted.eigenvectors);
    const ComplexMatrix u = unitary_from_eigh(shifted);
    return objective_from_probs(kind_, probs_from_unitary(u, rho_), n_);
  }

  const ComplexMatrix& base_unitary() const override { return base_u_; }

 private:
  DensityMatrix rho_;
  ObjectiveKind kind_;
  std::size_t n_, dim_;
  std::vector<SparsePauli> sparse_;
  EigenDecomposition eig_;
  ComplexMatrix vh_;
  ComplexMatrix base_u_;
};

// One coordinate touches one block, so the shifted circuit is
// suffix * block' * prefix with cached partial products.
class BrickWallEvaluator final : public CoordEvaluator {
 public:
  BrickWallEvaluator(const DensityMatrix& rho, ObjectiveKind kind,
                     std::size_t blocks)
      : rho_(rho), kind_(kind), n_(rho.n_qubits()), blocks_(blocks) {}

  void set_base(const std::vector<double>& theta) override {
    theta_ = theta;
    const std::size_t per = 3 * n_;
    if (theta.size() != per * blocks_)
      throw std::invalid_argument("BrickWallEvaluator: bad parameter count");
    prefix_.assign(blocks_ + 1, ComplexMatrix());
    suffix_.assign(blocks_ + 1, ComplexMatrix());
    prefix_[0] = ComplexMatrix::identity(rho_.dim());
    for (std::size_t j = 0; j < blocks_; ++j) {
      std::vector<double> bp(theta.begin() + j * per,
                             theta.begin() + (j + 1) * per);
      prefix_[j + 1] = mul(brick_wall_block(n_, bp), prefix_[j]);
    }
    suffix_[blocks_] = ComplexMatrix::identity(rho_.dim());
    for (std::size_t j = blocks_; j-- > 0;) {
      std::vector<double> bp(theta.begin() + j * per,
                             theta.begin() + (j + 1) * per);
      suffix_[j] = mul(suffix_[j + 1], brick_wall_block(n_, bp));
    }
  }

  double eval_base() override {
    return objective_from_probs(kind_, probs_from_unitary(prefix_[blocks_], rho_),
                                n_);
  }

  double eval_shifted(std::size_t coord, double delta) override {
    const std::size_t per = 3 * n_;
    const std::size_t j = coord / per;
    std::vector<double> bp(theta_.begin() + j * per,
                           theta_.begin() + (j + 1) * per);
    bp[coord % per] += delta;
    const ComplexMatrix u =
        mul(suffix_[j + 1], mul(brick_wall_block(n_, bp), prefix_[j]));
    return objective_from_probs(kind_, probs_from_unitary(u, rho_), n_);
  }

  const ComplexMatrix& base_unitary() const override {
    return prefix_[blocks_];
  }

 private:
  DensityMatrix rho_;
  ObjectiveKind kind_;
  std::size_t n_, blocks_;
  std::vector<double> theta_;
  std::vector<ComplexMatrix> prefix_, suffix_;
};

// Shot-based evaluation goes through the public evaluate() path with a
// deterministic stream of sampling seeds.
class SampledEvaluator final : public CoordEvaluator {
 public:
  SampledEvaluator(const DensityMatrix& rho, ObjectiveKind kind,
                   AnsatzDescriptor descriptor, std::size_t shots,
                   std::uint64_t seed)
      : rho_(rho), kind_(kind), descriptor_(descriptor), shots_(shots),
        seed_stream_(seed ^ 0x9e3779b97f4a7c15ull) {}

  void set_base(const std::vector<double>& theta) override {
    theta_ = theta;
    base_u_ = build_circuit(AnsatzParams{descriptor_, theta});
  }

  double eval_base() override { return eval_at(theta_); }

  double eval_shifted(std::size_t coord, double delta) override {
    std::vector<double> probe = theta_;
    probe[coord] += delta;
    return eval_at(probe);
  }

  const ComplexMatrix& base_unitary() const override { return base_u_; }

 private:
  double eval_at(const std::vector<double>& theta) {
    EvalOptions opts;
    opts.shots = shots_;
    opts.seed = seed_stream_();
    return evaluate(rho_, AnsatzParams{descriptor_, theta}, kind_, opts);
  }

  DensityMatrix rho_;
  ObjectiveKind kind_;
  AnsatzDescriptor descriptor_;
  std::size_t shots_;
  std::mt19937_64 seed_stream_;
  std::vector<double> theta_;
  ComplexMatrix base_u_;
};

std::unique_ptr<CoordEvaluator> make_evaluator(const DensityMatrix& rho,
                                               const TrainConfig& config) {
  if (config.shots > 0)
    return std::make_unique<SampledEvaluator>(rho, config.objective,
                                              config.ansatz, config.shots,
                                              config.seed);
  if (config.ansatz.kind == AnsatzKind::UniversalPauli)
    return std::make_unique<UniversalPauliEvaluator>(rho, config.objective);
  return std::make_unique<BrickWallEvaluator>(rho, config.objective,
                                              config.ansatz.blocks);
}

void check_config(const DensityMatrix& rho, const TrainConfig& config) {
  if (config.ansatz.n_qubits != rho.n_qubits())
    throw std::invalid_argument("train: ansatz/state qubit count mismatch");
  if (config.objective == ObjectiveKind::SingleQubitPi && rho.n_qubits() != 1)
    throw std::invalid_argument("train: single-qubit-pi requires N = 1");
  if (config.epochs < 1) throw std::invalid_argument("train: epochs must be >= 1");
  if (!(config.conv_tol > 0.0))
    throw std::invalid_argument("train: conv_tol must be > 0");
  if (!(config.fd_step > 0.0))
    throw std::invalid_argument("train: fd_step must be > 0");
}

}  // namespace

TrainResult train_from(const DensityMatrix& rho, const TrainConfig& config,
                       std::vector<double> theta0) {
  check_config(rho, config);
  AnsatzParams start{config.ansatz, theta0};
  start.validate();

  const double sign = objective_is_maximized(config.objective) ? -1.0 : 1.0;
  const double p_exact = purity(rho);

  auto evaluator = make_evaluator(rho, config);
  std::vector<double> theta = std::move(theta0);
  AdamState adam(theta.size(), config.adam);

  TrainRecord record;
  std::vector<double> window;  // recent objective values, native direction
  std::vector<double> best_theta = theta;
  double best_loss = std::numeric_limits<double>::infinity();
  double best_native = 0.0;

  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t epoch = 0;; ++epoch) {
    evaluator->set_base(theta);
    const double obj = evaluator->eval_base();
    if (!std::isfinite(obj)) {
      record.converged = false;
      throw std::runtime_error("train: non-finite objective at epoch " +
                               std::to_string(epoch));
    }

    if (sign * obj < best_loss) {
      best_loss = sign * obj;
      best_native = obj;
      best_theta = theta;
    }

    const bool last_epoch = epoch >= config.epochs;
    window.push_back(obj);
    if (window.size() > config.conv_window + 1)
      window.erase(window.begin());
    bool converged = false;
    if (window.size() == config.conv_window + 1) {
      const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
      converged = (*hi - *lo) < config.conv_tol;
    }

    if (epoch % config.log_every == 0 || last_epoch || converged) {
      const ComplexMatrix& u = evaluator->base_unitary();
      const DensityMatrix evolved = evolve(rho, u);
      const auto probs = basis_probabilities(evolved);
      TrainRow row;
      row.epoch = epoch;
      row.objective = obj;
      row.d_over_p = global_objective(probs) / p_exact;
      row.offdiag_average = off_diagonal_average(evolved);
      row.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      record.rows.push_back(row);
    }

    if (converged || last_epoch) {
      record.converged = converged;
      break;
    }

    std::vector<double> grad(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
      const double fp = evaluator->eval_shifted(i, config.fd_step);
      const double fm = evaluator->eval_shifted(i, -config.fd_step);
      if (!std::isfinite(fp) || !std::isfinite(fm))
        throw std::runtime_error("train: non-finite objective in gradient");
      grad[i] = sign * (fp - fm) / (2.0 * config.fd_step);
    }
    adam_step(adam, theta, grad);
  }

  AnsatzParams best{config.ansatz, best_theta};
  TrainResult result{std::move(record), best, best_native,
                     evolve(rho, build_circuit(best))};
  return result;
}

TrainResult train(const DensityMatrix& rho, const TrainConfig& config) {
  check_config(rho, config);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> init(-config.init_range,
                                              config.init_range);
  std::vector<double> theta0(config.ansatz.param_count());
  for (auto& t : theta0) t = init(rng);
  return train_from(rho, config, std::move(theta0));
}

DepthSweepResult grow_depth(const DensityMatrix& rho, const TrainConfig& config,
                            const DepthSweepOptions& opts) {
  if (config.ansatz.kind != AnsatzKind::BrickWall)
    throw std::invalid_argument("grow_depth: brick-wall ansatz required");
  if (opts.m_start < 1)
    throw std::invalid_argument("grow_depth: m_start must be >= 1");

  const std::size_t per_block = 3 * config.ansatz.n_qubits;
  DepthSweepResult sweep;
  std::vector<double> theta;
  double prev_objective = 0.0;
  bool have_prev = false;

  for (std::size_t m = opts.m_start; m <= opts.m_max; m += opts.m_step) {
    TrainConfig stage_config = config;
    stage_config.ansatz.blocks = m;

    // Appended blocks start near (not exactly at) zero so their gradients
    // are not symmetric.
    std::mt19937_64 rng(config.seed ^ (0xc2b2ae3d27d4eb4full * m));
    const std::size_t want = per_block * m;
    if (opts.fresh_start || theta.empty()) {
      std::uniform_real_distribution<double> init(-config.init_range,
                                                  config.init_range);
      theta.assign(want, 0.0);
      for (auto& t : theta) t = init(rng);
    } else {
      std::uniform_real_distribution<double> init(-opts.grow_init_range,
                                                  opts.grow_init_range);
      while (theta.size() < want) theta.push_back(init(rng));
    }

    TrainResult result = train_from(rho, stage_config, theta);
    theta = result.best_params.theta;

    const auto& last = result.record.rows.back();
    sweep.stages.push_back(DepthStage{m, result.best_objective, last.d_over_p,
                                      last.offdiag_average, result.best_params,
                                      result.record});

    if (have_prev &&
        std::abs(result.best_objective - prev_objective) < opts.tau_depth) {
      sweep.converged = true;
      break;
    }
    have_prev = true;
    prev_objective = result.best_objective;
  }
  return sweep;
}

VerifyReport verify_diagonalization(const DensityMatrix& rho,
                                    const AnsatzParams& params,
                                    double eigenvalue_tol, double offdiag_tol) {
  VerifyReport report;
  report.eigenvalue_tol = eigenvalue_tol;
  report.offdiag_tol = offdiag_tol;

  const DensityMatrix evolved = evolve(rho, build_circuit(params));
  const std::size_t dim = rho.dim();
  report.evolved_diagonal_sorted.resize(dim);
  for (std::size_t i = 0; i < dim; ++i)
    report.evolved_diagonal_sorted[i] = evolved.matrix()(i, i).real();
  std::sort(report.evolved_diagonal_sorted.begin(),
            report.evolved_diagonal_sorted.end());

  report.exact_eigenvalues = eigh(rho.matrix()).eigenvalues;

  double gap = 0.0;
  for (std::size_t i = 0; i < dim; ++i)
    gap = std::max(gap, std::abs(report.evolved_diagonal_sorted[i] -
                                 report.exact_eigenvalues[i]));
  report.eigenvalue_gap = gap;
  report.offdiag_average = off_diagonal_average(evolved);
  report.purity_gap =
      purity(rho) - global_objective(basis_probabilities(evolved));
  report.pass = report.eigenvalue_gap <= eigenvalue_tol &&
                report.offdiag_average <= offdiag_tol;
  return report;
}

AnsatzParams universal_params_for_unitary(const ComplexMatrix& u) {
  if (!u.square()) throw std::invalid_argument("universal_params_for_unitary: non-square");
  const std::size_t dim = u.rows();
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim || n < 1)
    throw std::invalid_argument("universal_params_for_unitary: dimension not 2^n");
  if (u.unitarity_defect() > 1e-8)
    throw std::invalid_argument("universal_params_for_unitary: input not unitary");

  // A unitary is normal, so it shares eigenvectors with any Hermitian
  // combination of its real and imaginary parts; a random combination
  // separates coinciding eigenvalues.
  const ComplexMatrix ud = u.adjoint();
  std::mt19937_64 rng(0x5eed5eed);
  std::uniform_real_distribution<double> coef(0.5, 2.0);
  ComplexMatrix w(dim, dim);
  double defect = 1.0;
  ComplexMatrix m(dim, dim);
  for (int attempt = 0; attempt < 8 && defect > 1e-9; ++attempt) {
    const double c1 = coef(rng), c2 = coef(rng);
    ComplexMatrix a(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const cd re = u(i, j) + std::conj(u(j, i));
        const cd im = cd{0, 1} * (u(i, j) - std::conj(u(j, i)));
        a(i, j) = c1 * re + c2 * im;
      }
    w = eigh(a).eigenvectors;
    m = mul(mul(w.adjoint(), u), w);
    defect = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (i != j) defect = std::max(defect, std::abs(m(i, j)));
  }
  if (defect > 1e-9)
    throw std::runtime_error("universal_params_for_unitary: could not co-diagonalize");

  // u = w diag(e^{i phi}) w^t  =>  generator h = -w diag(phi) w^t
  ComplexMatrix h(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double phi = std::arg(m(k, k));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        h(i, j) -= phi * w(i, k) * std::conj(w(j, k));
  }

  const auto strings = enumerate_pauli_group(n);
  AnsatzParams params{AnsatzDescriptor{AnsatzKind::UniversalPauli, n, 1}, {}};
  params.theta.resize(strings.size());
  const double norm = 1.0 / double(dim);
  for (std::size_t g = 0; g < strings.size(); ++g) {
    const ComplexMatrix pg = pauli_to_matrix(strings[g]);
    cd tr{0.0, 0.0};
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) tr += pg(i, j) * h(j, i);
    params.theta[g] = tr.real() * norm;
  }
  return params;
}

AnsatzParams exact_diagonalizer_params(const DensityMatrix& rho) {
  return universal_params_for_unitary(eigh(rho.matrix()).eigenvectors.adjoint());
}

}  // namespace vqsd
