#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "l12glasso/objective.hpp"
#include "l12glasso/rng.hpp"

namespace l12 {

enum class CovKind { identity, ar1_06 };
enum class PerturbKind { uniform, normal };

// Block-module synthetic protocol: q genes split into equal modules, each
// module driven by a disjoint set of s SNPs, coefficients drawn around a
// major gene per module, x ~ N(0,T), y|x ~ N(x'B, E), Theta = (E + B'TB)^-1.
//
// The four covariance regimes map case 1..4 onto (T, E) in
// {identity, ar1(0.6)}^2; t_scale / e_scale multiply them.
//
// The non-major coefficient draw beta_jm = beta_jk + Uniform(-rho, rho) is
// the default; PerturbKind::normal switches to Normal(beta_jk, rho^2).
struct SimulationConfig {
  int n = 0;
  int p = 0;
  int q = 0;
  int module_size = 0;
  int snps_per_module = 0;
  double rho_perturb = 0.1;
  CovKind t_case = CovKind::identity;
  CovKind e_case = CovKind::identity;
  double t_scale = 1.0;
  double e_scale = 1.0;
  std::uint64_t seed = 0;
  PerturbKind perturb = PerturbKind::uniform;

  int module_count() const { return module_size > 0 ? q / module_size : 0; }
  void validate() const;
  static SimulationConfig from_case(int case_index, int n, int p, int q,
                                     int module_size, int snps_per_module,
                                     std::uint64_t seed);
};

struct ModuleStructure {
  std::vector<int> module_of_gene;               // q entries
  std::vector<std::vector<int>> snps_of_module;  // module_count x s, ascending
  std::vector<int> major_gene_of_module;         // module_count entries
};

struct SimulationTruth {
  DenseMatrix B_true;
  SpdMatrix Theta_true;
  SpdMatrix T;
  SpdMatrix E;
  ModuleStructure structure;
};

ModuleStructure generate_structure(const SimulationConfig& cfg, Rng& rng);

// Nonzeros confined to each module's SNP rows and gene columns; major-gene
// entries ~ Uniform(0,1), other genes perturbed copies.
DenseMatrix generate_coefficients(const ModuleStructure& structure,
                                  const SimulationConfig& cfg, Rng& rng);

SpdMatrix covariance_for(CovKind kind, Index dim, double scale);

// (E + B'TB)^{-1} via Cholesky solve.
SpdMatrix generate_theta_true(const DenseMatrix& B_true, const SpdMatrix& T,
                              const SpdMatrix& E);

// Runs the full pipeline with Rng(cfg.seed).
SimulationTruth make_truth(const SimulationConfig& cfg);

// n rows of x ~ N(0,T), y = x'B + e with e ~ N(0,E). Uses an RNG stream
// derived from cfg.seed, so (truth, cfg) fully determine the bytes.
Dataset sample_dataset(const SimulationTruth& truth,
                       const SimulationConfig& cfg);

// Seeds for independent replicates of one configuration: base + index.
std::vector<std::uint64_t> replicate_seeds(std::uint64_t base, int count);

std::string to_string(CovKind kind);
std::string to_string(PerturbKind kind);

}  // namespace l12
