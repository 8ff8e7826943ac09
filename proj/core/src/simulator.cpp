#include "l12glasso/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace l12 {

namespace {

// Offset separating the sampling stream from the truth-generation stream.
constexpr std::uint64_t kSampleStream = 0x9e3779b97f4a7c15ull;

DenseMatrix standard_normal_rows(Index rows, Index cols, Rng& rng) {
  DenseMatrix Z(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) Z(i, j) = rng.normal();
  }
  return Z;
}

}  // namespace

void SimulationConfig::validate() const {
  if (n < 1 || p < 1 || q < 1) {
    throw ConfigInfeasible("SimulationConfig: n, p, q must be >= 1");
  }
  if (module_size < 1 || q % module_size != 0) {
    throw ConfigInfeasible("SimulationConfig: q must be divisible by module_size");
  }
  if (snps_per_module < 1 || snps_per_module * module_count() > p) {
    throw ConfigInfeasible(
        "SimulationConfig: need snps_per_module * module_count <= p");
  }
  if (rho_perturb < 0.0) {
    throw ConfigInfeasible("SimulationConfig: rho_perturb must be >= 0");
  }
  if (!(t_scale > 0.0) || !(e_scale > 0.0)) {
    throw ConfigInfeasible("SimulationConfig: covariance scales must be > 0");
  }
}

SimulationConfig SimulationConfig::from_case(int case_index, int n, int p,
                                              int q, int module_size,
                                              int snps_per_module,
                                              std::uint64_t seed) {
  SimulationConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.q = q;
  cfg.module_size = module_size;
  cfg.snps_per_module = snps_per_module;
  cfg.seed = seed;
  switch (case_index) {
    case 1: cfg.t_case = CovKind::identity; cfg.e_case = CovKind::identity; break;
    case 2: cfg.t_case = CovKind::ar1_06;   cfg.e_case = CovKind::identity; break;
    case 3: cfg.t_case = CovKind::identity; cfg.e_case = CovKind::ar1_06;   break;
    case 4: cfg.t_case = CovKind::ar1_06;   cfg.e_case = CovKind::ar1_06;   break;
    default: throw ConfigInfeasible("from_case: case must be 1..4");
  }
  return cfg;
}

ModuleStructure generate_structure(const SimulationConfig& cfg, Rng& rng) {
  cfg.validate();
  const int modules = cfg.module_count();

  std::vector<int> genes(cfg.q);
  std::iota(genes.begin(), genes.end(), 0);
  rng.shuffle(genes);

  ModuleStructure st;
  st.module_of_gene.assign(cfg.q, -1);
  for (int i = 0; i < modules; ++i) {
    for (int g = 0; g < cfg.module_size; ++g) {
      st.module_of_gene[genes[i * cfg.module_size + g]] = i;
    }
  }

  std::vector<int> snps(cfg.p);
  std::iota(snps.begin(), snps.end(), 0);
  rng.shuffle(snps);
  st.snps_of_module.resize(modules);
  for (int i = 0; i < modules; ++i) {
    auto first = snps.begin() + i * cfg.snps_per_module;
    st.snps_of_module[i].assign(first, first + cfg.snps_per_module);
    std::sort(st.snps_of_module[i].begin(), st.snps_of_module[i].end());
  }

  st.major_gene_of_module.resize(modules);
  for (int i = 0; i < modules; ++i) {
    std::vector<int> members;
    for (int g = 0; g < cfg.q; ++g) {
      if (st.module_of_gene[g] == i) members.push_back(g);
    }
    st.major_gene_of_module[i] =
        members[static_cast<std::size_t>(rng.below(members.size()))];
  }
  return st;
}

DenseMatrix generate_coefficients(const ModuleStructure& structure,
                                  const SimulationConfig& cfg, Rng& rng) {
  DenseMatrix B = DenseMatrix::Zero(cfg.p, cfg.q);
  const int modules = cfg.module_count();
  for (int i = 0; i < modules; ++i) {
    const int major = structure.major_gene_of_module[i];
    for (int j : structure.snps_of_module[i]) {
      B(j, major) = rng.uniform01();
    }
    for (int m = 0; m < cfg.q; ++m) {
      if (structure.module_of_gene[m] != i || m == major) continue;
      for (int j : structure.snps_of_module[i]) {
        const double base = B(j, major);
        if (cfg.perturb == PerturbKind::uniform) {
          B(j, m) = base + rng.uniform(-cfg.rho_perturb, cfg.rho_perturb);
        } else {
          B(j, m) = base + cfg.rho_perturb * rng.normal();
        }
      }
    }
  }
  return B;
}

SpdMatrix covariance_for(CovKind kind, Index dim, double scale) {
  if (kind == CovKind::identity) {
    return SpdMatrix(scale * DenseMatrix::Identity(dim, dim));
  }
  return SpdMatrix(scale * ar1_covariance(dim, 0.6).matrix());
}

SpdMatrix generate_theta_true(const DenseMatrix& B_true, const SpdMatrix& T,
                              const SpdMatrix& E) {
  if (T.dim() != B_true.rows() || E.dim() != B_true.cols()) {
    throw DimensionMismatch("generate_theta_true: covariance sizes must match B");
  }
  const DenseMatrix cov =
      E.matrix() + B_true.transpose() * T.matrix() * B_true;
  return SpdMatrix(SpdMatrix(cov).inverse());
}

SimulationTruth make_truth(const SimulationConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  ModuleStructure structure = generate_structure(cfg, rng);
  DenseMatrix B = generate_coefficients(structure, cfg, rng);
  SpdMatrix T = covariance_for(cfg.t_case, cfg.p, cfg.t_scale);
  SpdMatrix E = covariance_for(cfg.e_case, cfg.q, cfg.e_scale);
  SpdMatrix theta = generate_theta_true(B, T, E);
  return SimulationTruth{std::move(B), std::move(theta), std::move(T),
                         std::move(E), std::move(structure)};
}

Dataset sample_dataset(const SimulationTruth& truth,
                       const SimulationConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed + kSampleStream);
  const DenseMatrix Lt = truth.T.llt().matrixL();
  const DenseMatrix Le = truth.E.llt().matrixL();
  const DenseMatrix Zx = standard_normal_rows(cfg.n, cfg.p, rng);
  const DenseMatrix Ze = standard_normal_rows(cfg.n, cfg.q, rng);
  Dataset data;
  data.X = Zx * Lt.transpose();
  data.Y = data.X * truth.B_true + Ze * Le.transpose();
  return data;
}

std::vector<std::uint64_t> replicate_seeds(std::uint64_t base, int count) {
  std::vector<std::uint64_t> seeds(count);
  for (int i = 0; i < count; ++i) seeds[i] = base + static_cast<std::uint64_t>(i);
  return seeds;
}

std::string to_string(CovKind kind) {
  return kind == CovKind::identity ? "identity" : "ar1_06";
}

std::string to_string(PerturbKind kind) {
  return kind == PerturbKind::uniform ? "uniform" : "normal";
}

}  // namespace l12
