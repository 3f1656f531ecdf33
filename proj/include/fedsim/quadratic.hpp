#ifndef FEDSIM_QUADRATIC_HPP
#define FEDSIM_QUADRATIC_HPP

#include <cstdint>

#include "fedsim/objective.hpp"

namespace fedsim {

// Distributed least squares f(x) = (1/N) sum_i (1/2n_i) sum_j ||a_ij x - b_ij||^2
// with scalar design matrices a_ij * I_d. Each example is stored in a
// FederatedDataset row as features = [a, b_1..b_d], so the same partition and
// shuffle operations apply to quadratic sample pairs as to labeled data.
class QuadraticProblem final : public Objective {
  public:
    // fed examples must have features [scale, target...]; dim = d_in - 1
    explicit QuadraticProblem(FederatedDataset fed, double sigma_bar2 = 0.0);

    int dim() const override { return dim_; }
    int num_clients() const override { return static_cast<int>(scales_.size()); }
    int client_size(int client) const override {
        return static_cast<int>(scales_[client].size());
    }

    Vec batch_mean_gradient(const Vec& x, int client, std::span<const int> idx) const override;
    double batch_mean_loss(const Vec& x, int client, std::span<const int> idx) const override;
    std::unique_ptr<PoolEval> compile_pool(const ExampleList& pool) const override;
    EvalResult evaluate(const Vec& x, const ExampleList& data) const override;
    EvalResult evaluate_test(const Vec& x) const override;
    bool has_test_set() const override { return false; }

    const FederatedDataset& data() const { return fed_; }

    // Hessian of f_i is hessian_scale_client(i) * I
    double hessian_scale_client(int client) const { return mean_a2_[client]; }
    double hessian_scale_global() const;
    Vec client_optimum(int client) const;

  private:
    FederatedDataset fed_;
    int dim_ = 0;
    std::vector<std::vector<double>> scales_;  // a_ij per client
    std::vector<Mat> targets_;                 // b_ij columns per client
    std::vector<double> mean_a2_;              // (1/n_i) sum_j a^2
    std::vector<Vec> mean_ab_;                 // (1/n_i) sum_j a*b
    std::vector<double> mean_b2_;              // (1/n_i) sum_j ||b||^2
};

// Draws mu_i ~ N(0, zeta2 (i d)^-2 I) and b_ij ~ N(mu_i, sigma2 (i d)^-2 I)
// with a_ij = i (1-based client index); see QuadraticProblem for the layout.
FederatedDataset gen_quadratic_data(int n_clients, int n_per_client, int d, double zeta2,
                                    double sigma2, std::uint64_t seed);

QuadraticProblem gen_quadratic(int n_clients, int n_per_client, int d, double zeta2,
                               double sigma2, std::uint64_t seed);

// Global minimizer by normal equations; residual gradient norm <= 1e-10.
Vec quadratic_optimum(const QuadraticProblem& problem);

}  // namespace fedsim

#endif
