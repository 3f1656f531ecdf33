#ifndef FEDSIM_OBJECTIVE_HPP
#define FEDSIM_OBJECTIVE_HPP

#include <memory>
#include <optional>
#include <span>

#include "fedsim/dataset.hpp"
#include "fedsim/rng.hpp"

namespace fedsim {

struct Batch {
    int client = 0;
    std::vector<int> indices;
};

struct EvalResult {
    double loss = 0.0;
    std::optional<double> accuracy;  // classification objectives only
};

// Compiled view of an arbitrary example pool, so per-point estimators do not
// rebuild matrices on every call.
class PoolEval {
  public:
    virtual ~PoolEval() = default;
    virtual Vec mean_gradient(const Vec& x) const = 0;
    virtual double mean_loss(const Vec& x) const = 0;
};

// Uniform contract over the concrete problems: loss, exact gradients per
// client or over the federation, and stochastic gradients with optional
// injected Gaussian noise (per-coordinate variance sigma_bar2 / 784).
class Objective {
  public:
    virtual ~Objective() = default;

    virtual int dim() const = 0;  // d_model
    virtual int num_clients() const = 0;
    virtual int client_size(int client) const = 0;

    // exact mean gradient / loss over a subset of one client's examples
    virtual Vec batch_mean_gradient(const Vec& x, int client, std::span<const int> idx) const = 0;
    virtual double batch_mean_loss(const Vec& x, int client, std::span<const int> idx) const = 0;

    virtual std::unique_ptr<PoolEval> compile_pool(const ExampleList& pool) const = 0;
    virtual EvalResult evaluate(const Vec& x, const ExampleList& data) const = 0;
    virtual EvalResult evaluate_test(const Vec& x) const = 0;  // cached test set
    virtual bool has_test_set() const = 0;

    double sigma_bar2() const { return sigma_bar2_; }

    Vec client_gradient(const Vec& x, int client) const;
    double client_loss(const Vec& x, int client) const;
    // unweighted mean over clients: the gradient of (1/N) sum_i f_i
    Vec global_gradient(const Vec& x) const;
    double global_loss(const Vec& x) const;
    // mean gradient over the pooled multiset (example-uniform)
    Vec pooled_gradient(const Vec& x) const;

    // batch mean gradient plus injected noise when sigma_bar2 > 0
    Vec stochastic_gradient(const Vec& x, const Batch& batch, Rng& rng) const;

  protected:
    // injected noise convention: per-coordinate variance sigma_bar2/784
    static constexpr double kNoiseDim = 784.0;
    double sigma_bar2_ = 0.0;
};

}  // namespace fedsim

#endif
