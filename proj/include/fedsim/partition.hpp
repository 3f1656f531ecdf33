#ifndef FEDSIM_PARTITION_HPP
#define FEDSIM_PARTITION_HPP

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <vector>

#include "fedsim/dataset.hpp"

namespace fedsim {

// Which source examples each client contributed to the shuffle pool.
struct ShufflePlan {
    double p = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> moved_indices;  // per client, ascending

    nlohmann::json to_json() const;
};

// Per class, client proportions are drawn from Dirichlet(alpha * 1_N) and
// examples are assigned without replacement. Re-draws (derived seed) until
// every client is nonempty, capped at 100 attempts.
// `manifest`, when given, receives source indices per client.
FederatedDataset dirichlet_partition(const ExampleList& data, int n_clients, double alpha,
                                     std::uint64_t seed, int num_classes,
                                     std::vector<std::vector<int>>* manifest = nullptr);

// Client i holds exactly the examples of its class(es); classes are assigned
// round-robin by class index when n_clients < num_classes.
FederatedDataset split_by_class(const ExampleList& data, int n_clients, int num_classes,
                                std::vector<std::vector<int>>* manifest = nullptr);

// Each client contributes round(p*n_i) uniformly chosen examples to a pool;
// the pool is permuted and every client receives back the count it
// contributed. Sizes and the global multiset are preserved.
std::pair<FederatedDataset, ShufflePlan> shuffle_real_fraction(const FederatedDataset& fed,
                                                               double p, std::uint64_t seed);

// client id -> example indices manifest
nlohmann::json partition_manifest(const std::vector<std::vector<int>>& assignment,
                                  int num_classes);

}  // namespace fedsim

#endif
