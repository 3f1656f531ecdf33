#ifndef FEDSIM_DATASET_HPP
#define FEDSIM_DATASET_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fedsim {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct LabeledExample {
    Vec features;
    int label = 0;
};

using ExampleList = std::vector<LabeledExample>;

struct ClientDataset {
    int client_id = 0;
    ExampleList examples;

    int size() const { return static_cast<int>(examples.size()); }
};

// N client datasets plus an optional server-held test set. Every example in
// the federation shares feature dimension and label range.
struct FederatedDataset {
    std::vector<ClientDataset> clients;
    ExampleList test_set;
    int num_classes = 0;

    int num_clients() const { return static_cast<int>(clients.size()); }
    int total_examples() const;
    int feature_dim() const;  // d_in of the first example; 0 if empty

    // throws ConsistencyError on broken invariants (empty client, duplicate
    // ids, mixed dimensions, label out of range)
    void validate() const;
};

// per-client class counts; counts[i][c] = #examples of class c on client i
std::vector<std::vector<long long>> class_histogram(const FederatedDataset& fed);
std::vector<long long> global_class_histogram(const FederatedDataset& fed);

// Exact multiset equality over (label, feature bits). Used by conservation
// invariants and the synthetic-pipeline locality audit.
bool same_multiset(const ExampleList& a, const ExampleList& b);

// Union of all client examples, client order then local order.
ExampleList flatten(const FederatedDataset& fed);

// Stable byte-level digest of a dataset, for determinism tests.
std::uint64_t dataset_fingerprint(const FederatedDataset& fed);

// Keep k examples of every class, chosen uniformly per class.
ExampleList subsample_per_class(const ExampleList& data, int per_class,
                                int num_classes, std::uint64_t seed);

}  // namespace fedsim

#endif
