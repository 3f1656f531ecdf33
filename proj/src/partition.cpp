#include "fedsim/partition.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>

#include "fedsim/errors.hpp"
#include "fedsim/rng.hpp"

namespace fedsim {

namespace {

int infer_num_classes(const ExampleList& data, int num_classes) {
    if (num_classes > 0) return num_classes;
    int m = 0;
    for (const auto& e : data) m = std::max(m, e.label + 1);
    return m;
}

// largest-remainder apportionment of `total` by weights; ties to lower index
std::vector<int> apportion(const std::vector<double>& weights, int total) {
    const int n = static_cast<int>(weights.size());
    double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
    std::vector<int> out(n, 0);
    if (total == 0) return out;
    if (wsum <= 0.0) {
        // degenerate: spread evenly, earlier indices take the extras
        int base = total / n, extra = total % n;
        for (int i = 0; i < n; ++i) out[i] = base + (i < extra ? 1 : 0);
        return out;
    }
    std::vector<double> frac(n);
    int assigned = 0;
    for (int i = 0; i < n; ++i) {
        const double t = weights[i] / wsum * total;
        out[i] = static_cast<int>(t);
        frac[i] = t - out[i];
        assigned += out[i];
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&frac](int a, int b) { return frac[a] > frac[b]; });
    for (int k = 0; k < total - assigned; ++k) out[order[k]]++;
    return out;
}

std::vector<int> shuffled_indices(int n, Rng& rng) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::uniform_int_distribution<int> pick(0, i);
        std::swap(idx[i], idx[static_cast<std::size_t>(pick(rng))]);
    }
    return idx;
}

}  // namespace

FederatedDataset dirichlet_partition(const ExampleList& data, int n_clients, double alpha,
                                     std::uint64_t seed, int num_classes,
                                     std::vector<std::vector<int>>* manifest) {
    if (alpha <= 0.0) throw ParamError("dirichlet alpha must be > 0");
    if (n_clients < 1) throw ParamError("n_clients must be >= 1");
    if (data.empty()) throw ParamError("cannot partition an empty dataset");
    if (n_clients > static_cast<int>(data.size()))
        throw InfeasibilityError("more clients than examples");

    const int k = infer_num_classes(data, num_classes);
    std::vector<std::vector<int>> by_class(k);
    for (int i = 0; i < static_cast<int>(data.size()); ++i) by_class[data[i].label].push_back(i);

    std::vector<std::vector<int>> assignment;
    for (int attempt = 0; attempt < 100; ++attempt) {
        Rng rng = make_rng(seed, seed_tag::kPartition, static_cast<std::uint64_t>(attempt));
        assignment.assign(n_clients, {});
        for (int c = 0; c < k; ++c) {
            if (by_class[c].empty()) continue;
            std::vector<double> prop(n_clients);
            std::gamma_distribution<double> gamma(alpha, 1.0);
            for (int i = 0; i < n_clients; ++i) prop[i] = gamma(rng);
            const auto counts = apportion(prop, static_cast<int>(by_class[c].size()));
            const auto order = shuffled_indices(static_cast<int>(by_class[c].size()), rng);
            int pos = 0;
            for (int i = 0; i < n_clients; ++i)
                for (int j = 0; j < counts[i]; ++j)
                    assignment[i].push_back(by_class[c][order[pos++]]);
        }
        const bool ok = std::all_of(assignment.begin(), assignment.end(),
                                    [](const auto& a) { return !a.empty(); });
        if (ok) break;
        if (attempt == 99)
            throw InfeasibilityError("dirichlet partition left a client empty after 100 draws");
    }

    FederatedDataset fed;
    fed.num_classes = k;
    fed.clients.resize(n_clients);
    for (int i = 0; i < n_clients; ++i) {
        fed.clients[i].client_id = i;
        for (int idx : assignment[i]) fed.clients[i].examples.push_back(data[idx]);
    }
    if (manifest) *manifest = std::move(assignment);
    return fed;
}

FederatedDataset split_by_class(const ExampleList& data, int n_clients, int num_classes,
                                std::vector<std::vector<int>>* manifest) {
    const int k = infer_num_classes(data, num_classes);
    if (n_clients < 1 || n_clients > k || k % n_clients != 0)
        throw ParamError("n_clients must equal or divide the number of classes");
    std::vector<std::vector<int>> assignment(n_clients);
    for (int i = 0; i < static_cast<int>(data.size()); ++i)
        assignment[data[i].label % n_clients].push_back(i);
    FederatedDataset fed;
    fed.num_classes = k;
    fed.clients.resize(n_clients);
    for (int i = 0; i < n_clients; ++i) {
        if (assignment[i].empty())
            throw InfeasibilityError("client " + std::to_string(i) + " received no examples");
        fed.clients[i].client_id = i;
        for (int idx : assignment[i]) fed.clients[i].examples.push_back(data[idx]);
    }
    if (manifest) *manifest = std::move(assignment);
    return fed;
}

std::pair<FederatedDataset, ShufflePlan> shuffle_real_fraction(const FederatedDataset& fed,
                                                               double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw ParamError("shuffle fraction p must be in [0,1]");
    const int n_clients = fed.num_clients();

    ShufflePlan plan;
    plan.p = p;
    plan.seed = seed;
    plan.moved_indices.resize(n_clients);

    FederatedDataset out = fed;
    // pool entries in client order, contributed indices ascending
    ExampleList pool;
    for (int i = 0; i < n_clients; ++i) {
        const int n_i = fed.clients[i].size();
        const int k = static_cast<int>(round_half_even(p * n_i));
        if (k == 0) continue;
        Rng rng = make_rng(seed, seed_tag::kShuffleContrib, static_cast<std::uint64_t>(i));
        auto order = shuffled_indices(n_i, rng);
        order.resize(k);
        std::sort(order.begin(), order.end());
        plan.moved_indices[i] = order;
        for (int idx : order) pool.push_back(fed.clients[i].examples[idx]);
    }

    if (!pool.empty()) {
        Rng rng = make_rng(seed, seed_tag::kShufflePerm);
        const auto perm = shuffled_indices(static_cast<int>(pool.size()), rng);
        int cursor = 0;
        for (int i = 0; i < n_clients; ++i) {
            for (int slot : plan.moved_indices[i])
                out.clients[i].examples[slot] = pool[perm[cursor++]];
        }
    }
    return {std::move(out), std::move(plan)};
}

nlohmann::json ShufflePlan::to_json() const {
    nlohmann::json j;
    j["p"] = p;
    j["seed"] = seed;
    j["moved_indices"] = moved_indices;
    return j;
}

nlohmann::json partition_manifest(const std::vector<std::vector<int>>& assignment,
                                  int num_classes) {
    nlohmann::json j;
    j["num_classes"] = num_classes;
    nlohmann::json clients = nlohmann::json::array();
    for (std::size_t i = 0; i < assignment.size(); ++i)
        clients.push_back({{"id", i}, {"indices", assignment[i]}});
    j["clients"] = std::move(clients);
    return j;
}

}  // namespace fedsim
