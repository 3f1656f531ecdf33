#include "fedsim/dataset.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "fedsim/errors.hpp"
#include "fedsim/rng.hpp"

namespace fedsim {

int FederatedDataset::total_examples() const {
    int n = 0;
    for (const auto& c : clients) n += c.size();
    return n;
}

int FederatedDataset::feature_dim() const {
    for (const auto& c : clients)
        if (!c.examples.empty()) return static_cast<int>(c.examples[0].features.size());
    return 0;
}

void FederatedDataset::validate() const {
    if (clients.empty()) throw ConsistencyError("federated dataset has no clients");
    const int d = feature_dim();
    std::vector<bool> seen(clients.size(), false);
    for (const auto& c : clients) {
        if (c.client_id < 0 || c.client_id >= num_clients())
            throw ConsistencyError("client id out of range: " + std::to_string(c.client_id));
        if (seen[c.client_id]) throw ConsistencyError("duplicate client id");
        seen[c.client_id] = true;
        if (c.examples.empty())
            throw ConsistencyError("client " + std::to_string(c.client_id) + " is empty");
        for (const auto& e : c.examples) {
            if (e.features.size() != d) throw ConsistencyError("mixed feature dimensions");
            if (e.label < 0 || e.label >= num_classes)
                throw ConsistencyError("label out of range");
        }
    }
    for (const auto& e : test_set) {
        if (e.features.size() != d) throw ConsistencyError("test set dimension mismatch");
        if (e.label < 0 || e.label >= num_classes) throw ConsistencyError("test label out of range");
    }
}

std::vector<std::vector<long long>> class_histogram(const FederatedDataset& fed) {
    std::vector<std::vector<long long>> out(fed.clients.size(),
                                            std::vector<long long>(fed.num_classes, 0));
    for (std::size_t i = 0; i < fed.clients.size(); ++i)
        for (const auto& e : fed.clients[i].examples) out[i][e.label]++;
    return out;
}

std::vector<long long> global_class_histogram(const FederatedDataset& fed) {
    std::vector<long long> out(fed.num_classes, 0);
    for (const auto& c : fed.clients)
        for (const auto& e : c.examples) out[e.label]++;
    return out;
}

namespace {

std::uint64_t example_hash(const LabeledExample& e) {
    // FNV-1a over label + raw feature bytes; doubles compared bit-exactly
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](const void* p, std::size_t n) {
        const auto* b = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 1099511628211ULL;
        }
    };
    feed(&e.label, sizeof(e.label));
    feed(e.features.data(), sizeof(double) * static_cast<std::size_t>(e.features.size()));
    return h;
}

}  // namespace

bool same_multiset(const ExampleList& a, const ExampleList& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::uint64_t> ha(a.size()), hb(b.size());
    for (std::size_t i = 0; i < a.size(); ++i) ha[i] = example_hash(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) hb[i] = example_hash(b[i]);
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    return ha == hb;
}

ExampleList flatten(const FederatedDataset& fed) {
    ExampleList out;
    out.reserve(static_cast<std::size_t>(fed.total_examples()));
    for (const auto& c : fed.clients)
        for (const auto& e : c.examples) out.push_back(e);
    return out;
}

std::uint64_t dataset_fingerprint(const FederatedDataset& fed) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed64 = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    feed64(static_cast<std::uint64_t>(fed.num_classes));
    for (const auto& c : fed.clients) {
        feed64(static_cast<std::uint64_t>(c.client_id));
        for (const auto& e : c.examples) feed64(example_hash(e));
    }
    for (const auto& e : fed.test_set) feed64(example_hash(e));
    return h;
}

ExampleList subsample_per_class(const ExampleList& data, int per_class, int num_classes,
                                std::uint64_t seed) {
    if (per_class < 1) throw ParamError("per_class must be >= 1");
    std::vector<std::vector<int>> by_class(num_classes);
    for (int i = 0; i < static_cast<int>(data.size()); ++i) {
        const int y = data[i].label;
        if (y < 0 || y >= num_classes) throw ConsistencyError("label out of range");
        by_class[y].push_back(i);
    }
    ExampleList out;
    for (int c = 0; c < num_classes; ++c) {
        auto& idx = by_class[c];
        if (static_cast<int>(idx.size()) < per_class)
            throw InfeasibilityError("class " + std::to_string(c) + " has fewer than " +
                                     std::to_string(per_class) + " examples");
        Rng rng = make_rng(seed, seed_tag::kPartition, static_cast<std::uint64_t>(c));
        // partial Fisher-Yates: first per_class entries become the sample
        for (int k = 0; k < per_class; ++k) {
            std::uniform_int_distribution<int> pick(k, static_cast<int>(idx.size()) - 1);
            std::swap(idx[k], idx[pick(rng)]);
        }
        for (int k = 0; k < per_class; ++k) out.push_back(data[idx[k]]);
    }
    return out;
}

}  // namespace fedsim
