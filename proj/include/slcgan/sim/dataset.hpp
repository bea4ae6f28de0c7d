#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "slcgan/core/binio.hpp"
#include "slcgan/core/hash.hpp"
#include "slcgan/core/parallel.hpp"
#include "slcgan/core/rng.hpp"
#include "slcgan/core/tensor.hpp"
#include "slcgan/sim/clutter.hpp"

namespace slcgan {

// A labeled sample set held in memory: x is (N, 512), labels are 0/1/2.
struct Dataset {
    Tensor<float> x;
    std::vector<std::uint8_t> labels;

    std::int64_t size() const { return static_cast<std::int64_t>(labels.size()); }

    std::array<std::int64_t, kNumClasses> class_counts() const {
        std::array<std::int64_t, kNumClasses> c{0, 0, 0};
        for (auto l : labels) c.at(l)++;
        return c;
    }

    SpectrumSample sample(std::int64_t i) const {
        SpectrumSample s;
        s.bins.assign(x.ptr() + i * kSpectrumBins, x.ptr() + (i + 1) * kSpectrumBins);
        s.label = static_cast<ClassLabel>(labels[static_cast<std::size_t>(i)]);
        return s;
    }

    void append(const SpectrumSample& s) {
        if (s.bins.size() != kSpectrumBins)
            throw std::invalid_argument("Dataset::append: wrong sample length");
        x.data.insert(x.data.end(), s.bins.begin(), s.bins.end());
        labels.push_back(static_cast<std::uint8_t>(s.label));
        x.shape = {size(), kSpectrumBins};
    }

    std::uint64_t content_hash() const {
        std::uint64_t h = fnv1a64_span(x.ptr(), static_cast<std::size_t>(x.numel()));
        return fnv1a64_span(labels.data(), labels.size(), h);
    }
};

struct DatasetManifest {
    std::array<std::int64_t, kNumClasses> train_counts{};
    std::array<std::int64_t, kNumClasses> test_counts{};
    double split = 0.7;
    std::uint64_t seed = 0;
    std::string config_hash;
    nlohmann::json config;
    std::string train_path;
    std::string test_path;
};

inline void to_json(nlohmann::json& j, const DatasetManifest& m) {
    j = nlohmann::json{{"train_counts", m.train_counts}, {"test_counts", m.test_counts},
                       {"split", m.split},               {"seed", m.seed},
                       {"config_hash", m.config_hash},   {"config", m.config},
                       {"train_path", m.train_path},     {"test_path", m.test_path}};
}

inline void from_json(const nlohmann::json& j, DatasetManifest& m) {
    j.at("train_counts").get_to(m.train_counts);
    j.at("test_counts").get_to(m.test_counts);
    j.at("split").get_to(m.split);
    j.at("seed").get_to(m.seed);
    j.at("config_hash").get_to(m.config_hash);
    m.config = j.value("config", nlohmann::json::object());
    m.train_path = j.value("train_path", "train");
    m.test_path = j.value("test_path", "test");
}

// Build the balanced per-class set and carve the train/test split. Each
// sample draws from its own forked stream, so generation order (or worker
// count) cannot change the bytes.
inline std::tuple<Dataset, Dataset, DatasetManifest> build_dataset(std::int64_t per_class_total,
                                                                   double split,
                                                                   const SimConfig& config,
                                                                   std::uint64_t seed) {
    if (per_class_total <= 0) throw std::invalid_argument("build_dataset: counts must be positive");
    if (!(split > 0.0 && split < 1.0)) throw std::invalid_argument("build_dataset: split in (0,1)");
    config.validate();

    const auto n_train = static_cast<std::int64_t>(std::floor(split * static_cast<double>(per_class_total)));
    if (n_train <= 0 || n_train >= per_class_total)
        throw std::invalid_argument("build_dataset: split leaves an empty train or test set");

    const Rng master(seed);
    std::vector<std::vector<float>> all(static_cast<std::size_t>(kNumClasses * per_class_total));
    parallel_for(0, kNumClasses * per_class_total, [&](std::int64_t g) {
        Rng stream = master.fork(static_cast<std::uint64_t>(g));
        const auto c = static_cast<ClassLabel>(g / per_class_total);
        all[static_cast<std::size_t>(g)] = draw_sample(c, config, stream).bins;
    });

    Dataset train, test;
    for (int c = 0; c < kNumClasses; ++c) {
        std::vector<std::int64_t> idx(static_cast<std::size_t>(per_class_total));
        std::iota(idx.begin(), idx.end(), c * per_class_total);
        Rng shuffler = master.fork(0x5eed0000ull + static_cast<std::uint64_t>(c));
        shuffler.shuffle(idx.begin(), idx.end());
        for (std::int64_t i = 0; i < per_class_total; ++i) {
            SpectrumSample s{all[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])],
                             static_cast<ClassLabel>(c)};
            (i < n_train ? train : test).append(s);
        }
    }

    DatasetManifest m;
    m.train_counts = train.class_counts();
    m.test_counts = test.class_counts();
    m.split = split;
    m.seed = seed;
    m.config = config;
    m.config_hash = sim_config_hash(config);
    return {std::move(train), std::move(test), std::move(m)};
}

// Table of deficient-dataset plans, as fractions of the available per-class
// training counts: NO.1-3 are imbalanced (one class at 20%), NO.4-6 are
// uniformly scarce (50% / 30% / 20%).
struct SubsetPlan {
    int id = 0;  // 1..6
    std::array<double, kNumClasses> fractions{1.0, 1.0, 1.0};
};

inline SubsetPlan subset_plan(int id) {
    switch (id) {
        case 1: return {1, {1.0, 1.0, 0.2}};
        case 2: return {2, {1.0, 0.2, 1.0}};
        case 3: return {3, {0.2, 1.0, 1.0}};
        case 4: return {4, {0.5, 0.5, 0.5}};
        case 5: return {5, {0.3, 0.3, 0.3}};
        case 6: return {6, {0.2, 0.2, 0.2}};
        default: throw std::invalid_argument("subset_plan: id must be 1..6");
    }
}

inline SubsetPlan parse_plan(const std::string& s) {
    std::string t = s;
    if (t.rfind("NO.", 0) == 0 || t.rfind("no.", 0) == 0) t = t.substr(3);
    try {
        return subset_plan(std::stoi(t));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad plan spec: " + s + " (expected NO.1..NO.6)");
    }
}

inline std::array<std::int64_t, kNumClasses> plan_counts(
    const SubsetPlan& plan, const std::array<std::int64_t, kNumClasses>& available) {
    std::array<std::int64_t, kNumClasses> out{};
    for (int c = 0; c < kNumClasses; ++c)
        out[static_cast<std::size_t>(c)] = static_cast<std::int64_t>(
            std::llround(plan.fractions[static_cast<std::size_t>(c)] *
                         static_cast<double>(available[static_cast<std::size_t>(c)])));
    return out;
}

// First-k-after-seeded-shuffle selection per class. The test set is never
// touched by subsetting.
inline Dataset subset_training(const Dataset& train,
                               const std::array<std::int64_t, kNumClasses>& counts,
                               std::uint64_t seed) {
    const auto avail = train.class_counts();
    for (int c = 0; c < kNumClasses; ++c) {
        if (counts[static_cast<std::size_t>(c)] < 0 ||
            counts[static_cast<std::size_t>(c)] > avail[static_cast<std::size_t>(c)])
            throw std::invalid_argument("subset_training: plan exceeds available samples");
    }
    Rng rng(seed);
    Dataset out;
    for (int c = 0; c < kNumClasses; ++c) {
        std::vector<std::int64_t> idx;
        for (std::int64_t i = 0; i < train.size(); ++i)
            if (train.labels[static_cast<std::size_t>(i)] == c) idx.push_back(i);
        Rng stream = rng.fork(static_cast<std::uint64_t>(c));
        stream.shuffle(idx.begin(), idx.end());
        for (std::int64_t i = 0; i < counts[static_cast<std::size_t>(c)]; ++i)
            out.append(train.sample(idx[static_cast<std::size_t>(i)]));
    }
    return out;
}

// --- on-disk layout -------------------------------------------------------
// A sample-set directory holds samples.f32le (row-major N x 512), labels.u8
// and a small manifest.json; `dataset gen` writes train/ and test/ set
// directories plus the split-level manifest.json beside them.

inline void save_sample_set(const std::filesystem::path& dir, const Dataset& ds,
                            const nlohmann::json& extra = {}) {
    std::filesystem::create_directories(dir);
    write_f32le(dir / "samples.f32le", ds.x.ptr(), static_cast<std::size_t>(ds.x.numel()));
    write_file_bytes(dir / "labels.u8", ds.labels.data(), ds.labels.size());
    nlohmann::json j{{"n", ds.size()}, {"bins", kSpectrumBins}, {"class_counts", ds.class_counts()}};
    if (!extra.is_null())
        for (auto& [k, v] : extra.items()) j[k] = v;
    write_text(dir / "manifest.json", j.dump(2) + "\n");
}

inline Dataset load_sample_set(const std::filesystem::path& dir) {
    Dataset ds;
    auto floats = read_f32le(dir / "samples.f32le");
    auto labels = read_file_bytes(dir / "labels.u8");
    if (floats.size() != labels.size() * kSpectrumBins)
        throw std::runtime_error("sample set size mismatch in " + dir.string());
    ds.x.shape = {static_cast<std::int64_t>(labels.size()), kSpectrumBins};
    ds.x.data = std::move(floats);
    ds.labels.assign(labels.begin(), labels.end());
    for (auto l : ds.labels)
        if (l >= kNumClasses) throw std::runtime_error("bad label byte in " + dir.string());
    return ds;
}

inline void save_split_dataset(const std::filesystem::path& root, const Dataset& train,
                               const Dataset& test, DatasetManifest manifest) {
    manifest.train_path = "train";
    manifest.test_path = "test";
    std::filesystem::create_directories(root);
    const nlohmann::json extra{{"seed", manifest.seed}, {"config_hash", manifest.config_hash}};
    save_sample_set(root / manifest.train_path, train, extra);
    save_sample_set(root / manifest.test_path, test, extra);
    nlohmann::json j = manifest;
    write_text(root / "manifest.json", j.dump(2) + "\n");
}

inline DatasetManifest load_manifest(const std::filesystem::path& root) {
    return nlohmann::json::parse(read_text(root / "manifest.json")).get<DatasetManifest>();
}

}  // namespace slcgan
