#include "fmz/census.hpp"

#include "fmz/random.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace fmz {

namespace {

constexpr std::size_t kChunk = 4096;

struct Bucket {
    Int count;
    OrbitLabel label;
    Freud<Int> sample;
};

using BucketMap = std::map<std::pair<Int, std::string>, Bucket>;

Freud<Int> decode(JordanKind k, long height, std::size_t index) {
    std::vector<Int> v(2 + 2 * kind_dim(k));
    std::size_t base = static_cast<std::size_t>(2 * height + 1);
    for (auto& c : v) {
        c = Int(static_cast<long>(index % base) - height);
        index /= base;
    }
    return Freud<Int>::from_coords(k, v);
}

std::size_t enumeration_size(JordanKind k, long height, std::size_t cap) {
    std::size_t base = static_cast<std::size_t>(2 * height + 1);
    std::size_t total = 1;
    for (int i = 0; i < 2 + 2 * kind_dim(k); ++i) {
        if (total > cap / base + 1) return cap + 1;
        total *= base;
    }
    return total;
}

std::uint64_t chunk_seed(std::uint64_t seed, std::size_t chunk) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (chunk + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void record(BucketMap& m, const Freud<Int>& x) {
    OrbitLabel label = classify_orbit(x);
    Int q = quartic_reduced(x);
    auto [it, inserted] = m.try_emplace({q, label_key(label)}, Bucket{Int(0), label, x});
    it->second.count += 1;
}

}  // namespace

std::string label_key(const OrbitLabel& label) {
    std::string key = variant_name(label.variant);
    switch (label.variant) {
        case OrbitLabel::Variant::Rank0: break;
        case OrbitLabel::Variant::Rank1: key += ":" + label.d1.get_str(); break;
        case OrbitLabel::Variant::Rank2: key += ":" + label.d1.get_str() + ":" + label.m.get_str(); break;
        case OrbitLabel::Variant::Projective: key += ":" + std::to_string(label.epsilon) + ":" + label.k.get_str(); break;
        case OrbitLabel::Variant::Unclassified: {
            const auto& v = label.invariants;
            key += ":" + v.d1.get_str() + ":" + v.d2.get_str() + ":" + v.d3.get_str() + ":" + v.d4.get_str();
            break;
        }
    }
    return key;
}

CensusResult run_census(const CensusOptions& options) {
    if (options.height < 0) throw PreconditionError("census height must be nonnegative");
    if (options.samples == 0 && options.height < 1) throw PreconditionError("exhaustive census needs height >= 1");
    CensusResult result;
    std::size_t total = options.samples > 0 ? options.samples
                                            : enumeration_size(options.kind, options.height, options.max_elements);
    result.requested = total;
    if (total > options.max_elements) {
        result.truncated = true;
        total = options.max_elements;
    }
    std::size_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<BucketMap> partial(chunks);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= chunks) return;
            try {
                std::size_t lo = c * kChunk;
                std::size_t hi = std::min(total, lo + kChunk);
                Rng rng(chunk_seed(options.seed, c));
                for (std::size_t n = lo; n < hi; ++n) {
                    Freud<Int> x = options.samples > 0 ? rng.freud(options.kind, options.height)
                                                       : decode(options.kind, options.height, n);
                    record(partial[c], x);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = chunks;
                return;
            }
        }
    };
    int jobs = std::max(1, options.jobs);
    std::vector<std::thread> threads;
    for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);

    // Chunks merge in index order, so the kept sample is the first one enumerated.
    BucketMap merged;
    for (auto& m : partial) {
        for (auto& [key, b] : m) {
            auto [it, inserted] = merged.try_emplace(key, b);
            if (!inserted) it->second.count += b.count;
        }
    }
    std::map<Int, int> projective_labels;
    for (auto& [key, b] : merged) {
        result.processed += b.count.get_ui();
        Int r = floor_mod(key.first, 4);
        if (r != 0 && r != 1) result.congruence_failures += b.count.get_ui();
        if (b.label.variant == OrbitLabel::Variant::Projective) ++projective_labels[key.first];
        result.records.push_back({key.first, b.label, b.count, b.sample});
    }
    for (const auto& [q, n] : projective_labels) {
        if (n > 1) result.counterexamples.push_back(q);
    }
    return result;
}

}  // namespace fmz
