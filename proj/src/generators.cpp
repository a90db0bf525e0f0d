#include "aec/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "aec/embedding.hpp"
#include "aec/rng.hpp"

namespace aec {

namespace {

bool simple_pairing(int n, int d, DetRng& rng, std::vector<std::pair<int, int>>& out) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
        std::swap(stubs[i], stubs[rng.below(i + 1)]);

    std::set<std::pair<int, int>> seen;
    out.clear();
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v) return false;
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) return false;
        out.emplace_back(u, v);
    }
    return true;
}

Graph circulant(int n, int d) {
    std::vector<std::pair<int, int>> pairs;
    for (int off = 1; off <= d / 2; ++off)
        for (int v = 0; v < n; ++v) pairs.emplace_back(v, (v + off) % n);
    if (d % 2) {
        if (n % 2) throw std::invalid_argument("circulant: odd d needs even n");
        for (int v = 0; v < n / 2; ++v) pairs.emplace_back(v, v + n / 2);
    }
    return Graph::build(n, pairs);
}

}  // namespace

Graph random_regular(int n, int d, std::uint64_t seed) {
    if (n <= d || d < 1) throw std::invalid_argument("random_regular: need n > d >= 1");
    if ((static_cast<long long>(n) * d) % 2)
        throw std::invalid_argument("random_regular: n*d must be even");
    DetRng rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int attempt = 0; attempt < 300; ++attempt)
        if (simple_pairing(n, d, rng, pairs)) return Graph::build(n, pairs);
    return circulant(n, d);
}

Graph random_sparse_delta4(int n, std::uint64_t seed) {
    Graph base = random_regular(n, 4, seed);
    DetRng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::set<std::pair<int, int>> edges;
    for (const EdgeId& e : base.edges()) edges.emplace(e.a, e.b);

    long long cap = 4LL * n - 1;
    int tries = rng.below(n + 1);
    for (int t = 0; t < tries && static_cast<long long>(edges.size()) < cap; ++t) {
        int u = rng.below(n), v = rng.below(n);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        edges.insert(key);
    }
    std::vector<std::pair<int, int>> pairs(edges.begin(), edges.end());
    return Graph::build(n, pairs);
}

const char* corpus_kind_name(CorpusKind k) {
    switch (k) {
        case CorpusKind::Regular: return "regular";
        case CorpusKind::Sparse: return "sparse";
        case CorpusKind::Ringel: return "ringel";
        case CorpusKind::OnePlanarBase: return "oneplanar";
    }
    return "?";
}

Graph corpus_graph(CorpusKind kind, int n, std::uint64_t seed) {
    switch (kind) {
        case CorpusKind::Regular: {
            DetRng rng(seed);
            int d = 4 + rng.below(4);  // 4..7
            if ((static_cast<long long>(n) * d) % 2) d = d == 7 ? 6 : d + 1;
            return random_regular(n, d, seed + 1);
        }
        case CorpusKind::Sparse:
            return random_sparse_delta4(n, seed);
        case CorpusKind::Ringel:
            return ringel_graph(generate_planar_triangulation(std::max(n, 3), seed));
        case CorpusKind::OnePlanarBase:
            return generate_one_planar(std::max(n, 3), seed).base_graph();
    }
    throw std::invalid_argument("corpus_graph: unknown kind");
}

}  // namespace aec
