#pragma once

#include <cstdint>

#include "aec/graph.hpp"

namespace aec {

// Simple d-regular graph via stub pairing with restarts; falls back to a
// circulant when the pairing keeps colliding.  Requires n > d and n*d even.
Graph random_regular(int n, int d, std::uint64_t seed);

// 4-regular base plus random extra edges, keeping e <= 4n-1.  Minimum
// degree stays >= 4.
Graph random_sparse_delta4(int n, std::uint64_t seed);

enum class CorpusKind {
    Regular,        // random d-regular, d in 4..7
    Sparse,         // 4-regular plus random extras
    Ringel,         // Ringel graph of a random planar triangulation
    OnePlanarBase,  // underlying graph of a generated 1-planar drawing
};

const char* corpus_kind_name(CorpusKind k);

// n is interpreted per kind (Ringel uses a triangulation on n vertices,
// giving 3n-4 output vertices).
Graph corpus_graph(CorpusKind kind, int n, std::uint64_t seed);

}  // namespace aec
