#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "wres/common.hpp"

namespace wres {

// Multi-index over at most kMaxDim coordinates; entries beyond dim are zero.
using Mi = std::array<int, kMaxDim>;

inline Mi zero_mi() { return Mi{0, 0, 0, 0}; }

inline Mi unit_mi(int axis) {
    Mi m{0, 0, 0, 0};
    m[static_cast<size_t>(axis)] = 1;
    return m;
}

inline Mi add_mi(const Mi& a, const Mi& b) {
    Mi r;
    for (size_t i = 0; i < kMaxDim; ++i) r[i] = a[i] + b[i];
    return r;
}

int mi_degree(const Mi& a);
double mi_factorial(const Mi& a);

// Graded-lexicographic order: by total degree, then lexicographic.
bool mi_graded_lex_less(const Mi& a, const Mi& b);

// All multi-indices of dimension n with degree <= max_degree, graded-lex.
std::vector<Mi> enumerate_multi_indices(int n, int max_degree);

// Shared coefficient layout for jets of dimension n and order J.
// Also carries the truncated-product pair table so multiplication is a flat
// pass over precomputed (a, b, dst) triples.
struct JetTable {
    int dim = 0;
    int order = 0;
    std::vector<Mi> indices;  // graded-lex

    struct Triple {
        int32_t a, b, dst;
    };
    std::vector<Triple> products;

    int position(const Mi& m) const {
        auto it = lookup_.find(pack(m));
        return it == lookup_.end() ? -1 : it->second;
    }
    size_t size() const { return indices.size(); }

    static uint32_t pack(const Mi& m) {
        uint32_t k = 0;
        for (size_t i = 0; i < kMaxDim; ++i) k |= static_cast<uint32_t>(m[i] & 0xff) << (8 * i);
        return k;
    }

    std::unordered_map<uint32_t, int> lookup_;
};

// Cached, immutable; safe to share across threads.
const JetTable& jet_table(int n, int order);

}  // namespace wres
