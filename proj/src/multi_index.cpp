#include "wres/multi_index.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace wres {

int mi_degree(const Mi& a) {
    int d = 0;
    for (int e : a) d += e;
    return d;
}

double mi_factorial(const Mi& a) {
    double f = 1.0;
    for (int e : a)
        for (int k = 2; k <= e; ++k) f *= k;
    return f;
}

bool mi_graded_lex_less(const Mi& a, const Mi& b) {
    const int da = mi_degree(a), db = mi_degree(b);
    if (da != db) return da < db;
    return a < b;
}

std::vector<Mi> enumerate_multi_indices(int n, int max_degree) {
    if (n < 1 || n > kMaxDim) throw InputError("multi-index dimension out of range");
    if (max_degree < 0) throw InputError("negative multi-index degree");
    std::vector<Mi> out;
    Mi cur = zero_mi();
    // Recursive fill of all tuples with degree <= max_degree, then sort.
    auto rec = [&](auto&& self, int axis, int remaining) -> void {
        if (axis == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[static_cast<size_t>(axis)] = e;
            self(self, axis + 1, remaining - e);
        }
        cur[static_cast<size_t>(axis)] = 0;
    };
    rec(rec, 0, max_degree);
    std::sort(out.begin(), out.end(), mi_graded_lex_less);
    return out;
}

namespace {

JetTable build_table(int n, int order) {
    JetTable t;
    t.dim = n;
    t.order = order;
    t.indices = enumerate_multi_indices(n, order);
    for (size_t i = 0; i < t.indices.size(); ++i)
        t.lookup_[JetTable::pack(t.indices[i])] = static_cast<int>(i);
    for (size_t i = 0; i < t.indices.size(); ++i) {
        for (size_t j = 0; j < t.indices.size(); ++j) {
            const Mi sum = add_mi(t.indices[i], t.indices[j]);
            if (mi_degree(sum) > order) continue;
            t.products.push_back({static_cast<int32_t>(i), static_cast<int32_t>(j),
                                  t.lookup_.at(JetTable::pack(sum))});
        }
    }
    return t;
}

}  // namespace

const JetTable& jet_table(int n, int order) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<JetTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, order}];
    if (!slot) slot = std::make_unique<JetTable>(build_table(n, order));
    return *slot;
}

}  // namespace wres
