#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace evolalg::graph {

/// Union-find with path halving and union by size.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    /// Groups of elements, each ascending, ordered by least element.
    std::vector<std::vector<std::size_t>> groups() {
        std::vector<std::vector<std::size_t>> out;
        std::vector<std::size_t> slot(parent_.size(), parent_.size());
        for (std::size_t x = 0; x < parent_.size(); ++x) {
            const std::size_t r = find(x);
            if (slot[r] == parent_.size()) {
                slot[r] = out.size();
                out.emplace_back();
            }
            out[slot[r]].push_back(x);
        }
        return out;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace evolalg::graph
