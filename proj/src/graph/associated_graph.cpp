#include "evolalg/graph/associated_graph.hpp"

#include <algorithm>
#include <deque>

#include "evolalg/error.hpp"
#include "evolalg/graph/disjoint_set.hpp"

namespace evolalg::graph {

AssociatedGraph::AssociatedGraph(const algebra::EvolutionAlgebra& a) : succ_(a.dim()) {
    const auto& m = a.structure();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (!m(j, i).is_zero()) succ_[i].push_back(j);
        }
    }
    close();
}

AssociatedGraph::AssociatedGraph(const std::vector<std::vector<bool>>& adjacency) : succ_(adjacency.size()) {
    const std::size_t n = adjacency.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (adjacency[i].size() != n) throw DimensionError("adjacency matrix must be square");
        for (std::size_t j = 0; j < n; ++j) {
            if (adjacency[i][j]) succ_[i].push_back(j);
        }
    }
    close();
}

void AssociatedGraph::close() {
    const std::size_t n = size();
    desc_.assign(n, {});
    asc_.assign(n, {});
    std::vector<char> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        std::vector<std::size_t> stack(succ_[i].begin(), succ_[i].end());
        for (auto j : stack) seen[j] = 1;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (auto w : succ_[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (seen[j]) {
                desc_[i].push_back(j);
                asc_[j].push_back(i);
            }
        }
    }
}

void AssociatedGraph::check(std::size_t i) const {
    if (i >= size()) throw IndexError("vertex " + std::to_string(i + 1) + " out of range");
}

const IndexSet& AssociatedGraph::successors(std::size_t i) const {
    check(i);
    return succ_[i];
}

IndexSet AssociatedGraph::descendents_m(std::size_t i, std::size_t m) const {
    check(i);
    if (m == 0) throw PreconditionError("path length must be at least 1");
    std::vector<char> frontier(size());
    frontier[i] = 1;
    for (std::size_t step = 0; step < m; ++step) {
        std::vector<char> next(size());
        for (std::size_t v = 0; v < size(); ++v) {
            if (!frontier[v]) continue;
            for (auto w : succ_[v]) next[w] = 1;
        }
        frontier.swap(next);
    }
    IndexSet out;
    for (std::size_t v = 0; v < size(); ++v) {
        if (frontier[v]) out.push_back(v);
    }
    return out;
}

const IndexSet& AssociatedGraph::descendents(std::size_t i) const {
    check(i);
    return desc_[i];
}

const IndexSet& AssociatedGraph::ascendents(std::size_t i) const {
    check(i);
    return asc_[i];
}

bool AssociatedGraph::reaches(std::size_t i, std::size_t j) const {
    check(j);
    return contains(descendents(i), j);
}

bool AssociatedGraph::is_cyclic_index(std::size_t i) const { return reaches(i, i); }

IndexSet AssociatedGraph::cycle_of(std::size_t i) const {
    if (!is_cyclic_index(i)) throw PreconditionError("vertex " + std::to_string(i + 1) + " is not cyclic");
    IndexSet out;
    for (auto j : desc_[i]) {
        if (contains(desc_[j], i)) out.push_back(j);
    }
    return out;
}

bool AssociatedGraph::is_principal_cyclic(std::size_t i) const { return is_subset(ascendents(i), cycle_of(i)); }

std::vector<IndexSet> AssociatedGraph::principal_cycles() const {
    std::vector<IndexSet> out;
    std::vector<char> done(size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (done[i] || !is_cyclic_index(i)) continue;
        IndexSet c = cycle_of(i);
        for (auto j : c) done[j] = 1;
        if (is_principal_cyclic(i)) out.push_back(std::move(c));
    }
    return out;
}

IndexSet AssociatedGraph::chain_start_indices() const {
    IndexSet out;
    std::vector<char> has_in(size());
    for (const auto& s : succ_) {
        for (auto j : s) has_in[j] = 1;
    }
    for (std::size_t i = 0; i < size(); ++i) {
        if (!has_in[i]) out.push_back(i);
    }
    return out;
}

IndexSet AssociatedGraph::sinks() const {
    IndexSet out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (succ_[i].empty()) out.push_back(i);
    }
    return out;
}

std::vector<IndexSet> AssociatedGraph::weak_components() const {
    DisjointSet ds(size());
    for (std::size_t i = 0; i < size(); ++i) {
        for (auto j : succ_[i]) ds.unite(i, j);
    }
    return ds.groups();
}

std::vector<std::vector<bool>> AssociatedGraph::adjacency() const {
    std::vector<std::vector<bool>> out(size(), std::vector<bool>(size(), false));
    for (std::size_t i = 0; i < size(); ++i) {
        for (auto j : succ_[i]) out[i][j] = true;
    }
    return out;
}

std::optional<WitnessPath> witness_path(const algebra::EvolutionAlgebra& a, std::size_t i, std::size_t j) {
    const std::size_t n = a.dim();
    if (i >= n || j >= n) throw IndexError("vertex out of range");
    const auto& m = a.structure();
    // BFS over paths of length >= 1; i itself is not marked so closed paths are found.
    std::vector<std::size_t> parent(n, n);
    std::vector<char> seen(n);
    std::deque<std::size_t> queue;
    auto visit = [&](std::size_t from) {
        for (std::size_t w = 0; w < n; ++w) {
            if (!seen[w] && !m(w, from).is_zero()) {
                seen[w] = 1;
                parent[w] = from;
                queue.push_back(w);
            }
        }
    };
    visit(i);
    while (!queue.empty() && !seen[j]) {
        const std::size_t v = queue.front();
        queue.pop_front();
        visit(v);
    }
    if (!seen[j]) return std::nullopt;

    std::vector<std::size_t> path{j};
    std::size_t v = j;
    do {
        v = parent[v];
        path.push_back(v);
    } while (v != i);
    std::reverse(path.begin(), path.end());

    linalg::Scalar weight = linalg::Scalar::one(a.field());
    for (std::size_t t = 0; t + 1 < path.size(); ++t) weight *= m(path[t + 1], path[t]);
    return WitnessPath{std::move(path), std::move(weight)};
}

}  // namespace evolalg::graph
