#include "evolalg/graph/scc.hpp"

#include <algorithm>
#include <limits>

namespace evolalg::graph {

namespace {

class Tarjan {
public:
    explicit Tarjan(const AssociatedGraph& g)
        : g_(g), index_(g.size(), kUnset), low_(g.size(), 0), on_stack_(g.size(), false) {}

    std::vector<IndexSet> run() {
        for (std::size_t v = 0; v < g_.size(); ++v) {
            if (index_[v] == kUnset) visit(v);
        }
        for (auto& c : components_) std::sort(c.begin(), c.end());
        std::sort(components_.begin(), components_.end());
        return std::move(components_);
    }

private:
    static constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

    // Iterative DFS; frames hold the vertex and the next successor position.
    void visit(std::size_t root) {
        std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
        open(root);
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            const auto& succ = g_.successors(v);
            if (pos < succ.size()) {
                const std::size_t w = succ[pos++];
                if (index_[w] == kUnset) {
                    open(w);
                    frames.emplace_back(w, 0);
                } else if (on_stack_[w]) {
                    low_[v] = std::min(low_[v], index_[w]);
                }
                continue;
            }
            const std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) low_[frames.back().first] = std::min(low_[frames.back().first], low_[done]);
            if (low_[done] == index_[done]) {
                IndexSet comp;
                std::size_t w;
                do {
                    w = stack_.back();
                    stack_.pop_back();
                    on_stack_[w] = false;
                    comp.push_back(w);
                } while (w != done);
                components_.push_back(std::move(comp));
            }
        }
    }

    void open(std::size_t v) {
        index_[v] = low_[v] = counter_++;
        stack_.push_back(v);
        on_stack_[v] = true;
    }

    const AssociatedGraph& g_;
    std::vector<std::size_t> index_;
    std::vector<std::size_t> low_;
    std::vector<bool> on_stack_;
    std::vector<std::size_t> stack_;
    std::vector<IndexSet> components_;
    std::size_t counter_ = 0;
};

}  // namespace

std::vector<IndexSet> strongly_connected_components(const AssociatedGraph& g) { return Tarjan(g).run(); }

}  // namespace evolalg::graph
