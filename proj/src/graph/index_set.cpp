#include "evolalg/graph/index_set.hpp"

#include <algorithm>
#include <iterator>

namespace evolalg::graph {

IndexSet normalized(IndexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool contains(const IndexSet& s, std::size_t i) { return std::binary_search(s.begin(), s.end(), i); }

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool intersects(const IndexSet& a, const IndexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet range(std::size_t n) {
    IndexSet out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    return out;
}

std::string to_display(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(s[k] + 1);
    }
    return out + "}";
}

}  // namespace evolalg::graph
