#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "evolalg/algebra/evolution_algebra.hpp"
#include "evolalg/graph/index_set.hpp"

namespace fixtures {

using evolalg::algebra::EvolutionAlgebra;
using evolalg::graph::IndexSet;
using evolalg::linalg::Field;
using evolalg::linalg::Scalar;
using evolalg::linalg::Vector;

/// One term coeff * e_k of a basis square, k 1-based.
struct Term {
    std::size_t k;
    long coeff;
};

/// e_i^2 for 1-based i; missing squares are zero.
struct Square {
    std::size_t i;
    std::vector<Term> terms;
};

inline EvolutionAlgebra from_squares(const Field& field, std::size_t n, std::initializer_list<Square> squares) {
    evolalg::linalg::Matrix m(field, n, n);
    for (const auto& sq : squares) {
        for (const auto& t : sq.terms) m(t.k - 1, sq.i - 1) += Scalar::from_integer(field, t.coeff);
    }
    return EvolutionAlgebra(std::move(m));
}

/// 1-based indices to a 0-based IndexSet.
inline IndexSet idx(std::initializer_list<std::size_t> one_based) {
    IndexSet out;
    for (auto i : one_based) out.push_back(i - 1);
    return evolalg::graph::normalized(out);
}

inline std::vector<IndexSet> idxs(std::initializer_list<std::initializer_list<std::size_t>> sets) {
    std::vector<IndexSet> out;
    for (auto s : sets) out.push_back(idx(s));
    return out;
}

/// Adjacency from 1-based edges i -> j.
inline std::vector<std::vector<bool>> edges(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> es) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [i, j] : es) adj[i - 1][j - 1] = true;
    return adj;
}

inline Vector vec(const Field& field, std::initializer_list<long> xs) { return evolalg::linalg::make_vector(field, xs); }

// Worked examples.

// e1^2 = e2 + e3, e2^2 = 0, e3^2 = -2 e4, e4^2 = 5 e3.
inline EvolutionAlgebra first_example(const Field& f = Field::rational()) {
    return from_squares(f, 4, {{1, {{2, 1}, {3, 1}}}, {3, {{4, -2}}}, {4, {{3, 5}}}});
}

// e2^2 = e1 + e3, e4^2 = e3 + e5, e5^2 = e6, e6^2 = e5, e1^2 = e3^2 = 0.
inline EvolutionAlgebra sinks_example(const Field& f = Field::rational()) {
    return from_squares(f, 6, {{2, {{1, 1}, {3, 1}}}, {4, {{3, 1}, {5, 1}}}, {5, {{6, 1}}}, {6, {{5, 1}}}});
}

// Edges 1->2, 1->3, 3->4, 4->3.
inline std::vector<std::vector<bool>> descendent_graph_e() { return edges(4, {{1, 2}, {1, 3}, {3, 4}, {4, 3}}); }
// Edges 1->2, 2->3, 3->4, 4->2.
inline std::vector<std::vector<bool>> descendent_graph_f() { return edges(4, {{1, 2}, {2, 3}, {3, 4}, {4, 2}}); }

inline std::vector<std::vector<bool>> cyclic_graph_e() {
    return edges(4, {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {2, 4}, {3, 1}, {3, 2}});
}
inline std::vector<std::vector<bool>> cyclic_graph_f() {
    return edges(5, {{1, 2}, {2, 5}, {2, 3}, {5, 2}, {5, 3}, {3, 2}, {3, 5}, {4, 3}, {4, 4}});
}
inline std::vector<std::vector<bool>> cyclic_graph_g() {
    return edges(6, {{1, 2}, {2, 6}, {2, 3}, {6, 2}, {6, 3}, {3, 2}, {3, 6}, {3, 4}, {4, 4}, {4, 5}});
}

// e1^2 = e2 + e3, e2^2 = e1 + e2, e3^2 = -e1 - e2.
inline EvolutionAlgebra ideal_example(const Field& f = Field::rational()) {
    return from_squares(f, 3, {{1, {{2, 1}, {3, 1}}}, {2, {{1, 1}, {2, 1}}}, {3, {{1, -1}, {2, -1}}}});
}

// e1^2 = e2, e2^2 = e1, e3^2 = e3.
inline EvolutionAlgebra swap_plus_loop(const Field& f = Field::rational()) {
    return from_squares(f, 3, {{1, {{2, 1}}}, {2, {{1, 1}}}, {3, {{3, 1}}}});
}

// e1^2 = e1, e2^2 = e2.
inline EvolutionAlgebra two_idempotents(const Field& f = Field::rational()) {
    return from_squares(f, 2, {{1, {{1, 1}}}, {2, {{2, 1}}}});
}

// e1^2 = e2^2 = e2.
inline EvolutionAlgebra irreducible_not_simple(const Field& f = Field::rational()) {
    return from_squares(f, 2, {{1, {{2, 1}}}, {2, {{2, 1}}}});
}

// e1^2 = e2^2 = e1, e3^2 = e3 + e5, e4^2 = e5^2 = 0.
inline EvolutionAlgebra degenerate_example(const Field& f = Field::rational()) {
    return from_squares(f, 5, {{1, {{1, 1}}}, {2, {{1, 1}}}, {3, {{3, 1}, {5, 1}}}});
}

// e1^2 = e1 + e2, e2^2 = 0, and the same algebra in the basis f1 = e1 + e2, f2 = e2.
inline EvolutionAlgebra basis_change_b(const Field& f = Field::rational()) {
    return from_squares(f, 2, {{1, {{1, 1}, {2, 1}}}});
}
inline EvolutionAlgebra basis_change_b_prime(const Field& f = Field::rational()) {
    return from_squares(f, 2, {{1, {{1, 1}}}});
}

// e4^2 = e1 + e2, e5^2 = e2, e6^2 = e2 + e5, other squares zero.
inline EvolutionAlgebra acyclic_example(const Field& f = Field::rational()) {
    return from_squares(f, 6, {{4, {{1, 1}, {2, 1}}}, {5, {{2, 1}}}, {6, {{2, 1}, {5, 1}}}});
}

// e1^2 = e1, e2^2 = e1.
inline EvolutionAlgebra absorption_fails(const Field& f = Field::rational()) {
    return from_squares(f, 2, {{1, {{1, 1}}}, {2, {{1, 1}}}});
}

// e1^2 = e2, e2^2 = e1 + e2.
inline EvolutionAlgebra fibonacci(const Field& f = Field::rational()) {
    return from_squares(f, 2, {{1, {{2, 1}}}, {2, {{1, 1}, {2, 1}}}});
}

// e1^2 = e2^2 = e2 + e3, e3^2 = -e2 - e3.
inline EvolutionAlgebra nondegenerate_not_semiprime(const Field& f = Field::rational()) {
    return from_squares(f, 3, {{1, {{2, 1}, {3, 1}}}, {2, {{2, 1}, {3, 1}}}, {3, {{2, -1}, {3, -1}}}});
}

/// Every worked example above that is an algebra.
inline std::vector<EvolutionAlgebra> all_examples(const Field& f) {
    return {first_example(f),         sinks_example(f),        ideal_example(f),       swap_plus_loop(f),
            two_idempotents(f),       irreducible_not_simple(f), degenerate_example(f), basis_change_b(f),
            basis_change_b_prime(f),  acyclic_example(f),      absorption_fails(f),     fibonacci(f),
            nondegenerate_not_semiprime(f),
            evolalg::algebra::algebra_from_graph(f, cyclic_graph_e()),
            evolalg::algebra::algebra_from_graph(f, cyclic_graph_f()),
            evolalg::algebra::algebra_from_graph(f, cyclic_graph_g()),
            evolalg::algebra::algebra_from_graph(f, descendent_graph_e()),
            evolalg::algebra::algebra_from_graph(f, descendent_graph_f())};
}

}  // namespace fixtures
