#include "evolalg/ideals/ideals.hpp"

#include "evolalg/error.hpp"
#include "evolalg/graph/associated_graph.hpp"

namespace evolalg::ideals {

namespace {

void check_length(const EvolutionAlgebra& a, const Vector& x) {
    if (x.size() != a.dim()) throw DimensionError("element length does not match the algebra dimension");
}

bool square_is_zero(const EvolutionAlgebra& a, std::size_t i) { return linalg::is_zero(a.square_of_basis(i)); }

Subspace span_of_squares(const EvolutionAlgebra& a, const graph::IndexSet& indices) {
    std::vector<Vector> vs;
    vs.reserve(indices.size());
    for (auto j : indices) vs.push_back(a.square_of_basis(j));
    return Subspace::from_vectors(a.field(), a.dim(), vs);
}

}  // namespace

Ideal Ideal::from_subspace(const EvolutionAlgebra& a, Subspace carrier) {
    if (!is_ideal(a, carrier)) throw PreconditionError("subspace is not an ideal");
    return Ideal(std::move(carrier));
}

bool is_ideal(const EvolutionAlgebra& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim()) throw DimensionError("subspace does not live in the algebra");
    for (const auto& v : s.basis_vectors()) {
        // e_i v = v_i e_i^2, so only the nonzero coordinates of v matter.
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (v[i].is_zero()) continue;
            if (!s.contains(linalg::scale(v[i], a.square_of_basis(i)))) return false;
        }
    }
    return true;
}

Ideal annihilator(const EvolutionAlgebra& a) {
    graph::IndexSet zero;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (square_is_zero(a, i)) zero.push_back(i);
    }
    return Ideal::from_subspace(a, Subspace::coordinate(a.field(), a.dim(), zero));
}

bool is_nondegenerate(const EvolutionAlgebra& a) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (square_is_zero(a, i)) return false;
    }
    return true;
}

Subspace absorption_preimage(const EvolutionAlgebra& a, const Ideal& ideal) {
    if (ideal.carrier().ambient_dim() != a.dim()) throw DimensionError("ideal does not live in the algebra");
    graph::IndexSet absorbed;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (ideal.carrier().contains(a.square_of_basis(i))) absorbed.push_back(i);
    }
    return Subspace::coordinate(a.field(), a.dim(), absorbed);
}

bool has_absorption_property(const EvolutionAlgebra& a, const Ideal& ideal) {
    return absorption_preimage(a, ideal).is_subspace_of(ideal.carrier());
}

graph::IndexSet radical_indices(const EvolutionAlgebra& a) {
    const graph::AssociatedGraph g(a);
    std::vector<char> in(a.dim());
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (in[i]) continue;
            bool all = true;
            for (auto j : g.successors(i)) {
                if (!in[j]) {
                    all = false;
                    break;
                }
            }
            if (all) {
                in[i] = 1;
                grew = true;
            }
        }
    }
    graph::IndexSet out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (in[i]) out.push_back(i);
    }
    return out;
}

Ideal radical(const EvolutionAlgebra& a) {
    const auto indices = radical_indices(a);
    return Ideal::from_subspace(a, Subspace::coordinate(a.field(), a.dim(), indices));
}

Ideal ideal_generated_by_square(const EvolutionAlgebra& a, std::size_t k) {
    if (k >= a.dim()) throw IndexError("basis index " + std::to_string(k + 1) + " out of range");
    const graph::AssociatedGraph g(a);
    const auto indices = graph::set_union({k}, g.descendents(k));
    return Ideal::from_subspace(a, span_of_squares(a, indices));
}

graph::IndexSet lambda_x(const EvolutionAlgebra& a, const Vector& x) {
    check_length(a, x);
    graph::IndexSet out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!x[i].is_zero() && !square_is_zero(a, i)) out.push_back(i);
    }
    return out;
}

Subspace mu_n(const EvolutionAlgebra& a, const Vector& x, std::size_t n) {
    check_length(a, x);
    if (n == 0) return Subspace::from_vectors(a.field(), a.dim(), std::span<const Vector>(&x, 1));
    const auto lambda = lambda_x(a, x);
    if (n == 1) return span_of_squares(a, lambda);
    const graph::AssociatedGraph g(a);
    graph::IndexSet reached;
    for (auto i : lambda) reached = graph::set_union(reached, g.descendents_m(i, n - 1));
    return span_of_squares(a, reached);
}

Subspace ideal_closure(const EvolutionAlgebra& a, const Vector& x) {
    check_length(a, x);
    Subspace current = Subspace::from_vectors(a.field(), a.dim(), std::span<const Vector>(&x, 1));
    while (true) {
        std::vector<Vector> vs = current.basis_vectors();
        const std::size_t base = vs.size();
        for (std::size_t r = 0; r < base; ++r) {
            for (std::size_t i = 0; i < a.dim(); ++i) vs.push_back(a.multiply(a.basis_element(i), vs[r]));
        }
        Subspace next = Subspace::from_vectors(a.field(), a.dim(), vs);
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

Ideal ideal_generated_by(const EvolutionAlgebra& a, const Vector& x) {
    check_length(a, x);
    const graph::AssociatedGraph g(a);
    graph::IndexSet reached;
    for (auto i : lambda_x(a, x)) reached = graph::set_union(reached, graph::set_union({i}, g.descendents(i)));
    const Subspace closed_form =
        linalg::sum(Subspace::from_vectors(a.field(), a.dim(), std::span<const Vector>(&x, 1)), span_of_squares(a, reached));
    if (!(closed_form == ideal_closure(a, x))) {
        throw InternalError("generated ideal disagrees with the multiplication closure");
    }
    return Ideal::from_subspace(a, closed_form);
}

}  // namespace evolalg::ideals
