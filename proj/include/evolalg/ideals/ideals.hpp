#pragma once

#include <cstddef>

#include "evolalg/algebra/evolution_algebra.hpp"
#include "evolalg/graph/index_set.hpp"
#include "evolalg/linalg/subspace.hpp"

namespace evolalg::ideals {

using algebra::EvolutionAlgebra;
using linalg::Subspace;
using linalg::Vector;

/// A subspace I with IA contained in I. Construction always checks the property.
class Ideal {
public:
    /// Throws PreconditionError when `carrier` is not an ideal of `a`.
    static Ideal from_subspace(const EvolutionAlgebra& a, Subspace carrier);

    const Subspace& carrier() const noexcept { return carrier_; }
    std::size_t dim() const noexcept { return carrier_.dim(); }

    bool operator==(const Ideal& other) const { return carrier_ == other.carrier_; }

private:
    explicit Ideal(Subspace carrier) : carrier_(std::move(carrier)) {}

    Subspace carrier_;
};

/// True iff e_i v lies in s for every basis index i and every basis vector v of s.
bool is_ideal(const EvolutionAlgebra& a, const Subspace& s);

/// span{ e_i : e_i^2 = 0 }.
Ideal annihilator(const EvolutionAlgebra& a);
bool is_nondegenerate(const EvolutionAlgebra& a);

/// { x : xA in I } = span{ e_i : e_i^2 in I }.
Subspace absorption_preimage(const EvolutionAlgebra& a, const Ideal& ideal);
bool has_absorption_property(const EvolutionAlgebra& a, const Ideal& ideal);

/// Basis indices spanning the radical: those from which no path reaches a
/// closed path. Computed as the least fixpoint of S -> { i : D^1(i) in S }.
graph::IndexSet radical_indices(const EvolutionAlgebra& a);
/// Smallest ideal with the absorption property.
Ideal radical(const EvolutionAlgebra& a);

/// Ideal generated by e_k^2: span{ e_j^2 : j = k or j in D(k) }.
Ideal ideal_generated_by_square(const EvolutionAlgebra& a, std::size_t k);

/// { i : x_i != 0 and e_i^2 != 0 }.
graph::IndexSet lambda_x(const EvolutionAlgebra& a, const Vector& x);

/// Image of x under all products of n multiplication operators:
/// span{x} for n = 0, otherwise span{ e_j^2 : j in D^{n-1}(i), i in lambda_x }
/// (with D^0(i) = {i}).
Subspace mu_n(const EvolutionAlgebra& a, const Vector& x, std::size_t n);

/// Ideal generated by x, from the descendent closed form. Cross-checked against
/// ideal_closure; a mismatch throws InternalError.
Ideal ideal_generated_by(const EvolutionAlgebra& a, const Vector& x);

/// Ideal generated by x by repeated multiplication with the basis until stable.
Subspace ideal_closure(const EvolutionAlgebra& a, const Vector& x);

}  // namespace evolalg::ideals
