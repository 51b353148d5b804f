#pragma once

#include "evolalg/ideals/ideals.hpp"

namespace evolalg::ideals {

/// A/I with the natural basis formed by the images of the chosen e_i.
struct QuotientPresentation {
    /// Basis indices whose images form the natural basis of A/I, ascending.
    graph::IndexSet chosen;
    EvolutionAlgebra quotient;
    /// (dim A - dim I) x dim A; maps coordinates in A to coordinates in A/I.
    linalg::Matrix projection;
};

/// Chooses basis images greedily by ascending index.
QuotientPresentation quotient(const EvolutionAlgebra& a, const Ideal& ideal);

}  // namespace evolalg::ideals
