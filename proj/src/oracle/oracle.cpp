#include "evolalg/oracle/oracle.hpp"

#include <algorithm>

#include "evolalg/error.hpp"
#include "evolalg/ideals/ideals.hpp"

namespace evolalg::oracle {

namespace {

using linalg::Field;
using linalg::Scalar;
using linalg::Vector;

void require_prime(const Field& field) {
    if (!field.is_prime()) throw ValidationError("brute-force checks need a prime field");
}

// p^n, or max + 1 once it passes max.
std::size_t bounded_power(std::size_t p, std::size_t n, std::size_t max) {
    std::size_t out = 1;
    for (std::size_t k = 0; k < n; ++k) {
        out *= p;
        if (out > max) return max + 1;
    }
    return out;
}

void check_vectors(const Field& field, std::size_t n, const EnumerationBudget& budget) {
    require_prime(field);
    if (bounded_power(field.modulus(), n, budget.max_vectors) > budget.max_vectors) {
        throw BudgetExceeded(std::to_string(field.modulus()) + "^" + std::to_string(n) + " vectors exceed the budget of " +
                             std::to_string(budget.max_vectors));
    }
}

// Number of subspaces of F_p^n via the Gaussian binomials, saturating at max + 1.
std::size_t subspace_count(std::size_t p, std::size_t n, std::size_t max) {
    // g[k] holds the Gaussian binomial [m choose k]_p, built row by row in m.
    std::vector<std::size_t> g{1};
    auto sat_add = [max](std::size_t x, std::size_t y) { return x + y > max ? max + 1 : x + y; };
    auto sat_mul = [max](std::size_t x, std::size_t y) {
        if (x == 0 || y == 0) return std::size_t{0};
        return x > (max + 1) / y ? max + 1 : std::min(x * y, max + 1);
    };
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::size_t> next(m + 1, 1);
        std::size_t pk = 1;
        for (std::size_t k = 1; k < m; ++k) {
            pk = sat_mul(pk, p);
            next[k] = sat_add(g[k - 1], sat_mul(pk, g[k]));
        }
        g = std::move(next);
    }
    std::size_t total = 0;
    for (auto x : g) total = sat_add(total, x);
    return total;
}

bool square_of_product_zero(const EvolutionAlgebra& a, const Subspace& s) {
    const auto basis = s.basis_vectors();
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (std::size_t q = r; q < basis.size(); ++q) {
            if (!linalg::is_zero(a.multiply(basis[r], basis[q]))) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<Vector> enumerate_vectors(const Field& field, std::size_t n, const EnumerationBudget& budget) {
    check_vectors(field, n, budget);
    const std::uint32_t p = field.modulus();
    std::vector<Vector> out;
    std::vector<std::uint32_t> digits(n, 0);
    while (true) {
        Vector v;
        v.reserve(n);
        for (auto d : digits) v.push_back(Scalar::from_integer(field, d));
        out.push_back(std::move(v));
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++digits[k] < p) break;
            digits[k] = 0;
            if (k == 0) return out;
        }
        if (n == 0) return out;
    }
}

std::vector<Subspace> enumerate_subspaces(const Field& field, std::size_t n, const EnumerationBudget& budget) {
    check_vectors(field, n, budget);
    const std::uint32_t p = field.modulus();
    if (subspace_count(p, n, budget.max_subspaces) > budget.max_subspaces) {
        throw BudgetExceeded("number of subspaces exceeds the budget of " + std::to_string(budget.max_subspaces));
    }

    std::vector<Subspace> out;
    // Walk every pivot set (as a bitmask), then every filling of its free slots.
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (std::size_t{1} << c)) pivots.push_back(c);
        }
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            for (std::size_t c = pivots[r] + 1; c < n; ++c) {
                if (!(mask & (std::size_t{1} << c))) slots.emplace_back(r, c);
            }
        }
        std::vector<std::uint32_t> fill(slots.size(), 0);
        while (true) {
            std::vector<Vector> rows(pivots.size(), linalg::zero_vector(field, n));
            for (std::size_t r = 0; r < pivots.size(); ++r) rows[r][pivots[r]] = Scalar::one(field);
            for (std::size_t s = 0; s < slots.size(); ++s) {
                rows[slots[s].first][slots[s].second] = Scalar::from_integer(field, fill[s]);
            }
            out.push_back(Subspace::from_vectors(field, n, rows));
            std::size_t s = 0;
            while (s < fill.size() && ++fill[s] == p) fill[s++] = 0;
            if (s == fill.size()) break;
        }
    }
    return out;
}

std::vector<Subspace> enumerate_ideals(const EvolutionAlgebra& a, const EnumerationBudget& budget) {
    std::vector<Subspace> out;
    for (auto& s : enumerate_subspaces(a.field(), a.dim(), budget)) {
        if (ideals::is_ideal(a, s)) out.push_back(std::move(s));
    }
    return out;
}

bool absorption_oracle(const EvolutionAlgebra& a, const Subspace& ideal, const EnumerationBudget& budget) {
    const auto vectors = enumerate_vectors(a.field(), a.dim(), budget);
    for (const auto& x : vectors) {
        if (ideal.contains(x)) continue;
        bool absorbed = true;
        for (std::size_t i = 0; i < a.dim() && absorbed; ++i) absorbed = ideal.contains(a.multiply(x, a.basis_element(i)));
        if (absorbed) return false;
    }
    return true;
}

Subspace radical_oracle(const EvolutionAlgebra& a, const EnumerationBudget& budget) {
    Subspace out = Subspace::full(a.field(), a.dim());
    for (const auto& ideal : enumerate_ideals(a, budget)) {
        if (absorption_oracle(a, ideal, budget)) out = linalg::intersection(out, ideal);
    }
    return out;
}

bool simple_oracle(const EvolutionAlgebra& a, const EnumerationBudget& budget) {
    bool product_nonzero = false;
    for (std::size_t i = 0; i < a.dim() && !product_nonzero; ++i) {
        for (std::size_t j = 0; j < a.dim() && !product_nonzero; ++j) {
            product_nonzero = !linalg::is_zero(a.multiply(a.basis_element(i), a.basis_element(j)));
        }
    }
    if (!product_nonzero) return false;
    for (const auto& ideal : enumerate_ideals(a, budget)) {
        if (!ideal.is_zero() && !ideal.is_full()) return false;
    }
    return true;
}

ClassicalVerdict classical_checks(const EvolutionAlgebra& a, const EnumerationBudget& budget) {
    ClassicalVerdict out{true, true};
    for (const auto& ideal : enumerate_ideals(a, budget)) {
        if (!ideal.is_zero() && square_of_product_zero(a, ideal)) {
            out.semiprime = false;
            break;
        }
    }
    for (const auto& x : enumerate_vectors(a.field(), a.dim(), budget)) {
        if (linalg::is_zero(x)) continue;
        bool kills = true;
        for (std::size_t i = 0; i < a.dim() && kills; ++i) {
            kills = linalg::is_zero(a.multiply(x, a.multiply(a.basis_element(i), x)));
        }
        if (kills) {
            out.classically_nondegenerate = false;
            break;
        }
    }
    return out;
}

}  // namespace evolalg::oracle
