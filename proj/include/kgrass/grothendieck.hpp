#pragma once

#include <map>
#include <string>
#include <vector>

#include "kgrass/partition.hpp"

namespace kgrass {

/// Exact-integer multivariate polynomial, keyed by exponent vectors of a
/// fixed variable count. No zero coefficients are stored; overflow aborts
/// via Error instead of wrapping.
class SparsePolynomial {
public:
    using Exponent = std::vector<int>;

    explicit SparsePolynomial(int vars) : vars_(vars) {}

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, long long>& terms() const { return terms_; }

    void add_term(const Exponent& e, long long c);

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;

    bool operator==(const SparsePolynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    /// Invariance under every adjacent-variable swap.
    bool is_symmetric() const;

    /// Homogeneous component of the given total degree.
    SparsePolynomial component(int degree) const;
    int lowest_degree() const; // -1 for the zero polynomial

    std::string to_string() const;

private:
    int vars_;
    std::map<Exponent, long long> terms_;
};

/// Grothendieck polynomial g_λ in m variables (zero when length(λ) > m).
SparsePolynomial expand_g(const Partition& lambda, int m);

/// Schur polynomial s_λ in m variables.
SparsePolynomial expand_s(const Partition& lambda, int m);

/// Unique expansion p = Σ a_ν g_ν(m vars) by triangular elimination on the
/// lex-greatest monomial of lowest remaining degree.
std::map<Partition, long long> to_g_basis(const SparsePolynomial& p);

struct GBasisExpansion {
    Partition lambda, mu;
    AmbientBox box;
    std::map<Partition, long long> coeffs;
};

/// Buch's rule: c'(ν) = (-1)^{|ν|-|λ|-|μ|} · #(tableaux of content ν).
GBasisExpansion buch_product(const Partition& lambda, const Partition& mu,
                             const AmbientBox& box);

/// Degree-preserving part with signs dropped: the classical LR numbers.
std::map<Partition, long long> lr_product(const Partition& lambda, const Partition& mu,
                                          const AmbientBox& box);

} // namespace kgrass
