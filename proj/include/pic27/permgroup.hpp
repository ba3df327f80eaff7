#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pic27/perm.hpp"

namespace pic27 {

/**
 * PermGroup: a finite permutation group with its element set fully
 * enumerated. Elements are kept in lexicographic order of image
 * sequences, so every derived result is canonical and reproducible.
 *
 * Full enumeration is deliberate: the largest group handled here is
 * W(E6) with 51840 elements, and brute-force element sets keep the
 * centralizer and Sylow logic directly checkable.
 */
class PermGroup {
public:
    static constexpr std::size_t kMaxElements = 1'000'000;

    // Breadth-first product saturation from the generators. Throws
    // resource_error once the element count passes kMaxElements.
    static PermGroup closure(const std::vector<Perm>& generators);

    static PermGroup trivial(int degree);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }

    bool contains(const Perm& p) const;

    // {h g h^-1 : h in G}, sorted. Throws std::domain_error if g is not in G.
    std::vector<Perm> conjugacy_class(const Perm& g) const;

    // {h in G : h g = g h}. Throws std::domain_error if g is not in G.
    PermGroup centralizer(const Perm& g) const;

    /**
     * The set of all elements of 3-power order, certified to be the unique
     * (hence normal) Sylow 3-subgroup: it must be closed under composition
     * and have order equal to the full 3-part of |G|. Throws
     * structure_error when the certification fails, i.e. when the Sylow
     * 3-subgroup is not normal.
     */
    PermGroup sylow3_unique() const;

    // log_3 |G| if G is abelian with every non-identity element of order 3.
    std::optional<int> is_elementary_abelian_3() const;

    // Smallest subgroup containing elems; every element must lie in G.
    PermGroup subgroup_generated(const std::vector<Perm>& elems) const;

    // True iff every conjugate of sub's elements by elements of G stays in sub.
    bool normalizes(const PermGroup& sub) const;

private:
    PermGroup(int degree, std::vector<Perm> generators, std::vector<Perm> sorted_elements)
        : degree_(degree), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {}

    static PermGroup from_element_set(int degree, std::vector<Perm> elements);

    int degree_ = 0;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
};

} // namespace pic27
