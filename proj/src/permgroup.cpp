#include "pic27/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "pic27/coverage.hpp"
#include "pic27/errors.hpp"

namespace pic27 {

PermGroup PermGroup::closure(const std::vector<Perm>& generators) {
    PIC27_COVER("permgroup.closure");
    if (generators.empty())
        throw std::invalid_argument("closure: need at least one generator (or use trivial())");
    const int degree = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw std::invalid_argument("closure: generators have mixed degrees");

    std::unordered_set<Perm, PermHash> seen;
    std::deque<Perm> frontier;
    const Perm id = Perm::identity(degree);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Perm p = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& g : generators) {
            Perm q = p * g;
            if (seen.insert(q).second) {
                if (seen.size() > kMaxElements)
                    throw resource_error("closure: group order exceeds element limit");
                frontier.push_back(std::move(q));
            }
        }
    }

    std::vector<Perm> elements(seen.begin(), seen.end());
    std::sort(elements.begin(), elements.end());
    return PermGroup(degree, generators, std::move(elements));
}

PermGroup PermGroup::trivial(int degree) {
    return PermGroup(degree, {}, {Perm::identity(degree)});
}

PermGroup PermGroup::from_element_set(int degree, std::vector<Perm> elements) {
    std::sort(elements.begin(), elements.end());
    std::vector<Perm> gens = elements;
    return PermGroup(degree, std::move(gens), std::move(elements));
}

bool PermGroup::contains(const Perm& p) const {
    if (p.degree() != degree_)
        throw std::invalid_argument("PermGroup: degree mismatch");
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::vector<Perm> PermGroup::conjugacy_class(const Perm& g) const {
    PIC27_COVER("permgroup.conjugacy_class");
    if (!contains(g)) throw std::domain_error("conjugacy_class: element not in group");
    std::unordered_set<Perm, PermHash> cls;
    for (const auto& h : elements_)
        cls.insert(h * g * h.inverse());
    std::vector<Perm> out(cls.begin(), cls.end());
    std::sort(out.begin(), out.end());
    return out;
}

PermGroup PermGroup::centralizer(const Perm& g) const {
    PIC27_COVER("permgroup.centralizer");
    if (!contains(g)) throw std::domain_error("centralizer: element not in group");
    std::vector<Perm> elems;
    for (const auto& h : elements_)
        if (h * g == g * h) elems.push_back(h);
    return from_element_set(degree_, std::move(elems));
}

namespace {

bool is_three_power(long n) {
    while (n % 3 == 0) n /= 3;
    return n == 1;
}

std::size_t three_part(std::size_t n) {
    std::size_t p = 1;
    while (n % 3 == 0) {
        n /= 3;
        p *= 3;
    }
    return p;
}

} // namespace

PermGroup PermGroup::sylow3_unique() const {
    PIC27_COVER("permgroup.sylow3_unique");
    std::vector<Perm> elems;
    for (const auto& g : elements_)
        if (is_three_power(g.order())) elems.push_back(g);

    const std::size_t want = three_part(order());
    if (elems.size() != want)
        throw structure_error("sylow3_unique: 3-elements do not form the full 3-part (no normal Sylow-3)");

    // Closure under composition certifies the set is a subgroup; the 3-part
    // cardinality then makes it the unique Sylow 3-subgroup.
    PermGroup sub = from_element_set(degree_, std::move(elems));
    for (const auto& a : sub.elements_)
        for (const auto& b : sub.elements_)
            if (!sub.contains(a * b))
                throw structure_error("sylow3_unique: 3-elements are not closed under composition");
    return sub;
}

std::optional<int> PermGroup::is_elementary_abelian_3() const {
    PIC27_COVER("permgroup.is_elementary_abelian_3");
    for (const auto& g : elements_) {
        long ord = g.order();
        if (ord != 1 && ord != 3) return std::nullopt;
    }
    for (std::size_t i = 0; i < elements_.size(); ++i)
        for (std::size_t j = i + 1; j < elements_.size(); ++j)
            if (!(elements_[i] * elements_[j] == elements_[j] * elements_[i]))
                return std::nullopt;
    int rank = 0;
    std::size_t n = order();
    while (n > 1) {
        if (n % 3 != 0) return std::nullopt; // cannot happen if the checks above passed
        n /= 3;
        ++rank;
    }
    return rank;
}

PermGroup PermGroup::subgroup_generated(const std::vector<Perm>& elems) const {
    PIC27_COVER("permgroup.subgroup_generated");
    for (const auto& e : elems)
        if (!contains(e)) throw std::domain_error("subgroup_generated: element not in group");
    if (elems.empty()) return trivial(degree_);
    return closure(elems);
}

bool PermGroup::normalizes(const PermGroup& sub) const {
    for (const auto& g : elements_)
        for (const auto& s : sub.elements())
            if (!sub.contains(g * s * g.inverse())) return false;
    return true;
}

} // namespace pic27
