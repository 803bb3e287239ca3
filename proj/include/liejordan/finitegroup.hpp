#pragma once

// Explicit finite groups as Cayley tables, with a brute-force subgroup lattice
// used to evaluate Jordan constants directly from the definition.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace liejordan {

using Element = std::uint32_t;

struct GroupLimits {
    std::size_t max_closure_order = 5000;  // permutation closure and table size
    std::size_t max_jordan_order = 200;    // full subgroup lattice
    std::size_t max_subgroups = 200000;
};

/// Cayley table with identity at index 0.
class FiniteGroup {
public:
    /// Validates Latin-square shape, identity 0, and associativity.
    static FiniteGroup from_table(std::vector<std::vector<Element>> table,
                                  const GroupLimits& limits = {});

    /// Closure of permutations given in one-line notation on {1..degree}.
    /// Product p*q applies p first.
    static FiniteGroup from_permutations(std::size_t degree,
                                         const std::vector<std::vector<std::uint32_t>>& generators,
                                         const GroupLimits& limits = {});

    std::size_t order() const { return order_; }
    Element mul(Element a, Element b) const { return table_[std::size_t{a} * order_ + b]; }
    Element inv(Element a) const { return inverse_[a]; }
    bool is_abelian() const;

private:
    FiniteGroup() = default;
    void fill_inverses();

    std::size_t order_ = 0;
    std::vector<Element> table_;  // row-major
    std::vector<Element> inverse_;
};

/// Parses the "perm <degree>" or "table <n>" text formats. '#' starts a
/// comment line; '/' may stand in for a line break.
FiniteGroup parse_group(std::string_view text, const GroupLimits& limits = {});

class Subgroup {
public:
    /// Closure of `generators` in g.
    static Subgroup generated(const FiniteGroup& g, std::vector<Element> generators);
    static Subgroup whole(const FiniteGroup& g);

    const std::vector<Element>& elements() const { return elements_; }  // sorted
    const std::vector<Element>& generators() const { return generators_; }
    std::size_t size() const { return elements_.size(); }
    bool contains(Element e) const { return (bits_[e / 64] >> (e % 64)) & 1U; }
    bool is_subset_of(const Subgroup& other) const;
    bool is_abelian(const FiniteGroup& g) const;
    /// Invariance under conjugation by the generators of `f`.
    bool is_normal_in(const Subgroup& f, const FiniteGroup& g) const;

    const std::vector<std::uint64_t>& bits() const { return bits_; }
    bool operator==(const Subgroup& o) const { return elements_ == o.elements_; }

private:
    std::vector<Element> elements_;
    std::vector<Element> generators_;
    std::vector<std::uint64_t> bits_;
};

/// Every subgroup of g, smallest first, then lexicographic on element lists.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const GroupLimits& limits = {});

/// Every subgroup of g contained in f, same order.
std::vector<Subgroup> subgroups_within(const FiniteGroup& g, const Subgroup& f,
                                       const GroupLimits& limits = {});

/// min [F:A] over abelian A normal in F.
std::size_t min_normal_abelian_index(const Subgroup& f, const FiniteGroup& g,
                                     const GroupLimits& limits = {});

struct JordanResult {
    std::size_t jordan_constant;
    Subgroup witness;  // first subgroup in lattice order attaining the maximum
};

JordanResult jordan_constant(const FiniteGroup& g, const GroupLimits& limits = {});

/// b_H; for a finite group this is |H|.
std::size_t boundedness_constant(const FiniteGroup& g);

/// h as a standalone group, elements renumbered in sorted order.
FiniteGroup as_group(const FiniteGroup& g, const Subgroup& h);

}  // namespace liejordan
