#pragma once

// Finite groups over dense element indices, subgroups and coset partitions.
//
// Elements of a group of order n are the integers 0..n-1 and the identity is
// always 0. Groups are immutable; copying a FiniteGroup copies a handle to
// shared, read-only data.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kernatom/limits.hpp"

namespace kernatom {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;
using CayleyTable = std::vector<std::vector<Element>>;

inline constexpr Element kIdentity = 0;

enum class Backend { cayley_table, permutation };

namespace detail {
struct GroupData;
}

class FiniteGroup {
public:
    std::size_t order() const noexcept;
    Backend backend() const noexcept;

    // Unchecked multiplication and inversion; indices must be < order().
    Element op(Element g, Element h) const noexcept;
    Element inv(Element g) const noexcept;

    // True when associativity was checked on sampled triples only.
    bool associativity_sampled() const noexcept;

    // Generating set as element indices. For the permutation backend these
    // are the input generators in input order; for Cayley tables a greedy
    // generating set (least element not yet generated, repeatedly).
    const std::vector<Element>& generators() const noexcept;

    // Breadth-first spanning tree over the generators: every non-identity g
    // equals generators()[tree_generator(g)] * tree_parent(g).
    Element tree_parent(Element g) const;
    std::size_t tree_generator(Element g) const;

    // Positions into generators(), leftmost factor first; empty for identity.
    std::vector<std::size_t> generator_word(Element g) const;

    // Permutation backend only.
    std::size_t degree() const noexcept;
    const Permutation& permutation(Element g) const;

    const std::string& label(Element g) const;
    // Copy of this group carrying different display labels.
    FiniteGroup with_labels(std::vector<std::string> labels) const;
    std::size_t element_order(Element g) const;

    // Identity of the underlying data, not isomorphism.
    bool same_as(const FiniteGroup& other) const noexcept { return data_ == other.data_; }

    // Row-major order x order multiplication table (materialized on demand
    // for large permutation groups).
    CayleyTable cayley_table() const;

private:
    explicit FiniteGroup(std::shared_ptr<const detail::GroupData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::GroupData> data_;

    friend FiniteGroup from_cayley_table(const CayleyTable&, const Limits&);
    friend FiniteGroup from_permutation_generators(std::size_t, const std::vector<Permutation>&,
                                                   const Limits&);
    friend FiniteGroup direct_product(const FiniteGroup&, const FiniteGroup&, const Limits&);
};

// Builds a group from its multiplication table. If the identity is not
// element 0 the elements are relabeled by swapping it into position 0.
// Throws NotAGroup naming the violated axiom and a witness.
FiniteGroup from_cayley_table(const CayleyTable& table, const Limits& limits = {});

// Breadth-first closure of the generators starting from the identity; each
// dequeued element is multiplied on the left by every generator in input
// order. Throws NotAPermutation, OrderCapExceeded.
FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                        const Limits& limits = {});

// Pairs (g, h) flattened row-major to g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits = {});

// Catalog entries: cyclic(n), symmetric(n), dihedral(n), klein4, quaternion8.
FiniteGroup catalog(const std::string& name, long parameter = 0, const Limits& limits = {});

// Range-checked multiplication and inversion.
Element group_op(const FiniteGroup& group, Element g, Element h);
Element group_inverse(const FiniteGroup& group, Element g);

class Subgroup {
public:
    const FiniteGroup& parent() const noexcept { return parent_; }
    const std::vector<Element>& members() const noexcept { return members_; }
    std::size_t order() const noexcept { return members_.size(); }
    bool contains(Element g) const noexcept;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
    }

private:
    Subgroup(FiniteGroup parent, std::vector<Element> members)
        : parent_(std::move(parent)), members_(std::move(members)) {}
    FiniteGroup parent_;
    std::vector<Element> members_;

    friend Subgroup make_subgroup(const FiniteGroup&, std::vector<Element>);
};

// Verifies identity membership and closure under product and inverse.
// Throws NotASubgroup with a witness on failure.
Subgroup make_subgroup(const FiniteGroup& group, std::vector<Element> members);

Subgroup subgroup_generated(const FiniteGroup& group, std::span<const Element> seeds);

enum class CosetSide { left, right };

// Partition of a group into cosets of a subgroup, the "atoms" every
// fiber-counting argument in this library reduces to.
class CosetPartition {
public:
    const FiniteGroup& parent() const noexcept { return subgroup_.parent(); }
    const Subgroup& subgroup() const noexcept { return subgroup_; }
    CosetSide side() const noexcept { return side_; }
    const std::vector<std::vector<Element>>& blocks() const noexcept { return blocks_; }
    // Least member of each block.
    const std::vector<Element>& representatives() const noexcept { return representatives_; }
    std::size_t block_of(Element g) const { return block_of_.at(g); }

private:
    CosetPartition(Subgroup subgroup, CosetSide side) : subgroup_(std::move(subgroup)), side_(side) {}
    Subgroup subgroup_;
    CosetSide side_;
    std::vector<std::vector<Element>> blocks_;
    std::vector<Element> representatives_;
    std::vector<std::size_t> block_of_;

    friend CosetPartition left_cosets(const FiniteGroup&, const Subgroup&, CosetSide);
};

// Blocks are listed in ascending order of their least element. Throws
// NotASubgroup if the subgroup does not belong to the group or fails closure.
CosetPartition left_cosets(const FiniteGroup& group, const Subgroup& subgroup,
                           CosetSide side = CosetSide::left);

// Cycle notation, e.g. "(0 1 2)(3 4)"; the identity is "()".
std::string cycle_notation(const Permutation& perm);

}  // namespace kernatom
