#pragma once

// Homomorphisms between finite groups, their kernels, fibers and images,
// quotient groups, and the explicit isomorphism G/Ker(f) -> Im(f).

#include <cstddef>
#include <vector>

#include "kernatom/group.hpp"
#include "kernatom/limits.hpp"

namespace kernatom {

inline constexpr Element kNoElement = static_cast<Element>(-1);

enum class Validation { exhaustive, sampled };

class Homomorphism {
public:
    const FiniteGroup& domain() const noexcept { return domain_; }
    const FiniteGroup& codomain() const noexcept { return codomain_; }
    const std::vector<Element>& map() const noexcept { return map_; }
    Element operator()(Element g) const { return map_.at(g); }
    // True only after the exhaustive pairwise check.
    bool validated() const noexcept { return validated_; }

private:
    Homomorphism(FiniteGroup domain, FiniteGroup codomain, std::vector<Element> map, bool validated)
        : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)),
          validated_(validated) {}
    FiniteGroup domain_;
    FiniteGroup codomain_;
    std::vector<Element> map_;
    bool validated_;

    friend Homomorphism hom_from_table(const FiniteGroup&, const FiniteGroup&, std::vector<Element>,
                                       const Limits&, Validation);
    friend std::vector<Homomorphism> enumerate_homomorphisms(const FiniteGroup&, const FiniteGroup&,
                                                             const Limits&);
};

// Checks f(xy) = f(x)f(y) on every pair. Throws NotAHomomorphism with the
// lexicographically first violating pair, or ValidationCapExceeded when the
// domain is larger than limits.max_validate (pass Validation::sampled to
// check limits.associativity_samples random pairs instead; the result is then
// not marked validated).
Homomorphism hom_from_table(const FiniteGroup& domain, const FiniteGroup& codomain, std::vector<Element> map,
                            const Limits& limits = {}, Validation mode = Validation::exhaustive);

// Extends one codomain element per domain generator along generator words,
// then validates exhaustively. An inconsistent assignment surfaces as
// NotAHomomorphism.
Homomorphism hom_from_generator_images(const FiniteGroup& domain, const FiniteGroup& codomain,
                                       const std::vector<Element>& images, const Limits& limits = {});

Subgroup kernel(const Homomorphism& f);
Subgroup image(const Homomorphism& f);

// Preimage of h; empty when h is not attained.
std::vector<Element> fiber(const Homomorphism& f, Element h);

// |Ker f| == 1. The pairwise distinctness of the map is computed as well and
// a disagreement throws InternalCheckFailed.
bool is_injective(const Homomorphism& f);

// True iff the map array has no repeated values.
bool map_is_duplicate_free(const Homomorphism& f);

struct Quotient {
    FiniteGroup group;
    CosetPartition cosets;
    Homomorphism projection;
};

// Elements of the quotient are the left-coset blocks in ascending order of
// their least member. Throws NotNormal with the first g (ascending) for which
// gKg^-1 != K.
Quotient quotient_group(const FiniteGroup& group, const Subgroup& normal_subgroup, const Limits& limits = {});

// Index of the first g with gKg^-1 != K, or kNoElement if K is normal.
Element normality_witness(const FiniteGroup& group, const Subgroup& subgroup);

struct IsomorphismWitness {
    Quotient quotient;
    Subgroup image;
    // Quotient element -> codomain element.
    std::vector<Element> forward;
    // Codomain element -> quotient element, kNoElement off the image.
    std::vector<Element> backward;
};

// Builds G/Ker(f), verifies that block -> f(representative) is a bijection
// onto Im(f) that preserves products. Throws WitnessCheckFailed on any
// failure, Unvalidated for unvalidated maps and SampledAxioms for groups with
// sampled associativity unless limits.allow_sampled.
IsomorphismWitness first_isomorphism_witness(const Homomorphism& f, const Limits& limits = {});

// All homomorphisms domain -> codomain, lexicographic by map array. Candidates
// are generator assignments, |codomain|^|generators| of them.
std::vector<Homomorphism> enumerate_homomorphisms(const FiniteGroup& domain, const FiniteGroup& codomain,
                                                  const Limits& limits = {});

// Throws Unvalidated / SampledAxioms when a theorem check may not run on f.
void require_theorem_ready(const Homomorphism& f, const Limits& limits);
void require_theorem_ready(const FiniteGroup& group, const Limits& limits);

}  // namespace kernatom
