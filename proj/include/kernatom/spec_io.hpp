#pragma once

// Reading the JSON spec files consumed by the CLI. Parsing only checks
// shape and types (SpecError, with a JSON pointer to the offending field or
// the line/column of a syntax error); algebraic validation happens when the
// parsed spec is built into library objects.

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kernatom/action.hpp"
#include "kernatom/group.hpp"
#include "kernatom/homomorphism.hpp"
#include "kernatom/linear.hpp"

namespace kernatom::spec {

inline constexpr int kSpecVersion = 1;

struct CayleyGroupSpec {
    CayleyTable table;
};
struct PermutationGroupSpec {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
};
struct CatalogGroupSpec {
    std::string name;
    long parameter = 0;
};
struct ProductGroupSpec;

using GroupSpec = std::variant<CayleyGroupSpec, PermutationGroupSpec, CatalogGroupSpec,
                               std::shared_ptr<const ProductGroupSpec>>;

struct ProductGroupSpec {
    std::vector<GroupSpec> factors;
};

struct HomSpec {
    GroupSpec domain;
    GroupSpec codomain;
    // Exactly one of map (kind "hom") and images (kind "hom-gen") is set.
    std::optional<std::vector<Element>> map;
    std::optional<std::vector<Element>> images;
};

struct ActionSpec {
    GroupSpec group;
    // Empty for kind "natural-action".
    std::optional<std::vector<std::vector<Point>>> table;
    std::size_t set_size = 0;
};

struct LinearSystemSpec {
    Field field = Field::rationals();
    ExactMatrix matrix{Field::rationals(), 1, 1};
    Vector rhs;
    // Optional coefficient tuples for the translation-family check.
    std::vector<Vector> samples;
};

struct QuotientSpec {
    GroupSpec group;
    // Subgroup given by generators (closure taken) or by explicit members.
    std::vector<Element> subgroup_generators;
    std::optional<std::vector<Element>> subgroup_members;
};

using Spec = std::variant<GroupSpec, HomSpec, ActionSpec, LinearSystemSpec, QuotientSpec>;

struct SpecFile {
    std::string path;
    std::string kind;
    Spec spec;
};

// Reads and parses a spec file. Throws SpecError.
SpecFile load_spec_file(const std::filesystem::path& path);

// Parses spec text; relative group references resolve against base_dir.
SpecFile parse_spec_text(const std::string& text, const std::string& path_for_messages,
                         const std::filesystem::path& base_dir);

// Builds the group; algebraic failures (NotAGroup, NotAPermutation, ...)
// propagate.
FiniteGroup build_group(const GroupSpec& spec, const Limits& limits);

std::string describe(const GroupSpec& spec);

}  // namespace kernatom::spec
