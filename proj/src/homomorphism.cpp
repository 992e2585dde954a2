#include "kernatom/homomorphism.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <utility>

#include "kernatom/errors.hpp"

namespace kernatom {

namespace {

Witness pair_witness(Element x, Element y) {
    return {{"x", std::to_string(x)}, {"y", std::to_string(y)}};
}

// First (x, y) in lexicographic order with f(xy) != f(x) f(y).
std::optional<std::pair<Element, Element>> first_violation(const FiniteGroup& g, const FiniteGroup& h,
                                                           const std::vector<Element>& map) {
    const auto n = static_cast<Element>(g.order());
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (map[g.op(x, y)] != h.op(map[x], map[y])) return std::make_pair(x, y);
    return std::nullopt;
}

void check_map_shape(const FiniteGroup& domain, const FiniteGroup& codomain, const std::vector<Element>& map) {
    if (map.size() != domain.order())
        throw DimensionMismatch("map length differs from domain order",
                                {{"length", std::to_string(map.size())},
                                 {"order", std::to_string(domain.order())}});
    for (std::size_t x = 0; x < map.size(); ++x)
        if (map[x] >= codomain.order())
            throw IndexOutOfRange("map value outside the codomain",
                                  {{"x", std::to_string(x)}, {"value", std::to_string(map[x])}});
}

// Extends generator images along the spanning tree of the domain.
std::vector<Element> extend_along_tree(const FiniteGroup& domain, const FiniteGroup& codomain,
                                       const std::vector<Element>& images) {
    const std::size_t n = domain.order();
    std::vector<Element> map(n, kNoElement);
    map[kIdentity] = kIdentity;
    std::vector<Element> chain;
    for (Element g = 0; g < n; ++g) {
        Element x = g;
        while (map[x] == kNoElement) {
            chain.push_back(x);
            x = domain.tree_parent(x);
        }
        while (!chain.empty()) {
            Element c = chain.back();
            chain.pop_back();
            map[c] = codomain.op(images[domain.tree_generator(c)], map[domain.tree_parent(c)]);
        }
    }
    return map;
}

}  // namespace

void require_theorem_ready(const FiniteGroup& group, const Limits& limits) {
    if (group.associativity_sampled() && !limits.allow_sampled)
        throw SampledAxioms("group associativity was only sampled; pass allow_sampled to proceed",
                            {{"order", std::to_string(group.order())}});
}

void require_theorem_ready(const Homomorphism& f, const Limits& limits) {
    if (!f.validated()) throw Unvalidated("homomorphism was not exhaustively validated");
    require_theorem_ready(f.domain(), limits);
    require_theorem_ready(f.codomain(), limits);
}

Homomorphism hom_from_table(const FiniteGroup& domain, const FiniteGroup& codomain, std::vector<Element> map,
                            const Limits& limits, Validation mode) {
    check_map_shape(domain, codomain, map);
    if (mode == Validation::sampled) {
        std::mt19937_64 rng(limits.seed);
        std::uniform_int_distribution<Element> pick(0, static_cast<Element>(domain.order() - 1));
        if (map[kIdentity] != kIdentity)
            throw NotAHomomorphism("identity not mapped to identity", pair_witness(0, 0));
        for (std::size_t i = 0; i < limits.associativity_samples; ++i) {
            Element x = pick(rng), y = pick(rng);
            if (map[domain.op(x, y)] != codomain.op(map[x], map[y]))
                throw NotAHomomorphism("f(xy) != f(x)f(y)", pair_witness(x, y));
        }
        return Homomorphism(domain, codomain, std::move(map), false);
    }
    if (domain.order() > limits.max_validate)
        throw ValidationCapExceeded("domain order exceeds the validation cap",
                                    {{"order", std::to_string(domain.order())},
                                     {"cap", std::to_string(limits.max_validate)}});
    if (auto bad = first_violation(domain, codomain, map))
        throw NotAHomomorphism("f(xy) != f(x)f(y)", pair_witness(bad->first, bad->second));
    if (map[kIdentity] != kIdentity)
        throw InternalCheckFailed("identity not mapped to identity after validation");
    return Homomorphism(domain, codomain, std::move(map), true);
}

Homomorphism hom_from_generator_images(const FiniteGroup& domain, const FiniteGroup& codomain,
                                       const std::vector<Element>& images, const Limits& limits) {
    if (images.size() != domain.generators().size())
        throw DimensionMismatch("one image per generator required",
                                {{"images", std::to_string(images.size())},
                                 {"generators", std::to_string(domain.generators().size())}});
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] >= codomain.order())
            throw IndexOutOfRange("generator image outside the codomain",
                                  {{"generator", std::to_string(i)}, {"value", std::to_string(images[i])}});
    return hom_from_table(domain, codomain, extend_along_tree(domain, codomain, images), limits);
}

Subgroup kernel(const Homomorphism& f) {
    std::vector<Element> members;
    for (std::size_t x = 0; x < f.map().size(); ++x)
        if (f.map()[x] == kIdentity) members.push_back(static_cast<Element>(x));
    return make_subgroup(f.domain(), std::move(members));
}

Subgroup image(const Homomorphism& f) {
    return make_subgroup(f.codomain(), f.map());
}

std::vector<Element> fiber(const Homomorphism& f, Element h) {
    std::vector<Element> out;
    for (std::size_t x = 0; x < f.map().size(); ++x)
        if (f.map()[x] == h) out.push_back(static_cast<Element>(x));
    return out;
}

bool map_is_duplicate_free(const Homomorphism& f) {
    std::vector<Element> sorted = f.map();
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool is_injective(const Homomorphism& f) {
    const bool trivial_kernel = kernel(f).order() == 1;
    if (trivial_kernel != map_is_duplicate_free(f))
        throw InternalCheckFailed("trivial kernel disagrees with pairwise distinctness");
    return trivial_kernel;
}

Element normality_witness(const FiniteGroup& group, const Subgroup& subgroup) {
    const auto n = static_cast<Element>(group.order());
    for (Element g = 0; g < n; ++g) {
        const Element g_inv = group.inv(g);
        for (Element k : subgroup.members())
            if (!subgroup.contains(group.op(group.op(g, k), g_inv))) return g;
    }
    return kNoElement;
}

Quotient quotient_group(const FiniteGroup& group, const Subgroup& normal_subgroup, const Limits& limits) {
    if (!normal_subgroup.parent().same_as(group))
        throw NotASubgroup("subgroup belongs to a different group");
    if (Element g = normality_witness(group, normal_subgroup); g != kNoElement)
        throw NotNormal("gKg^-1 != K", {{"g", std::to_string(g)}, {"g_label", group.label(g)}});

    CosetPartition cosets = left_cosets(group, normal_subgroup);
    const auto& blocks = cosets.blocks();
    const auto& reps = cosets.representatives();
    const std::size_t m = blocks.size();
    CayleyTable table(m, std::vector<Element>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const auto product = static_cast<Element>(cosets.block_of(group.op(reps[a], reps[b])));
            for (Element x : blocks[a])
                for (Element y : blocks[b])
                    if (cosets.block_of(group.op(x, y)) != product)
                        throw InternalCheckFailed("coset product depends on representatives",
                                                  {{"x", std::to_string(x)}, {"y", std::to_string(y)}});
            table[a][b] = product;
        }

    std::vector<std::string> labels;
    labels.reserve(m);
    for (Element r : reps) labels.push_back("[" + group.label(r) + "]");
    FiniteGroup q = from_cayley_table(table, limits).with_labels(std::move(labels));

    std::vector<Element> projection(group.order());
    for (Element g = 0; g < group.order(); ++g) projection[g] = static_cast<Element>(cosets.block_of(g));
    Homomorphism proj = hom_from_table(group, q, std::move(projection), limits);
    return Quotient{std::move(q), std::move(cosets), std::move(proj)};
}

IsomorphismWitness first_isomorphism_witness(const Homomorphism& f, const Limits& limits) {
    require_theorem_ready(f, limits);
    const FiniteGroup& h = f.codomain();
    Quotient quotient = quotient_group(f.domain(), kernel(f), limits);
    Subgroup im = image(f);

    const auto& reps = quotient.cosets.representatives();
    const std::size_t m = reps.size();
    std::vector<Element> forward(m);
    std::vector<Element> backward(h.order(), kNoElement);
    for (std::size_t b = 0; b < m; ++b) {
        forward[b] = f(reps[b]);
        if (!im.contains(forward[b]))
            throw WitnessCheckFailed("block maps outside the image", {{"block", std::to_string(b)}});
        if (backward[forward[b]] != kNoElement)
            throw WitnessCheckFailed("two blocks map to the same image point",
                                     {{"a", std::to_string(backward[forward[b]])}, {"b", std::to_string(b)}});
        backward[forward[b]] = static_cast<Element>(b);
    }
    if (m != im.order())
        throw WitnessCheckFailed("quotient order differs from image order",
                                 {{"quotient", std::to_string(m)}, {"image", std::to_string(im.order())}});
    for (std::size_t b = 0; b < m; ++b)
        if (backward[forward[b]] != b)
            throw WitnessCheckFailed("backward map is not a left inverse", {{"block", std::to_string(b)}});

    const FiniteGroup& q = quotient.group;
    for (Element a = 0; a < m; ++a)
        for (Element b = 0; b < m; ++b)
            if (forward[q.op(a, b)] != h.op(forward[a], forward[b]))
                throw WitnessCheckFailed("forward map does not preserve products",
                                         {{"a", std::to_string(a)}, {"b", std::to_string(b)}});

    return IsomorphismWitness{std::move(quotient), std::move(im), std::move(forward), std::move(backward)};
}

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteGroup& domain, const FiniteGroup& codomain,
                                                  const Limits& limits) {
    const auto& gens = domain.generators();
    const std::size_t k = gens.size();
    const std::size_t base = codomain.order();
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < k; ++i) {
        candidates *= base;
        if (candidates > limits.enumeration_cap)
            throw EnumerationCapExceeded("too many candidate generator assignments",
                                         {{"codomain_order", std::to_string(base)},
                                          {"generators", std::to_string(k)},
                                          {"cap", std::to_string(limits.enumeration_cap)}});
    }
    if (domain.order() > limits.max_validate)
        throw ValidationCapExceeded("domain order exceeds the validation cap",
                                    {{"order", std::to_string(domain.order())}});

    const auto n = static_cast<Element>(domain.order());
    std::set<std::vector<Element>> found;
    std::vector<Element> images(k, kIdentity);
    for (std::uint64_t c = 0; c < candidates; ++c) {
        auto map = extend_along_tree(domain, codomain, images);
        // f(sx) = f(s)f(x) for generators s is necessary; the full pairwise
        // check below decides.
        bool plausible = true;
        for (std::size_t i = 0; i < k && plausible; ++i)
            for (Element x = 0; x < n && plausible; ++x)
                plausible = map[domain.op(gens[i], x)] == codomain.op(images[i], map[x]);
        if (plausible && !first_violation(domain, codomain, map)) found.insert(std::move(map));

        for (std::size_t i = k; i-- > 0;) {
            if (++images[i] < base) break;
            images[i] = 0;
        }
    }

    std::vector<Homomorphism> out;
    out.reserve(found.size());
    for (const auto& map : found) out.push_back(Homomorphism(domain, codomain, map, true));
    return out;
}

}  // namespace kernatom
