#include "kernatom/group.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>

#include "kernatom/errors.hpp"

namespace kernatom {

namespace {

// Permutation groups above this order compose on demand instead of storing
// the full multiplication table.
constexpr std::size_t kMaterializeCap = 2048;

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto v : p) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

}  // namespace

namespace detail {

struct GroupData {
    std::size_t order = 0;
    Backend backend = Backend::cayley_table;
    std::vector<Element> table;  // order * order, may be empty for large permutation groups
    std::vector<Element> inverse;
    bool sampled = false;
    std::vector<Element> generators;
    std::vector<Element> parent;
    std::vector<std::size_t> tree_gen;
    std::size_t degree = 0;
    std::vector<Permutation> perms;
    std::unordered_map<Permutation, Element, PermutationHash> index;
    std::vector<std::string> labels;

    Element op(Element g, Element h) const {
        if (!table.empty()) return table[static_cast<std::size_t>(g) * order + h];
        const auto& pg = perms[g];
        const auto& ph = perms[h];
        Permutation out(degree);
        for (std::size_t x = 0; x < degree; ++x) out[x] = pg[ph[x]];
        return index.at(out);
    }
};

}  // namespace detail

namespace {

using detail::GroupData;

Witness witness_of(std::initializer_list<std::pair<const char*, std::size_t>> items) {
    Witness w;
    for (const auto& [k, v] : items) w.emplace_back(k, std::to_string(v));
    return w;
}

Witness axiom_witness(const char* axiom, std::initializer_list<std::pair<const char*, std::size_t>> items) {
    Witness w{{"axiom", axiom}};
    for (const auto& [k, v] : items) w.emplace_back(k, std::to_string(v));
    return w;
}

void build_tree(GroupData& d) {
    d.parent.assign(d.order, kIdentity);
    d.tree_gen.assign(d.order, 0);
    std::vector<bool> seen(d.order, false);
    seen[kIdentity] = true;
    std::deque<Element> queue{kIdentity};
    while (!queue.empty()) {
        Element x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < d.generators.size(); ++i) {
            Element child = d.op(d.generators[i], x);
            if (seen[child]) continue;
            seen[child] = true;
            d.parent[child] = x;
            d.tree_gen[child] = i;
            queue.push_back(child);
        }
    }
    auto unreached = std::find(seen.begin(), seen.end(), false);
    if (unreached != seen.end()) {
        throw InternalCheckFailed("generators do not span the group",
                                  witness_of({{"g", static_cast<std::size_t>(unreached - seen.begin())}}));
    }
}

void greedy_generators(GroupData& d) {
    std::vector<bool> generated(d.order, false);
    generated[kIdentity] = true;
    std::vector<Element> members{kIdentity};
    for (Element g = 0; g < d.order; ++g) {
        if (generated[g]) continue;
        d.generators.push_back(g);
        // Close under left multiplication by all generators so far.
        std::deque<Element> queue(members.begin(), members.end());
        while (!queue.empty()) {
            Element x = queue.front();
            queue.pop_front();
            for (Element s : d.generators) {
                Element y = d.op(s, x);
                if (!generated[y]) {
                    generated[y] = true;
                    members.push_back(y);
                    queue.push_back(y);
                }
            }
        }
    }
}

void check_associativity(GroupData& d, const Limits& limits) {
    const auto n = static_cast<Element>(d.order);
    auto fail = [](Element a, Element b, Element c) {
        throw NotAGroup("associativity fails: (ab)c != a(bc)",
                        axiom_witness("associativity", {{"a", a}, {"b", b}, {"c", c}}));
    };
    if (d.order <= limits.associativity_exhaustive_cap) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b) {
                Element ab = d.op(a, b);
                for (Element c = 0; c < n; ++c)
                    if (d.op(ab, c) != d.op(a, d.op(b, c))) fail(a, b, c);
            }
        d.sampled = false;
        return;
    }
    std::mt19937_64 rng(limits.seed);
    std::uniform_int_distribution<Element> pick(0, n - 1);
    for (std::size_t i = 0; i < limits.associativity_samples; ++i) {
        Element a = pick(rng), b = pick(rng), c = pick(rng);
        if (d.op(d.op(a, b), c) != d.op(a, d.op(b, c))) fail(a, b, c);
    }
    d.sampled = true;
}

// Validates and stores a multiplication table whose identity is already 0.
std::shared_ptr<GroupData> table_group(std::vector<Element> flat, std::size_t n, const Limits& limits,
                                       const std::vector<Element>& original_label) {
    auto d = std::make_shared<GroupData>();
    d->order = n;
    d->backend = Backend::cayley_table;
    d->table = std::move(flat);
    d->inverse.assign(n, kIdentity);
    for (Element g = 0; g < n; ++g) {
        bool found = false;
        for (Element h = 0; h < n && !found; ++h) {
            if (d->op(g, h) == kIdentity && d->op(h, g) == kIdentity) {
                d->inverse[g] = h;
                found = true;
            }
        }
        if (!found)
            throw NotAGroup("inverse axiom fails: element has no two-sided inverse",
                            axiom_witness("inverse", {{"g", g}}));
    }
    check_associativity(*d, limits);
    greedy_generators(*d);
    build_tree(*d);
    d->labels.reserve(n);
    for (Element g = 0; g < n; ++g) d->labels.push_back(std::to_string(original_label[g]));
    return d;
}

// n!, or SIZE_MAX once it no longer fits.
std::size_t factorial_saturating(long n) {
    std::size_t f = 1;
    for (long i = 2; i <= n; ++i) {
        if (f > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(i))
            return std::numeric_limits<std::size_t>::max();
        f *= static_cast<std::size_t>(i);
    }
    return f;
}

}  // namespace

std::size_t FiniteGroup::order() const noexcept { return data_->order; }
Backend FiniteGroup::backend() const noexcept { return data_->backend; }
Element FiniteGroup::op(Element g, Element h) const noexcept { return data_->op(g, h); }
Element FiniteGroup::inv(Element g) const noexcept { return data_->inverse[g]; }
bool FiniteGroup::associativity_sampled() const noexcept { return data_->sampled; }
const std::vector<Element>& FiniteGroup::generators() const noexcept { return data_->generators; }
Element FiniteGroup::tree_parent(Element g) const { return data_->parent.at(g); }
std::size_t FiniteGroup::tree_generator(Element g) const { return data_->tree_gen.at(g); }
std::size_t FiniteGroup::degree() const noexcept { return data_->degree; }

std::vector<std::size_t> FiniteGroup::generator_word(Element g) const {
    std::vector<std::size_t> word;
    while (g != kIdentity) {
        word.push_back(data_->tree_gen.at(g));
        g = data_->parent[g];
    }
    return word;
}

const Permutation& FiniteGroup::permutation(Element g) const {
    if (data_->backend != Backend::permutation)
        throw WrongBackend("group has no permutation representation");
    return data_->perms.at(g);
}

const std::string& FiniteGroup::label(Element g) const { return data_->labels.at(g); }

FiniteGroup FiniteGroup::with_labels(std::vector<std::string> labels) const {
    if (labels.size() != data_->order)
        throw DimensionMismatch("label count differs from group order");
    auto copy = std::make_shared<GroupData>(*data_);
    copy->labels = std::move(labels);
    return FiniteGroup(std::move(copy));
}

std::size_t FiniteGroup::element_order(Element g) const {
    std::size_t k = 1;
    for (Element x = g; x != kIdentity; x = op(g, x)) ++k;
    return k;
}

CayleyTable FiniteGroup::cayley_table() const {
    const auto n = static_cast<Element>(order());
    CayleyTable t(n, std::vector<Element>(n));
    for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h) t[g][h] = op(g, h);
    return t;
}

FiniteGroup from_cayley_table(const CayleyTable& table, const Limits& limits) {
    const std::size_t n = table.size();
    if (n == 0) throw NotAGroup("closure fails: empty table", axiom_witness("closure", {}));
    if (n > limits.max_order)
        throw OrderCapExceeded("table order exceeds the order cap", witness_of({{"order", n}}));
    for (std::size_t r = 0; r < n; ++r) {
        if (table[r].size() != n)
            throw NotAGroup("closure fails: table is not square", axiom_witness("closure", {{"row", r}}));
        for (std::size_t c = 0; c < n; ++c)
            if (table[r][c] >= n)
                throw NotAGroup("closure fails: product outside the element set",
                                axiom_witness("closure", {{"a", r}, {"b", c}, {"ab", table[r][c]}}));
    }

    std::size_t identity = n;
    for (std::size_t e = 0; e < n && identity == n; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
        if (ok) identity = e;
    }
    if (identity == n)
        throw NotAGroup("identity axiom fails: no two-sided identity element", axiom_witness("identity", {}));

    // Swap the identity into slot 0; the relabeling is an involution.
    auto relabel = [identity](std::size_t x) -> Element {
        if (x == identity) return 0;
        if (x == 0) return static_cast<Element>(identity);
        return static_cast<Element>(x);
    };
    std::vector<Element> flat(n * n);
    std::vector<Element> original(n);
    for (std::size_t a = 0; a < n; ++a) {
        original[relabel(a)] = static_cast<Element>(a);
        for (std::size_t b = 0; b < n; ++b) flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
    }
    try {
        return FiniteGroup(table_group(std::move(flat), n, limits, original));
    } catch (const NotAGroup& e) {
        // Report witnesses in the caller's labels.
        Witness w = e.witness();
        for (auto& [key, value] : w)
            if (key != "axiom") value = std::to_string(original.at(std::stoul(value)));
        throw NotAGroup(std::string(e.what()).substr(e.kind().size() + 2), w);
    }
}

FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation>& generators,
                                        const Limits& limits) {
    if (degree == 0) throw NotAPermutation("degree must be positive");
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& p = generators[i];
        if (p.size() != degree)
            throw NotAPermutation("generator length differs from degree",
                                  witness_of({{"generator", i}, {"length", p.size()}}));
        std::vector<bool> hit(degree, false);
        for (std::size_t x = 0; x < degree; ++x) {
            if (p[x] >= degree)
                throw NotAPermutation("image outside 0..degree-1",
                                      witness_of({{"generator", i}, {"point", x}, {"image", p[x]}}));
            if (hit[p[x]])
                throw NotAPermutation("repeated image",
                                      witness_of({{"generator", i}, {"point", x}, {"image", p[x]}}));
            hit[p[x]] = true;
        }
    }

    auto d = std::make_shared<GroupData>();
    d->backend = Backend::permutation;
    d->degree = degree;
    Permutation identity(degree);
    for (std::size_t x = 0; x < degree; ++x) identity[x] = static_cast<std::uint32_t>(x);
    d->perms.push_back(identity);
    d->index.emplace(identity, kIdentity);
    d->parent.push_back(kIdentity);
    d->tree_gen.push_back(0);

    for (std::size_t head = 0; head < d->perms.size(); ++head) {
        for (std::size_t i = 0; i < generators.size(); ++i) {
            Permutation child(degree);
            const auto& cur = d->perms[head];
            for (std::size_t x = 0; x < degree; ++x) child[x] = generators[i][cur[x]];
            if (d->index.contains(child)) continue;
            if (d->perms.size() >= limits.max_order)
                throw OrderCapExceeded("generated group exceeds the order cap",
                                       witness_of({{"cap", limits.max_order}}));
            d->index.emplace(child, static_cast<Element>(d->perms.size()));
            d->perms.push_back(std::move(child));
            d->parent.push_back(static_cast<Element>(head));
            d->tree_gen.push_back(i);
        }
    }
    const std::size_t n = d->perms.size();
    d->order = n;
    for (const auto& g : generators) d->generators.push_back(d->index.at(g));

    if (n <= kMaterializeCap) {
        d->table.resize(n * n);
        Permutation prod(degree);
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                for (std::size_t x = 0; x < degree; ++x) prod[x] = d->perms[g][d->perms[h][x]];
                d->table[g * n + h] = d->index.at(prod);
            }
    }
    d->inverse.resize(n);
    Permutation inv(degree);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t x = 0; x < degree; ++x) inv[d->perms[g][x]] = static_cast<std::uint32_t>(x);
        d->inverse[g] = d->index.at(inv);
    }
    check_associativity(*d, limits);
    d->labels.reserve(n);
    for (const auto& p : d->perms) d->labels.push_back(cycle_notation(p));
    return FiniteGroup(std::move(d));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Limits& limits) {
    const std::size_t ng = g.order(), nh = h.order();
    if (ng * nh > limits.max_order)
        throw OrderCapExceeded("product order exceeds the order cap", witness_of({{"order", ng * nh}}));
    const std::size_t n = ng * nh;
    std::vector<Element> flat(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto left = g.op(static_cast<Element>(a / nh), static_cast<Element>(b / nh));
            auto right = h.op(static_cast<Element>(a % nh), static_cast<Element>(b % nh));
            flat[a * n + b] = static_cast<Element>(left * nh + right);
        }
    std::vector<Element> identity_labels(n);
    for (std::size_t a = 0; a < n; ++a) identity_labels[a] = static_cast<Element>(a);
    auto d = table_group(std::move(flat), n, limits, identity_labels);
    for (std::size_t a = 0; a < n; ++a)
        d->labels[a] = "(" + g.label(static_cast<Element>(a / nh)) + "," +
                       h.label(static_cast<Element>(a % nh)) + ")";
    return FiniteGroup(std::move(d));
}

FiniteGroup catalog(const std::string& name, long parameter, const Limits& limits) {
    auto require_positive = [&] {
        if (parameter < 1)
            throw UnknownCatalogEntry(name + " requires a positive parameter",
                                      {{"parameter", std::to_string(parameter)}});
    };
    auto cap_check = [&](std::size_t order) {
        if (order > limits.max_order)
            throw OrderCapExceeded(name + "(" + std::to_string(parameter) + ") exceeds the order cap",
                                   {{"order", order == std::numeric_limits<std::size_t>::max()
                                                  ? std::string("more than 2^64")
                                                  : std::to_string(order)},
                                    {"cap", std::to_string(limits.max_order)}});
    };

    if (name == "cyclic") {
        require_positive();
        const auto n = static_cast<std::size_t>(parameter);
        cap_check(n);
        Permutation shift(n);
        for (std::size_t x = 0; x < n; ++x) shift[x] = static_cast<std::uint32_t>((x + 1) % n);
        return from_permutation_generators(n, {shift}, limits);
    }
    if (name == "symmetric") {
        require_positive();
        cap_check(factorial_saturating(parameter));
        const auto n = static_cast<std::size_t>(parameter);
        std::vector<Permutation> gens;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Permutation t(n);
            for (std::size_t x = 0; x < n; ++x) t[x] = static_cast<std::uint32_t>(x);
            std::swap(t[i], t[i + 1]);
            gens.push_back(std::move(t));
        }
        return from_permutation_generators(n, gens, limits);
    }
    if (name == "dihedral") {
        require_positive();
        const auto n = static_cast<std::size_t>(parameter);
        cap_check(2 * n);
        if (n >= 3) {
            Permutation rotation(n), reflection(n);
            for (std::size_t x = 0; x < n; ++x) {
                rotation[x] = static_cast<std::uint32_t>((x + 1) % n);
                reflection[x] = static_cast<std::uint32_t>((n - x) % n);
            }
            return from_permutation_generators(n, {rotation, reflection}, limits);
        }
        // Polygons with fewer than three vertices are not acted on faithfully;
        // use both faces of the polygon (points x and n + x) instead.
        Permutation rotation(2 * n), reflection(2 * n);
        for (std::size_t x = 0; x < n; ++x) {
            rotation[x] = static_cast<std::uint32_t>((x + 1) % n);
            rotation[n + x] = static_cast<std::uint32_t>(n + (x + 1) % n);
            reflection[x] = static_cast<std::uint32_t>(n + (n - x) % n);
            reflection[n + x] = static_cast<std::uint32_t>((n - x) % n);
        }
        return from_permutation_generators(2 * n, {rotation, reflection}, limits);
    }
    if (name == "klein4") {
        return from_permutation_generators(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, limits);
    }
    if (name == "quaternion8") {
        // Regular representation on {1,-1,i,-i,j,-j,k,-k}; element index is
        // 2 * unit + (negative ? 1 : 0) with units 1, i, j, k.
        struct Signed {
            int sign;
            int unit;
        };
        static constexpr Signed kUnitProduct[4][4] = {
            {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
            {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
            {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
            {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
        };
        auto left_multiplication = [](int unit) {
            Permutation p(8);
            for (int x = 0; x < 8; ++x) {
                const auto prod = kUnitProduct[unit][x / 2];
                const int sign = prod.sign * (x % 2 ? -1 : 1);
                p[x] = static_cast<std::uint32_t>(2 * prod.unit + (sign < 0 ? 1 : 0));
            }
            return p;
        };
        return from_permutation_generators(8, {left_multiplication(1), left_multiplication(2)}, limits);
    }
    throw UnknownCatalogEntry("no catalog group named '" + name + "'");
}

Element group_op(const FiniteGroup& group, Element g, Element h) {
    if (g >= group.order() || h >= group.order())
        throw IndexOutOfRange("element index outside the group",
                              witness_of({{"g", g}, {"h", h}, {"order", group.order()}}));
    return group.op(g, h);
}

Element group_inverse(const FiniteGroup& group, Element g) {
    if (g >= group.order())
        throw IndexOutOfRange("element index outside the group", witness_of({{"g", g}, {"order", group.order()}}));
    return group.inv(g);
}

bool Subgroup::contains(Element g) const noexcept {
    return std::binary_search(members_.begin(), members_.end(), g);
}

Subgroup make_subgroup(const FiniteGroup& group, std::vector<Element> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!members.empty() && members.back() >= group.order())
        throw IndexOutOfRange("subgroup member outside the group",
                              witness_of({{"g", members.back()}, {"order", group.order()}}));
    if (members.empty() || members.front() != kIdentity)
        throw NotASubgroup("identity is not a member");
    auto in = [&](Element x) { return std::binary_search(members.begin(), members.end(), x); };
    for (Element a : members) {
        if (!in(group.inv(a)))
            throw NotASubgroup("not closed under inverse", witness_of({{"g", a}}));
        for (Element b : members)
            if (!in(group.op(a, b)))
                throw NotASubgroup("not closed under product", witness_of({{"a", a}, {"b", b}}));
    }
    return Subgroup(group, std::move(members));
}

Subgroup subgroup_generated(const FiniteGroup& group, std::span<const Element> seeds) {
    for (Element s : seeds)
        if (s >= group.order())
            throw IndexOutOfRange("seed outside the group", witness_of({{"g", s}, {"order", group.order()}}));
    std::vector<bool> in(group.order(), false);
    in[kIdentity] = true;
    std::vector<Element> members{kIdentity};
    std::deque<Element> queue{kIdentity};
    while (!queue.empty()) {
        Element x = queue.front();
        queue.pop_front();
        for (Element s : seeds) {
            Element y = group.op(s, x);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
                queue.push_back(y);
            }
        }
    }
    return make_subgroup(group, std::move(members));
}

CosetPartition left_cosets(const FiniteGroup& group, const Subgroup& subgroup, CosetSide side) {
    if (!subgroup.parent().same_as(group))
        throw NotASubgroup("subgroup belongs to a different group");
    // Re-verify closure against this group.
    CosetPartition part(make_subgroup(group, subgroup.members()), side);
    const auto n = static_cast<Element>(group.order());
    constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
    part.block_of_.assign(n, unassigned);
    for (Element g = 0; g < n; ++g) {
        if (part.block_of_[g] != unassigned) continue;
        std::vector<Element> block;
        block.reserve(subgroup.order());
        for (Element k : subgroup.members())
            block.push_back(side == CosetSide::left ? group.op(g, k) : group.op(k, g));
        std::sort(block.begin(), block.end());
        const std::size_t id = part.blocks_.size();
        for (Element x : block) {
            if (part.block_of_[x] != unassigned)
                throw InternalCheckFailed("cosets overlap", witness_of({{"g", g}, {"x", x}}));
            part.block_of_[x] = id;
        }
        part.representatives_.push_back(block.front());
        part.blocks_.push_back(std::move(block));
    }
    return part;
}

std::string cycle_notation(const Permutation& perm) {
    std::ostringstream out;
    std::vector<bool> done(perm.size(), false);
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (done[start] || perm[start] == start) continue;
        out << '(';
        std::size_t x = start;
        bool first = true;
        while (!done[x]) {
            done[x] = true;
            out << (first ? "" : " ") << x;
            first = false;
            x = perm[x];
        }
        out << ')';
    }
    std::string s = out.str();
    return s.empty() ? "()" : s;
}

}  // namespace kernatom
