#include "kernatom/action.hpp"

#include <algorithm>
#include <set>

#include "kernatom/errors.hpp"
#include "kernatom/homomorphism.hpp"

namespace kernatom {

namespace {

void check_point(const GroupAction& action, Point x) {
    if (x >= action.set_size())
        throw PointOutOfRange("point outside the acted-on set",
                              {{"x", std::to_string(x)}, {"set_size", std::to_string(action.set_size())}});
}

}  // namespace

GroupAction action_from_table(const FiniteGroup& group, std::size_t set_size,
                              const std::vector<std::vector<Point>>& table, const Limits& limits) {
    const std::size_t n = group.order();
    if (set_size == 0) throw DimensionMismatch("acted-on set must be non-empty");
    if (table.size() != n)
        throw DimensionMismatch("action table needs one row per group element",
                                {{"rows", std::to_string(table.size())}, {"order", std::to_string(n)}});
    const auto cost = static_cast<std::uint64_t>(n) * n * set_size;
    if (cost > limits.action_validation_cap)
        throw ValidationCapExceeded("|G|^2 |X| exceeds the action validation cap",
                                    {{"cost", std::to_string(cost)}});

    std::vector<Point> flat;
    flat.reserve(n * set_size);
    for (std::size_t g = 0; g < n; ++g) {
        if (table[g].size() != set_size)
            throw DimensionMismatch("action row length differs from set size", {{"g", std::to_string(g)}});
        std::vector<bool> hit(set_size, false);
        for (std::size_t x = 0; x < set_size; ++x) {
            const Point y = table[g][x];
            if (y >= set_size || hit[y])
                throw NotABijection("row is not a bijection of the set",
                                    {{"g", std::to_string(g)}, {"x", std::to_string(x)}});
            hit[y] = true;
            flat.push_back(y);
        }
    }
    auto at = [&](std::size_t g, std::size_t x) { return flat[g * set_size + x]; };
    for (std::size_t x = 0; x < set_size; ++x)
        if (at(kIdentity, x) != x)
            throw NotAnAction("identity does not fix every point",
                              {{"g", "0"}, {"h", "0"}, {"x", std::to_string(x)}});
    for (Element g = 0; g < n; ++g)
        for (Element h = 0; h < n; ++h) {
            const Element gh = group.op(g, h);
            for (std::size_t x = 0; x < set_size; ++x)
                if (at(gh, x) != at(g, at(h, x)))
                    throw NotAnAction("(gh).x != g.(h.x)",
                                      {{"g", std::to_string(g)}, {"h", std::to_string(h)}, {"x", std::to_string(x)}});
        }
    return GroupAction(group, set_size, std::move(flat));
}

GroupAction natural_action(const FiniteGroup& group, const Limits& limits) {
    if (group.backend() != Backend::permutation)
        throw WrongBackend("natural action needs a permutation group");
    std::vector<std::vector<Point>> table;
    table.reserve(group.order());
    for (Element g = 0; g < group.order(); ++g) table.push_back(group.permutation(g));
    return action_from_table(group, group.degree(), table, limits);
}

std::vector<Point> orbit(const GroupAction& action, Point x) {
    check_point(action, x);
    std::vector<Point> out;
    out.reserve(action.group().order());
    for (Element g = 0; g < action.group().order(); ++g) out.push_back(action.act(g, x));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Subgroup stabilizer(const GroupAction& action, Point x) {
    check_point(action, x);
    std::vector<Element> members;
    for (Element g = 0; g < action.group().order(); ++g)
        if (action.act(g, x) == x) members.push_back(g);
    return make_subgroup(action.group(), std::move(members));
}

std::vector<Element> action_fiber(const GroupAction& action, Point x, Point y) {
    check_point(action, x);
    check_point(action, y);
    const FiniteGroup& group = action.group();
    std::vector<Element> out;
    for (Element g = 0; g < group.order(); ++g)
        if (action.act(g, x) == y) out.push_back(g);
    if (out.empty()) return out;

    const Subgroup stab = stabilizer(action, x);
    std::vector<Element> coset;
    coset.reserve(stab.order());
    for (Element h : stab.members()) coset.push_back(group.op(out.front(), h));
    std::sort(coset.begin(), coset.end());
    if (coset != out)
        throw InternalCheckFailed("fiber differs from g0 Stab(x)",
                                  {{"x", std::to_string(x)}, {"y", std::to_string(y)}});
    return out;
}

OrbitStabilizerReport verify_orbit_stabilizer(const GroupAction& action, Point x, const Limits& limits) {
    require_theorem_ready(action.group(), limits);
    const FiniteGroup& group = action.group();
    OrbitStabilizerReport report{x, orbit(action, x), stabilizer(action, x), {}, {}, false};

    for (Point y : report.orbit) {
        std::vector<Element> members;
        for (Element g = 0; g < group.order(); ++g)
            if (action.act(g, x) == y) members.push_back(g);
        report.fibers.emplace_back(y, std::move(members));
    }

    const std::size_t stab_order = report.stabilizer.order();
    const std::size_t product = report.orbit.size() * stab_order;
    report.checks.push_back({"orbstab.counting", product == group.order(),
                             "|Orb| = " + std::to_string(report.orbit.size()) + ", |Stab| = " +
                                 std::to_string(stab_order) + ", |G| = " + std::to_string(group.order())});

    std::string size_detail = "every fiber has " + std::to_string(stab_order) + " elements";
    bool sizes_ok = true;
    for (const auto& [y, members] : report.fibers) {
        if (members.size() != stab_order) {
            sizes_ok = false;
            size_detail = "fiber over " + std::to_string(y) + " has " + std::to_string(members.size()) +
                          " elements, |Stab| = " + std::to_string(stab_order);
            break;
        }
    }
    report.checks.push_back({"orbstab.fiber-size", sizes_ok, size_detail});

    const CosetPartition cosets = left_cosets(group, report.stabilizer);
    std::set<std::vector<Element>> fiber_family, block_family(cosets.blocks().begin(), cosets.blocks().end());
    for (const auto& entry : report.fibers) fiber_family.insert(entry.second);
    const bool same = fiber_family == block_family && fiber_family.size() == report.fibers.size();
    report.checks.push_back({"orbstab.fiber-cosets", same,
                             std::to_string(report.fibers.size()) + " fibers, " +
                                 std::to_string(cosets.blocks().size()) + " left cosets of Stab"});

    report.counting_identity_holds =
        std::all_of(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.passed; });
    return report;
}

}  // namespace kernatom
