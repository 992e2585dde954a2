#pragma once

// Left actions of finite groups on finite sets {0, ..., n-1}, stored as dense
// |G| x |X| tables with table[g][x] = g.x and (gh).x = g.(h.x).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kernatom/group.hpp"
#include "kernatom/limits.hpp"

namespace kernatom {

using Point = std::uint32_t;

class GroupAction {
public:
    const FiniteGroup& group() const noexcept { return group_; }
    std::size_t set_size() const noexcept { return set_size_; }
    Point act(Element g, Point x) const { return table_.at(static_cast<std::size_t>(g) * set_size_ + x); }
    bool validated() const noexcept { return validated_; }

private:
    GroupAction(FiniteGroup group, std::size_t set_size, std::vector<Point> table)
        : group_(std::move(group)), set_size_(set_size), table_(std::move(table)), validated_(true) {}
    FiniteGroup group_;
    std::size_t set_size_;
    std::vector<Point> table_;
    bool validated_;

    friend GroupAction action_from_table(const FiniteGroup&, std::size_t, const std::vector<std::vector<Point>>&,
                                         const Limits&);
};

// Verifies that every row is a bijection (NotABijection{g}), that the
// identity row fixes every point and that table[gh][x] = table[g][table[h][x]]
// (NotAnAction{g,h,x}, first violating triple). ValidationCapExceeded when
// |G|^2 |X| > limits.action_validation_cap.
GroupAction action_from_table(const FiniteGroup& group, std::size_t set_size,
                              const std::vector<std::vector<Point>>& table, const Limits& limits = {});

// Permutation groups acting on their points. Throws WrongBackend.
GroupAction natural_action(const FiniteGroup& group, const Limits& limits = {});

std::vector<Point> orbit(const GroupAction& action, Point x);
Subgroup stabilizer(const GroupAction& action, Point x);

// {g : g.x = y}. Non-empty results are checked to equal g0 Stab(x) for their
// least member g0 (InternalCheckFailed otherwise).
std::vector<Element> action_fiber(const GroupAction& action, Point x, Point y);

struct OrbitStabilizerCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct OrbitStabilizerReport {
    Point point = 0;
    std::vector<Point> orbit;
    Subgroup stabilizer;
    // One entry per orbit point y: the elements sending x to y.
    std::vector<std::pair<Point, std::vector<Element>>> fibers;
    std::vector<OrbitStabilizerCheck> checks;
    bool counting_identity_holds = false;
};

// Computes orbit, stabilizer and all fibers and checks |G| = |Orb||Stab|,
// equal fiber sizes, and fibers = left cosets of Stab. Failures are reported,
// not thrown. Refuses sampled-associativity groups unless allowed.
OrbitStabilizerReport verify_orbit_stabilizer(const GroupAction& action, Point x, const Limits& limits = {});

}  // namespace kernatom
