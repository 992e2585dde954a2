#include "kernatom/pipelines.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "kernatom/errors.hpp"

namespace kernatom {

namespace {

constexpr std::uint64_t kBruteForceCap = 1ULL << 20;
constexpr std::size_t kOrbitPairCap = 32;

std::string format_vector(const Vector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].to_string();
    return out + ")";
}

std::string format_set(const std::vector<Element>& members) {
    std::string out = "{";
    for (std::size_t i = 0; i < members.size(); ++i) out += (i ? "," : "") + std::to_string(members[i]);
    return out + "}";
}

std::string associativity_detail(const FiniteGroup& g, const Limits& limits) {
    if (g.associativity_sampled())
        return "sampled " + std::to_string(limits.associativity_samples) + " triples (seed " +
               std::to_string(limits.seed) + ")";
    const auto n = g.order();
    return "exhaustive over " + std::to_string(n * n * n) + " triples";
}

Witness with_message(const Error& e) {
    Witness w{{"error", e.kind()}};
    for (const auto& kv : e.witness()) w.push_back(kv);
    return w;
}

// Catalog names are values inside a spec, so an unknown one is a spec error.
FiniteGroup build(const spec::GroupSpec& s, const Limits& limits) {
    try {
        return spec::build_group(s, limits);
    } catch (const UnknownCatalogEntry& e) {
        throw SpecError(e.what(), e.witness());
    }
}

std::optional<FiniteGroup> build_checked(VerificationReport& report, const spec::GroupSpec& s, const std::string& role,
                                         const Limits& limits) {
    const std::string name = "group." + role;
    const std::string statement = "the " + role + " group satisfies the group axioms";
    try {
        FiniteGroup g = build(s, limits);
        report.pass(name, statement,
                    spec::describe(s) + ", order " + std::to_string(g.order()) + ", associativity " +
                        associativity_detail(g, limits));
        return g;
    } catch (const NotAGroup& e) {
        report.fail(name, statement, with_message(e));
    } catch (const NotAPermutation& e) {
        report.fail(name, statement, with_message(e));
    }
    return std::nullopt;
}

// Returns the reason theorem checks cannot run, or empty.
std::string theorem_block(const FiniteGroup& g, const Limits& limits) {
    if (g.associativity_sampled() && !limits.allow_sampled)
        return "group of order " + std::to_string(g.order()) +
               " has sampled associativity; rerun with --allow-sampled";
    return {};
}

constexpr std::pair<const char*, const char*> kHomChecks[] = {
    {"kernel.subgroup", "Ker(f) = {x : f(x) = e} is a subgroup of the domain"},
    {"image.subgroup", "Im(f) is a subgroup of the codomain"},
    {"atomicity.fiber-size", "every image point has a fiber of exactly |Ker(f)| elements"},
    {"atomicity.fiber-cosets", "the fibers of f are exactly the left cosets of Ker(f)"},
    {"atomicity.counting", "|G| = |Ker(f)| * |Im(f)|"},
    {"firstiso.witness", "xKer(f) -> f(x) is an isomorphism G/Ker(f) -> Im(f)"},
    {"injectivity.equivalence", "f is injective iff Ker(f) is trivial"},
};

}  // namespace

void check_homomorphism(VerificationReport& report, const Homomorphism& f, const Limits& limits) {
    std::string blocked = theorem_block(f.domain(), limits);
    if (blocked.empty()) blocked = theorem_block(f.codomain(), limits);
    if (blocked.empty() && !f.validated()) blocked = "homomorphism was not exhaustively validated";
    if (!blocked.empty()) {
        for (const auto& [name, statement] : kHomChecks) report.skip(name, statement, blocked);
        return;
    }
    const FiniteGroup& g = f.domain();

    std::optional<Subgroup> ker, im;
    try {
        ker = kernel(f);
        report.pass(kHomChecks[0].first, kHomChecks[0].second,
                    "|Ker| = " + std::to_string(ker->order()) + ", members " + format_set(ker->members()));
    } catch (const NotASubgroup& e) {
        report.fail(kHomChecks[0].first, kHomChecks[0].second, with_message(e));
    }
    try {
        im = image(f);
        report.pass(kHomChecks[1].first, kHomChecks[1].second,
                    "|Im| = " + std::to_string(im->order()) + ", members " + format_set(im->members()));
    } catch (const NotASubgroup& e) {
        report.fail(kHomChecks[1].first, kHomChecks[1].second, with_message(e));
    }
    if (!ker || !im) {
        for (std::size_t i = 2; i < std::size(kHomChecks); ++i)
            report.skip(kHomChecks[i].first, kHomChecks[i].second, "kernel or image is not a subgroup");
        return;
    }

    // Fiber sizes.
    std::vector<std::vector<Element>> fibers;
    std::optional<Witness> size_witness;
    for (Element h : im->members()) {
        fibers.push_back(fiber(f, h));
        if (!size_witness && fibers.back().size() != ker->order())
            size_witness = Witness{{"h", std::to_string(h)},
                                   {"fiber_size", std::to_string(fibers.back().size())},
                                   {"kernel_order", std::to_string(ker->order())}};
    }
    report.record(kHomChecks[2].first, kHomChecks[2].second, !size_witness,
                  std::to_string(fibers.size()) + " fibers of " + std::to_string(ker->order()) + " elements",
                  size_witness.value_or(Witness{}));

    // Fiber family against the coset partition.
    const CosetPartition cosets = left_cosets(g, *ker);
    std::set<std::vector<Element>> fiber_family(fibers.begin(), fibers.end());
    std::optional<Witness> coset_witness;
    for (std::size_t b = 0; b < cosets.blocks().size() && !coset_witness; ++b)
        if (!fiber_family.contains(cosets.blocks()[b]))
            coset_witness = Witness{{"coset_representative", std::to_string(cosets.representatives()[b])},
                                    {"coset", format_set(cosets.blocks()[b])}};
    if (!coset_witness && fiber_family.size() != cosets.blocks().size())
        coset_witness = Witness{{"fibers", std::to_string(fiber_family.size())},
                                {"cosets", std::to_string(cosets.blocks().size())}};
    report.record(kHomChecks[3].first, kHomChecks[3].second, !coset_witness,
                  std::to_string(cosets.blocks().size()) + " cosets, each equal to one fiber",
                  coset_witness.value_or(Witness{}));

    const bool counting = g.order() == ker->order() * im->order();
    report.record(kHomChecks[4].first, kHomChecks[4].second, counting,
                  std::to_string(g.order()) + " = " + std::to_string(ker->order()) + " * " +
                      std::to_string(im->order()),
                  {{"G", std::to_string(g.order())},
                   {"Ker", std::to_string(ker->order())},
                   {"Im", std::to_string(im->order())}});

    try {
        const auto w = first_isomorphism_witness(f, limits);
        report.pass(kHomChecks[5].first, kHomChecks[5].second,
                    "G/Ker has order " + std::to_string(w.quotient.group.order()) +
                        "; bijective onto Im and product-preserving");
    } catch (const NotNormal& e) {
        report.fail(kHomChecks[5].first, kHomChecks[5].second, with_message(e));
    } catch (const WitnessCheckFailed& e) {
        report.fail(kHomChecks[5].first, kHomChecks[5].second, with_message(e));
    } catch (const InternalCheckFailed& e) {
        report.fail(kHomChecks[5].first, kHomChecks[5].second, with_message(e));
    }

    const bool trivial_kernel = ker->order() == 1;
    const bool distinct = map_is_duplicate_free(f);
    report.record(kHomChecks[6].first, kHomChecks[6].second, trivial_kernel == distinct,
                  std::string("injective: ") + (distinct ? "yes" : "no"),
                  {{"kernel_trivial", trivial_kernel ? "true" : "false"},
                   {"map_duplicate_free", distinct ? "true" : "false"}});
}

void check_action(VerificationReport& report, const GroupAction& action, const Limits& limits) {
    const FiniteGroup& g = action.group();
    if (auto blocked = theorem_block(g, limits); !blocked.empty()) {
        report.skip("orbstab.counting", "|G| = |Orb(x)| * |Stab(x)| at every point", blocked);
        return;
    }
    for (Point x = 0; x < action.set_size(); ++x) {
        const std::string at = "[x=" + std::to_string(x) + "]";
        const OrbitStabilizerReport os = verify_orbit_stabilizer(action, x, limits);
        for (const auto& c : os.checks) {
            std::string statement;
            if (c.name == "orbstab.counting")
                statement = "|G| = |Orb(x)| * |Stab(x)|";
            else if (c.name == "orbstab.fiber-size")
                statement = "every fiber {g : g.x = y} has |Stab(x)| elements";
            else
                statement = "the fibers over Orb(x) are exactly the left cosets of Stab(x)";
            report.record(c.name + at, statement, c.passed, c.detail, {{"x", std::to_string(x)}, {"detail", c.detail}});
        }
        const auto fixed = action_fiber(action, x, x);
        report.record("orbstab.restriction" + at, "{g : g.x = x} equals Stab(x)",
                      fixed == os.stabilizer.members(), "Stab(x) = " + format_set(fixed),
                      {{"x", std::to_string(x)}});
    }

    const std::string statement = "y in Orb(x) iff x in Orb(y) for all points x, y";
    if (action.set_size() > kOrbitPairCap) {
        report.skip("orbit.equivalence", statement, "more than 32 points");
        return;
    }
    std::vector<std::vector<Point>> orbits;
    for (Point x = 0; x < action.set_size(); ++x) orbits.push_back(orbit(action, x));
    std::optional<Witness> bad;
    std::set<std::vector<Point>> distinct;
    for (Point x = 0; x < action.set_size() && !bad; ++x) {
        distinct.insert(orbits[x]);
        for (Point y = 0; y < action.set_size() && !bad; ++y) {
            const bool forward = std::binary_search(orbits[x].begin(), orbits[x].end(), y);
            const bool back = std::binary_search(orbits[y].begin(), orbits[y].end(), x);
            if (forward != back) bad = Witness{{"x", std::to_string(x)}, {"y", std::to_string(y)}};
        }
    }
    report.record("orbit.equivalence", statement, !bad, std::to_string(distinct.size()) + " orbits",
                  bad.value_or(Witness{}));
}

std::vector<Vector> default_coefficient_samples(const Field& field, std::size_t dimension, const Limits& limits) {
    std::vector<Vector> samples;
    samples.push_back(zero_vector(field, dimension));
    samples.push_back(Vector(dimension, Scalar::one(field)));
    std::mt19937_64 rng(limits.seed);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    for (int s = 0; s < 8; ++s) {
        Vector v;
        for (std::size_t i = 0; i < dimension; ++i) {
            const long a = num(rng), b = den(rng);
            v.push_back(field.is_prime() ? Scalar::from_integer(field, a)
                                         : Scalar::from_rational(field, mpq_class(a, b)));
        }
        samples.push_back(std::move(v));
    }
    return samples;
}

void check_linear_system(VerificationReport& report, const ExactMatrix& m, const Vector& b,
                         const std::vector<Vector>& samples, const Limits& limits) {
    const Field& field = m.field();
    const std::size_t n = m.cols();
    const Rref r = rref(m);
    const std::size_t nullity = n - r.rank;
    report.record("linear.rank-nullity", "rank(M) + nullity(M) = n", r.rank + nullity == n,
                  "rank " + std::to_string(r.rank) + ", nullity " + std::to_string(nullity) + ", n = " +
                      std::to_string(n) + " over " + field.name(),
                  {{"rank", std::to_string(r.rank)}, {"n", std::to_string(n)}});

    constexpr std::pair<const char*, const char*> kRest[] = {
        {"linear.particular", "M y0 = b for the particular solution"},
        {"linear.null-space", "the kernel basis satisfies M k = 0 and is linearly independent"},
        {"linear.translation-family", "M (y0 + sum c_i k_i) = b for every coefficient tuple"},
        {"linear.fiber-cardinality", "every nonempty fiber of M has the cardinality of Ker(M)"},
        {"linear.brute-force", "brute-force buckets by image all have p^(n - rank) elements; the bucket of b is the family"},
    };

    SolveOutcome outcome = [&]() -> SolveOutcome {
        try {
            return solve_affine(m, b);
        } catch (const NotASolutionSet& e) {
            report.fail("linear.consistency", "M y = b has a solution", with_message(e));
            throw;
        }
    }();
    if (const auto* bad = std::get_if<Inconsistent>(&outcome)) {
        report.fail("linear.consistency", "M y = b has a solution",
                    {{"certificate", format_vector(bad->certificate)},
                     {"c^T M", "0"},
                     {"c^T b", bad->certificate_rhs.to_string()}},
                    "inconsistent: c^T M = 0 but c^T b != 0");
        for (const auto& [name, statement] : kRest) report.skip(name, statement, "system is inconsistent");
        return;
    }
    const auto& sol = std::get<AffineSolutionSet>(outcome);
    report.pass("linear.consistency", "M y = b has a solution", "consistent");
    report.pass(kRest[0].first, kRest[0].second, "y0 = " + format_vector(sol.particular()));
    std::string basis = "{";
    for (std::size_t i = 0; i < sol.kernel_basis().size(); ++i)
        basis += (i ? ", " : "") + format_vector(sol.kernel_basis()[i]);
    report.pass(kRest[1].first, kRest[1].second,
                "kernel dimension " + std::to_string(sol.dimension()) + ", basis " + basis + "}");

    const auto tuples = samples.empty() ? default_coefficient_samples(field, sol.dimension(), limits) : samples;
    try {
        verify_translation_family(m, b, sol, tuples);
        std::string detail = std::to_string(tuples.size()) + " coefficient tuples";
        if (field.is_prime()) detail += "; complete family enumerated when p^d <= 4096";
        report.pass(kRest[2].first, kRest[2].second, detail);
    } catch (const NotASolutionSet& e) {
        report.fail(kRest[2].first, kRest[2].second, with_message(e));
    } catch (const DimensionMismatch& e) {
        report.fail(kRest[2].first, kRest[2].second, with_message(e));
    }

    const FiberCardinality card = fiber_cardinality(m);
    bool card_ok = card.dimension == sol.dimension();
    if (field.is_prime()) {
        mpz_class expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(field.characteristic()),
                      static_cast<unsigned long>(sol.dimension()));
        card_ok = card_ok && card.kind == FiberCardinality::Kind::finite && card.count == expected;
    } else {
        card_ok = card_ok && (card.kind == FiberCardinality::Kind::infinite) == (sol.dimension() > 0);
    }
    report.record(kRest[3].first, kRest[3].second, card_ok, "|fiber| = " + card.to_string(),
                  {{"cardinality", card.to_string()}, {"nullity", std::to_string(sol.dimension())}});

    if (!field.is_prime()) {
        report.skip(kRest[4].first, kRest[4].second, "brute force applies to GF(p) only");
        return;
    }
    const std::uint64_t p = field.characteristic();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n && space <= kBruteForceCap; ++i) space *= p;
    if (space > kBruteForceCap) {
        report.skip(kRest[4].first, kRest[4].second, "p^n exceeds 2^20");
        return;
    }

    // Bucket every input vector by its image.
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = m.at(i, j).residue();
    std::vector<std::uint64_t> target;
    for (const auto& s : b) target.push_back(s.residue());
    std::map<std::vector<std::uint64_t>, std::uint64_t> buckets;
    std::set<std::vector<std::uint64_t>> bucket_of_b;
    std::vector<std::uint64_t> x(n, 0), image(m.rows());
    for (std::uint64_t t = 0; t < space; ++t) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            std::uint64_t acc = 0;
            for (std::size_t j = 0; j < n; ++j) acc = (acc + rows[i][j] * x[j]) % p;
            image[i] = acc;
        }
        ++buckets[image];
        if (image == target) bucket_of_b.insert(x);
        for (std::size_t j = 0; j < n; ++j) {
            if (++x[j] < p) break;
            x[j] = 0;
        }
    }
    std::uint64_t expected = 1;
    for (std::size_t i = 0; i < nullity; ++i) expected *= p;
    std::optional<Witness> bad;
    for (const auto& [img, count] : buckets)
        if (count != expected && !bad) {
            std::string shown = "(";
            for (std::size_t i = 0; i < img.size(); ++i) shown += (i ? ", " : "") + std::to_string(img[i]);
            bad = Witness{{"image", shown + ")"}, {"bucket_size", std::to_string(count)},
                          {"expected", std::to_string(expected)}};
        }

    // The solution family, enumerated over all coefficient tuples.
    std::set<std::vector<std::uint64_t>> family;
    Vector coeffs = zero_vector(field, sol.dimension());
    for (std::uint64_t t = 0; t < expected && !bad; ++t) {
        std::uint64_t rest = t;
        for (std::size_t i = 0; i < sol.dimension(); ++i) {
            coeffs[i] = Scalar::from_integer(field, static_cast<long>(rest % p));
            rest /= p;
        }
        std::vector<std::uint64_t> member;
        for (const auto& s : sol.member(coeffs)) member.push_back(s.residue());
        family.insert(std::move(member));
    }
    if (!bad && family != bucket_of_b)
        bad = Witness{{"family", std::to_string(family.size())}, {"bucket_of_b", std::to_string(bucket_of_b.size())}};
    report.record(kRest[4].first, kRest[4].second, !bad,
                  std::to_string(space) + " inputs, " + std::to_string(buckets.size()) + " image points, every bucket has " +
                      std::to_string(expected) + " elements",
                  bad.value_or(Witness{}));
}

VerificationReport verify_group_spec(const spec::SpecFile& file, const Limits& limits) {
    VerificationReport report{file.path, file.kind, {}};
    const spec::GroupSpec* gs = std::get_if<spec::GroupSpec>(&file.spec);
    const spec::QuotientSpec* qs = std::get_if<spec::QuotientSpec>(&file.spec);
    if (!gs && !qs) throw SpecError(file.path + ": verify-group needs a group or quotient spec, got '" + file.kind + "'");
    const spec::GroupSpec& group_spec = gs ? *gs : qs->group;

    constexpr std::pair<const char*, const char*> kAxioms[] = {
        {"group.closure", "every product lies in the element set"},
        {"group.identity", "element 0 is a two-sided identity"},
        {"group.inverses", "every element has a two-sided inverse"},
        {"group.associativity", "(ab)c = a(bc) for all a, b, c"},
    };
    std::optional<FiniteGroup> group;
    try {
        group = build(group_spec, limits);
        report.pass(kAxioms[0].first, kAxioms[0].second,
                    spec::describe(group_spec) + ", order " + std::to_string(group->order()));
        report.pass(kAxioms[1].first, kAxioms[1].second);
        report.pass(kAxioms[2].first, kAxioms[2].second);
        report.pass(kAxioms[3].first, kAxioms[3].second, associativity_detail(*group, limits));
    } catch (const NotAPermutation& e) {
        report.fail("group.generators", "every generator is a permutation of 0..degree-1", with_message(e));
        for (const auto& [name, statement] : kAxioms) report.skip(name, statement, "generators are invalid");
    } catch (const NotAGroup& e) {
        std::string axiom;
        for (const auto& [k, v] : e.witness())
            if (k == "axiom") axiom = v;
        const char* failing = axiom == "closure"    ? "group.closure"
                              : axiom == "identity" ? "group.identity"
                              : axiom == "inverse"  ? "group.inverses"
                                                    : "group.associativity";
        bool after = false;
        for (const auto& [name, statement] : kAxioms) {
            if (after)
                report.skip(name, statement, "an earlier axiom failed");
            else if (std::string(name) == failing) {
                report.fail(name, statement, with_message(e));
                after = true;
            } else {
                report.pass(name, statement);
            }
        }
    }
    if (!qs || !group) return report;

    const FiniteGroup& g = *group;
    std::optional<Subgroup> k;
    try {
        k = qs->subgroup_members ? make_subgroup(g, *qs->subgroup_members)
                                 : subgroup_generated(g, qs->subgroup_generators);
        report.pass("subgroup.closure", "K contains the identity and is closed under products and inverses",
                    "|K| = " + std::to_string(k->order()) + ", members " + format_set(k->members()));
    } catch (const NotASubgroup& e) {
        report.fail("subgroup.closure", "K contains the identity and is closed under products and inverses",
                    with_message(e));
    } catch (const IndexOutOfRange& e) {
        report.fail("subgroup.closure", "K contains the identity and is closed under products and inverses",
                    with_message(e));
    }
    constexpr std::pair<const char*, const char*> kQuotient[] = {
        {"quotient.normal", "gKg^-1 = K for every g"},
        {"quotient.well-defined", "coset products do not depend on representatives"},
        {"quotient.lagrange", "[G : K] * |K| = |G|"},
        {"quotient.projection", "the projection G -> G/K is a homomorphism with kernel K"},
    };
    if (!k) {
        for (const auto& [name, statement] : kQuotient) report.skip(name, statement, "K is not a subgroup");
        return report;
    }
    if (Element w = normality_witness(g, *k); w != kNoElement) {
        Element conj = kNoElement;
        for (Element x : k->members())
            if (!k->contains(g.op(g.op(w, x), g.inv(w)))) {
                conj = x;
                break;
            }
        report.fail(kQuotient[0].first, kQuotient[0].second,
                    {{"error", "NotNormal"},
                     {"g", std::to_string(w)},
                     {"g_label", g.label(w)},
                     {"k", std::to_string(conj)},
                     {"gkg^-1", std::to_string(g.op(g.op(w, conj), g.inv(w)))}});
        for (std::size_t i = 1; i < std::size(kQuotient); ++i)
            report.skip(kQuotient[i].first, kQuotient[i].second, "K is not normal");
        return report;
    }
    report.pass(kQuotient[0].first, kQuotient[0].second);
    try {
        const Quotient q = quotient_group(g, *k, limits);
        report.pass(kQuotient[1].first, kQuotient[1].second,
                    "G/K has order " + std::to_string(q.group.order()));
        report.record(kQuotient[2].first, kQuotient[2].second, q.cosets.blocks().size() * k->order() == g.order(),
                      std::to_string(q.cosets.blocks().size()) + " * " + std::to_string(k->order()) + " = " +
                          std::to_string(g.order()),
                      {{"index", std::to_string(q.cosets.blocks().size())}});
        report.record(kQuotient[3].first, kQuotient[3].second, kernel(q.projection) == *k, {}, {});
    } catch (const InternalCheckFailed& e) {
        report.fail(kQuotient[1].first, kQuotient[1].second, with_message(e));
    }
    return report;
}

VerificationReport verify_hom_spec(const spec::SpecFile& file, const Limits& limits) {
    const auto* hs = std::get_if<spec::HomSpec>(&file.spec);
    if (!hs) throw SpecError(file.path + ": verify-hom needs a hom or hom-gen spec, got '" + file.kind + "'");
    VerificationReport report{file.path, file.kind, {}};
    auto domain = build_checked(report, hs->domain, "domain", limits);
    auto codomain = build_checked(report, hs->codomain, "codomain", limits);
    const char* statement = "f(xy) = f(x)f(y) for every pair x, y";
    if (!domain || !codomain) {
        report.skip("hom.validate", statement, "a group spec is invalid");
        return report;
    }
    std::optional<Homomorphism> f;
    try {
        f = hs->map ? hom_from_table(*domain, *codomain, *hs->map, limits)
                    : hom_from_generator_images(*domain, *codomain, *hs->images, limits);
        report.pass("hom.validate", statement,
                    std::to_string(domain->order() * domain->order()) + " pairs checked");
    } catch (const NotAHomomorphism& e) {
        Witness w = with_message(e);
        if (hs->map) {
            const auto x = static_cast<Element>(std::stoul(e.witness().at(0).second));
            const auto y = static_cast<Element>(std::stoul(e.witness().at(1).second));
            const auto& map = *hs->map;
            w.emplace_back("f(xy)", std::to_string(map[domain->op(x, y)]));
            w.emplace_back("f(x)f(y)", std::to_string(codomain->op(map[x], map[y])));
        }
        report.fail("hom.validate", statement, w);
    } catch (const DimensionMismatch& e) {
        report.fail("hom.validate", statement, with_message(e));
    } catch (const IndexOutOfRange& e) {
        report.fail("hom.validate", statement, with_message(e));
    }
    if (!f) {
        for (const auto& [name, st] : kHomChecks) report.skip(name, st, "map is not a homomorphism");
        return report;
    }
    check_homomorphism(report, *f, limits);
    return report;
}

VerificationReport verify_action_spec(const spec::SpecFile& file, const Limits& limits) {
    const auto* as = std::get_if<spec::ActionSpec>(&file.spec);
    if (!as) throw SpecError(file.path + ": verify-action needs an action spec, got '" + file.kind + "'");
    VerificationReport report{file.path, file.kind, {}};
    auto group = build_checked(report, as->group, "acting", limits);
    const char* statement = "each g acts as a bijection and (gh).x = g.(h.x)";
    if (!group) {
        report.skip("action.validate", statement, "the group spec is invalid");
        return report;
    }
    std::optional<GroupAction> action;
    try {
        action = as->table ? action_from_table(*group, as->set_size, *as->table, limits) : natural_action(*group, limits);
        report.pass("action.validate", statement, std::to_string(action->set_size()) + " points");
    } catch (const NotABijection& e) {
        report.fail("action.validate", statement, with_message(e));
    } catch (const NotAnAction& e) {
        report.fail("action.validate", statement, with_message(e));
    } catch (const WrongBackend& e) {
        report.fail("action.validate", statement, with_message(e));
    } catch (const DimensionMismatch& e) {
        report.fail("action.validate", statement, with_message(e));
    }
    if (!action) {
        report.skip("orbstab.counting", "|G| = |Orb(x)| * |Stab(x)| at every point", "action is invalid");
        return report;
    }
    check_action(report, *action, limits);
    return report;
}

VerificationReport solve_spec(const spec::SpecFile& file, const Limits& limits) {
    const auto* ls = std::get_if<spec::LinearSystemSpec>(&file.spec);
    if (!ls) throw SpecError(file.path + ": solve needs a linear-system spec, got '" + file.kind + "'");
    VerificationReport report{file.path, file.kind, {}};
    try {
        check_linear_system(report, ls->matrix, ls->rhs, ls->samples, limits);
    } catch (const NotASolutionSet&) {
        // Already recorded as a failed check.
    }
    return report;
}

VerificationReport run_spec(const spec::SpecFile& file, const Limits& limits) {
    if (std::holds_alternative<spec::HomSpec>(file.spec)) return verify_hom_spec(file, limits);
    if (std::holds_alternative<spec::ActionSpec>(file.spec)) return verify_action_spec(file, limits);
    if (std::holds_alternative<spec::LinearSystemSpec>(file.spec)) return solve_spec(file, limits);
    return verify_group_spec(file, limits);
}

}  // namespace kernatom
