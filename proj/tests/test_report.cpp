#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "kernatom/errors.hpp"
#include "kernatom/pipelines.hpp"
#include "kernatom/report.hpp"
#include "kernatom/spec_io.hpp"

using namespace kernatom;

namespace {

spec::SpecFile parse(const std::string& text) { return spec::parse_spec_text(text, "inline.json", "."); }

std::string error_field(const std::string& text) {
    try {
        parse(text);
    } catch (const SpecError& e) {
        for (const auto& [k, v] : e.witness())
            if (k == "field") return v;
        return "<no field>";
    }
    return "<no error>";
}

const CheckResult* find_check(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("spec parsing: group kinds") {
    const auto c = parse(R"({"spec_version": 1, "kind": "cayley", "table": [[0,1],[1,0]]})");
    CHECK(c.kind == "cayley");
    CHECK(spec::build_group(std::get<spec::GroupSpec>(c.spec), {}).order() == 2);

    const auto p = parse(R"({"spec_version": 1, "kind": "product", "factors": [
        {"kind": "catalog", "name": "cyclic", "parameter": 2},
        {"kind": "perm", "degree": 3, "generators": [[1,2,0]]}]})");
    const auto& g = std::get<spec::GroupSpec>(p.spec);
    CHECK(spec::build_group(g, {}).order() == 6);
    CHECK(spec::describe(g) == "cyclic(2) x permutation group of degree 3 with 1 generators");
}

TEST_CASE("spec parsing: errors point at the offending field") {
    CHECK(error_field(R"({"kind": "cayley", "table": [[0]]})") == "/");
    CHECK(error_field(R"({"spec_version": 2, "kind": "cayley", "table": [[0]]})") == "/spec_version");
    CHECK(error_field(R"({"spec_version": 1, "kind": "magma", "table": [[0]]})") == "/kind");
    CHECK(error_field(R"({"spec_version": 1, "kind": "cayley", "table": [[0]], "extra": 1})") == "/extra");
    CHECK(error_field(R"({"spec_version": 1, "kind": "cayley", "table": [[0.5]]})") == "/table/0/0");
    CHECK(error_field(R"({"spec_version": 1, "kind": "cayley", "table": [[-1]]})") == "/table/0/0");
    CHECK(error_field(R"({"spec_version": 1, "kind": "linear-system", "field": {"gf": 4},
                          "matrix": [[1]], "rhs": [0]})") == "/field/gf");
    CHECK(error_field(R"({"spec_version": 1, "kind": "linear-system", "field": "Q",
                          "matrix": [[1, 2], [1]], "rhs": [0, 0]})") == "/matrix/1");
    CHECK(error_field(R"({"spec_version": 1, "kind": "linear-system", "field": "Q",
                          "matrix": [[1]], "rhs": [0, 1]})") == "/rhs");
    CHECK(error_field(R"({"spec_version": 1, "kind": "hom", "domain": {"kind": "catalog", "name": "cyclic",
                          "parameter": 2}, "codomain": {"kind": "catalog", "name": "cyclic", "parameter": 2}})") ==
          "/");

    try {
        parse("{\n  \"spec_version\": 1,\n  \"kind\": oops\n}");
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(std::string(e.what()).find("inline.json:3:11:") != std::string::npos);
    }
}

TEST_CASE("spec files: relative group references") {
    const auto dir = std::filesystem::temp_directory_path() / "kernatom-spec-test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "z2.json") << R"({"spec_version": 1, "kind": "cayley", "table": [[0,1],[1,0]]})";
    std::ofstream(dir / "hom.json")
        << R"({"spec_version": 1, "kind": "hom", "domain": "z2.json", "codomain": "z2.json", "map": [0, 1]})";
    const auto file = spec::load_spec_file(dir / "hom.json");
    const auto report = verify_hom_spec(file, {});
    CHECK(report.all_passed());
    CHECK_THROWS_AS(spec::load_spec_file(dir / "missing.json"), SpecError);
    std::filesystem::remove_all(dir);
}

TEST_CASE("pipelines: corrupted homomorphism fails hom.validate with the pair") {
    const auto file = parse(R"({"spec_version": 1, "kind": "hom",
        "domain": {"kind": "cayley", "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]]},
        "codomain": {"kind": "catalog", "name": "cyclic", "parameter": 2},
        "map": [0, 0, 0, 1]})");
    const auto r = verify_hom_spec(file, {});
    CHECK_FALSE(r.all_passed());
    const auto* c = find_check(r, "hom.validate");
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::fail);
    const Witness expected{{"error", "NotAHomomorphism"}, {"x", "1"}, {"y", "2"}, {"f(xy)", "1"}, {"f(x)f(y)", "0"}};
    CHECK(c->witness == expected);
}

TEST_CASE("pipelines: sign map passes every check") {
    const auto file = parse(R"({"spec_version": 1, "kind": "hom-gen",
        "domain": {"kind": "catalog", "name": "symmetric", "parameter": 3},
        "codomain": {"kind": "catalog", "name": "cyclic", "parameter": 2},
        "images": [1]})");
    // symmetric(3) is generated by more than one element, so one image is too few.
    const auto short_images = verify_hom_spec(file, {});
    REQUIRE(find_check(short_images, "hom.validate") != nullptr);
    CHECK(find_check(short_images, "hom.validate")->witness.front().second == "DimensionMismatch");

    const auto ok = parse(R"({"spec_version": 1, "kind": "hom-gen",
        "domain": {"kind": "catalog", "name": "symmetric", "parameter": 3},
        "codomain": {"kind": "catalog", "name": "cyclic", "parameter": 2},
        "images": [1, 1]})");
    const auto r = verify_hom_spec(ok, {});
    CHECK(r.all_passed());
    for (const char* name : {"atomicity.fiber-size", "atomicity.fiber-cosets", "atomicity.counting",
                             "firstiso.witness", "injectivity.equivalence"})
        CHECK(find_check(r, name) != nullptr);
}

TEST_CASE("pipelines: quotient spec reports non-normality") {
    const auto file = parse(R"({"spec_version": 1, "kind": "quotient",
        "group": {"kind": "catalog", "name": "symmetric", "parameter": 3},
        "subgroup": {"generators": [1]}})");
    const auto r = verify_group_spec(file, {});
    const auto* c = find_check(r, "quotient.normal");
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::fail);
    CHECK_FALSE(r.all_passed());
}

TEST_CASE("pipelines: inconsistent linear system carries a certificate") {
    const auto file = parse(R"({"spec_version": 1, "kind": "linear-system", "field": "Q",
        "matrix": [[1, 0], [1, 0]], "rhs": [1, 2]})");
    const auto r = solve_spec(file, {});
    const auto* c = find_check(r, "linear.consistency");
    REQUIRE(c != nullptr);
    CHECK(c->status == CheckStatus::fail);
    CHECK(c->witness.size() == 3);
}

TEST_CASE("report emission: empty and single-check documents") {
    ReportDocument empty;
    CHECK(emit(empty, ReportFormat::text) ==
          "kernatom report (report_version 1, tool 0.1.0)\n\ntotal: 0 reports, 0 checks, 0 passed, 0 failed, 0 "
          "skipped\n");
    CHECK(parse_structured_report(emit(empty, ReportFormat::structured)) == empty);

    ReportDocument one;
    VerificationReport r{"a.json", "hom", {}};
    r.fail("hom.validate", "f(xy) = f(x)f(y)", {});
    one.reports.push_back(r);
    CHECK(one.reports[0].checks[0].witness == Witness{{"check", "hom.validate"}});
    CHECK(one.summary() == Summary{1, 0, 1, 0});
    CHECK_FALSE(one.all_passed());
    CHECK(parse_structured_report(emit(one, ReportFormat::structured)) == one);
}

TEST_CASE("report emission: structured round trip for generated reports") {
    ReportDocument doc;
    doc.reports.push_back(verify_group_spec(parse(R"({"spec_version": 1, "kind": "catalog", "name": "dihedral",
        "parameter": 4})"), {}));
    doc.reports.push_back(solve_spec(parse(R"({"spec_version": 1, "kind": "linear-system", "field": {"gf": 3},
        "matrix": [[1, 2, 0], [0, 1, 1]], "rhs": [1, 2]})"), {}));
    VerificationReport skipped{"s.json", "group", {}};
    skipped.skip("group.associativity", "(ab)c = a(bc)", "sampled \"only\"\n");
    doc.reports.push_back(skipped);
    const auto text = emit(doc, ReportFormat::structured);
    const auto back = parse_structured_report(text);
    CHECK(back == doc);
    CHECK(emit(back, ReportFormat::structured) == text);
    CHECK(emit(back, ReportFormat::text) == emit(doc, ReportFormat::text));

    CHECK_THROWS_AS(parse_structured_report("{"), SpecError);
    auto tampered = text;
    const auto pos = tampered.find("\"passed\": ");
    REQUIRE(pos != std::string::npos);
    tampered.replace(pos, 11, "\"passed\": 9");
    CHECK_THROWS_AS(parse_structured_report(tampered), SpecError);
}
