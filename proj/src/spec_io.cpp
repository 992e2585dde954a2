#include "kernatom/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kernatom/errors.hpp"

namespace kernatom::spec {

namespace {

using nlohmann::json;

const std::set<std::string> kGroupKinds{"cayley", "perm", "catalog", "product"};
const std::set<std::string> kTopLevelKinds{"cayley",         "perm",   "catalog",       "product",
                                           "hom",            "hom-gen", "action",       "natural-action",
                                           "linear-system", "quotient"};

class Parser {
public:
    Parser(std::string path, std::filesystem::path base_dir) : path_(std::move(path)), base_dir_(std::move(base_dir)) {}

    [[noreturn]] void fail(const std::string& pointer, const std::string& message) const {
        throw SpecError(path_ + ": " + (pointer.empty() ? "/" : pointer) + ": " + message,
                        {{"file", path_}, {"field", pointer.empty() ? "/" : pointer}});
    }

    const json& field(const json& obj, const std::string& ptr, const char* name) const {
        auto it = obj.find(name);
        if (it == obj.end()) fail(ptr, std::string("missing field \"") + name + "\"");
        return *it;
    }

    void only_fields(const json& obj, const std::string& ptr, std::initializer_list<const char*> allowed) const {
        for (const auto& [key, value] : obj.items()) {
            bool known = key == "spec_version" || key == "kind";
            for (const char* a : allowed) known = known || key == a;
            if (!known) fail(ptr + "/" + key, "unknown field");
        }
    }

    std::uint64_t unsigned_int(const json& v, const std::string& ptr) const {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
            fail(ptr, "expected a non-negative integer");
        return v.get<std::uint64_t>();
    }

    long signed_int(const json& v, const std::string& ptr) const {
        if (!v.is_number_integer()) fail(ptr, "expected an integer");
        return v.get<long>();
    }

    std::vector<std::uint32_t> index_list(const json& v, const std::string& ptr) const {
        if (!v.is_array()) fail(ptr, "expected an array of integers");
        std::vector<std::uint32_t> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto x = unsigned_int(v[i], ptr + "/" + std::to_string(i));
            if (x > 0xffffffffULL) fail(ptr + "/" + std::to_string(i), "index too large");
            out.push_back(static_cast<std::uint32_t>(x));
        }
        return out;
    }

    std::vector<std::vector<std::uint32_t>> index_matrix(const json& v, const std::string& ptr) const {
        if (!v.is_array()) fail(ptr, "expected an array of rows");
        std::vector<std::vector<std::uint32_t>> out;
        for (std::size_t i = 0; i < v.size(); ++i) out.push_back(index_list(v[i], ptr + "/" + std::to_string(i)));
        return out;
    }

    void check_version(const json& obj, const std::string& ptr, bool required) const {
        auto it = obj.find("spec_version");
        if (it == obj.end()) {
            if (required) fail(ptr, "missing field \"spec_version\"");
            return;
        }
        if (!it->is_number_integer() || it->get<long long>() != kSpecVersion)
            fail(ptr + "/spec_version", "unsupported spec_version (expected 1)");
    }

    std::string kind_of(const json& obj, const std::string& ptr) const {
        if (!obj.is_object()) fail(ptr, "expected an object");
        const json& k = field(obj, ptr, "kind");
        if (!k.is_string()) fail(ptr + "/kind", "expected a string");
        return k.get<std::string>();
    }

    GroupSpec group(const json& v, const std::string& ptr) const {
        if (v.is_string()) {
            const auto ref = base_dir_ / v.get<std::string>();
            std::ifstream in(ref);
            if (!in) fail(ptr, "cannot open referenced group spec '" + ref.string() + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            Parser nested(ref.string(), ref.parent_path());
            const json doc = nested.parse_json(buf.str());
            nested.check_version(doc, "", true);
            return nested.group(doc, "");
        }
        const std::string kind = kind_of(v, ptr);
        check_version(v, ptr, false);
        if (kind == "cayley") {
            only_fields(v, ptr, {"order", "table"});
            CayleyGroupSpec out{index_matrix(field(v, ptr, "table"), ptr + "/table")};
            if (v.contains("order") && unsigned_int(v["order"], ptr + "/order") != out.table.size())
                fail(ptr + "/order", "order differs from the number of table rows");
            return out;
        }
        if (kind == "perm") {
            only_fields(v, ptr, {"degree", "generators"});
            PermutationGroupSpec out;
            out.degree = unsigned_int(field(v, ptr, "degree"), ptr + "/degree");
            out.generators = index_matrix(field(v, ptr, "generators"), ptr + "/generators");
            return out;
        }
        if (kind == "catalog") {
            only_fields(v, ptr, {"name", "parameter"});
            const json& name = field(v, ptr, "name");
            if (!name.is_string()) fail(ptr + "/name", "expected a string");
            CatalogGroupSpec out{name.get<std::string>(), 0};
            if (v.contains("parameter")) out.parameter = signed_int(v["parameter"], ptr + "/parameter");
            return out;
        }
        if (kind == "product") {
            only_fields(v, ptr, {"factors"});
            const json& factors = field(v, ptr, "factors");
            if (!factors.is_array() || factors.empty()) fail(ptr + "/factors", "expected a non-empty array");
            auto out = std::make_shared<ProductGroupSpec>();
            for (std::size_t i = 0; i < factors.size(); ++i)
                out->factors.push_back(group(factors[i], ptr + "/factors/" + std::to_string(i)));
            return out;
        }
        fail(ptr + "/kind", "unknown group kind '" + kind + "'");
    }

    Scalar scalar(const Field& f, const json& v, const std::string& ptr) const {
        if (v.is_number_integer()) return Scalar::from_integer(f, v.get<long>());
        if (v.is_number_float()) fail(ptr, "floating-point entries are not accepted");
        if (!v.is_string()) fail(ptr, "expected an integer or a \"num/den\" string");
        try {
            return Scalar::parse(f, v.get<std::string>());
        } catch (const Error& e) {
            fail(ptr, e.what());
        }
    }

    Vector vector(const Field& f, const json& v, const std::string& ptr) const {
        if (!v.is_array()) fail(ptr, "expected an array");
        Vector out;
        for (std::size_t i = 0; i < v.size(); ++i) out.push_back(scalar(f, v[i], ptr + "/" + std::to_string(i)));
        return out;
    }

    LinearSystemSpec linear_system(const json& v) const {
        only_fields(v, "", {"field", "matrix", "rhs", "samples"});
        const json& fj = field(v, "", "field");
        Field f = Field::rationals();
        if (fj.is_string()) {
            if (fj.get<std::string>() != "Q") fail("/field", "expected \"Q\" or {\"gf\": p}");
        } else if (fj.is_object() && fj.size() == 1 && fj.contains("gf")) {
            const auto p = unsigned_int(fj["gf"], "/field/gf");
            try {
                f = Field::gf(p);
            } catch (const NotPrime& e) {
                fail("/field/gf", e.what());
            }
        } else {
            fail("/field", "expected \"Q\" or {\"gf\": p}");
        }
        const json& mj = field(v, "", "matrix");
        if (!mj.is_array() || mj.empty()) fail("/matrix", "expected a non-empty array of rows");
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < mj.size(); ++i) {
            rows.push_back(vector(f, mj[i], "/matrix/" + std::to_string(i)));
            if (rows.back().empty()) fail("/matrix/" + std::to_string(i), "rows must be non-empty");
            if (rows.back().size() != rows.front().size())
                fail("/matrix/" + std::to_string(i), "row length differs from row 0");
        }
        LinearSystemSpec out;
        out.field = f;
        out.matrix = ExactMatrix::from_rows(f, rows);
        out.rhs = vector(f, field(v, "", "rhs"), "/rhs");
        if (out.rhs.size() != rows.size()) fail("/rhs", "rhs length differs from the number of matrix rows");
        if (v.contains("samples")) {
            const json& sj = v["samples"];
            if (!sj.is_array()) fail("/samples", "expected an array of coefficient tuples");
            for (std::size_t i = 0; i < sj.size(); ++i)
                out.samples.push_back(vector(f, sj[i], "/samples/" + std::to_string(i)));
        }
        return out;
    }

    json parse_json(const std::string& text) const {
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            // Convert the byte offset into a line/column position.
            std::size_t line = 1, column = 1;
            for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
                if (text[i] == '\n') {
                    ++line;
                    column = 1;
                } else {
                    ++column;
                }
            }
            throw SpecError(path_ + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                ": malformed JSON",
                            {{"file", path_}, {"line", std::to_string(line)}, {"column", std::to_string(column)}});
        }
    }

    SpecFile top_level(const std::string& text) const {
        const json doc = parse_json(text);
        const std::string kind = kind_of(doc, "");
        if (!kTopLevelKinds.contains(kind)) fail("/kind", "unknown kind '" + kind + "'");
        check_version(doc, "", true);

        if (kGroupKinds.contains(kind)) return {path_, kind, group(doc, "")};
        if (kind == "hom" || kind == "hom-gen") {
            const bool by_table = kind == "hom";
            only_fields(doc, "", {"domain", "codomain", by_table ? "map" : "images"});
            HomSpec h{group(field(doc, "", "domain"), "/domain"), group(field(doc, "", "codomain"), "/codomain"),
                      std::nullopt, std::nullopt};
            if (by_table)
                h.map = index_list(field(doc, "", "map"), "/map");
            else
                h.images = index_list(field(doc, "", "images"), "/images");
            return {path_, kind, std::move(h)};
        }
        if (kind == "action") {
            only_fields(doc, "", {"group", "set_size", "table"});
            ActionSpec a{group(field(doc, "", "group"), "/group"), index_matrix(field(doc, "", "table"), "/table"),
                         unsigned_int(field(doc, "", "set_size"), "/set_size")};
            return {path_, kind, std::move(a)};
        }
        if (kind == "natural-action") {
            only_fields(doc, "", {"group"});
            return {path_, kind, ActionSpec{group(field(doc, "", "group"), "/group"), std::nullopt, 0}};
        }
        if (kind == "linear-system") return {path_, kind, linear_system(doc)};

        only_fields(doc, "", {"group", "subgroup"});
        QuotientSpec q{group(field(doc, "", "group"), "/group"), {}, std::nullopt};
        const json& sub = field(doc, "", "subgroup");
        if (!sub.is_object() || sub.size() != 1 || !(sub.contains("generators") || sub.contains("members")))
            fail("/subgroup", "expected {\"generators\": [...]} or {\"members\": [...]}");
        if (sub.contains("generators"))
            q.subgroup_generators = index_list(sub["generators"], "/subgroup/generators");
        else
            q.subgroup_members = index_list(sub["members"], "/subgroup/members");
        return {path_, kind, std::move(q)};
    }

private:
    std::string path_;
    std::filesystem::path base_dir_;
};

}  // namespace

SpecFile load_spec_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file '" + path.string() + "'", {{"file", path.string()}});
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_spec_text(buf.str(), path.string(), path.parent_path());
}

SpecFile parse_spec_text(const std::string& text, const std::string& path_for_messages,
                         const std::filesystem::path& base_dir) {
    return Parser(path_for_messages, base_dir).top_level(text);
}

FiniteGroup build_group(const GroupSpec& spec, const Limits& limits) {
    struct Builder {
        const Limits& limits;
        FiniteGroup operator()(const CayleyGroupSpec& s) const { return from_cayley_table(s.table, limits); }
        FiniteGroup operator()(const PermutationGroupSpec& s) const {
            return from_permutation_generators(s.degree, s.generators, limits);
        }
        FiniteGroup operator()(const CatalogGroupSpec& s) const { return catalog(s.name, s.parameter, limits); }
        FiniteGroup operator()(const std::shared_ptr<const ProductGroupSpec>& s) const {
            FiniteGroup g = build_group(s->factors.front(), limits);
            for (std::size_t i = 1; i < s->factors.size(); ++i)
                g = direct_product(g, build_group(s->factors[i], limits), limits);
            return g;
        }
    };
    return std::visit(Builder{limits}, spec);
}

std::string describe(const GroupSpec& spec) {
    struct Describer {
        std::string operator()(const CayleyGroupSpec& s) const {
            return "cayley table of order " + std::to_string(s.table.size());
        }
        std::string operator()(const PermutationGroupSpec& s) const {
            return "permutation group of degree " + std::to_string(s.degree) + " with " +
                   std::to_string(s.generators.size()) + " generators";
        }
        std::string operator()(const CatalogGroupSpec& s) const {
            if (s.name == "klein4" || s.name == "quaternion8") return s.name;
            return s.name + "(" + std::to_string(s.parameter) + ")";
        }
        std::string operator()(const std::shared_ptr<const ProductGroupSpec>& s) const {
            std::string out;
            for (std::size_t i = 0; i < s->factors.size(); ++i)
                out += (i ? " x " : "") + std::visit(*this, s->factors[i]);
            return out;
        }
    };
    return std::visit(Describer{}, spec);
}

}  // namespace kernatom::spec
