#include "catkit/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace catkit {

namespace {

// rethrows module validation errors with the file context attached
template <typename Fn>
auto with_context(const std::string& path, Fn&& fn) {
    try {
        return fn();
    } catch (const SizeLimitError&) {
        throw;
    } catch (const Error& e) {
        if (e.code() == "ParseError") throw;
        throw Error("ValidationError", path + ": " + e.what());
    }
}

} // namespace

OrderedJson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("ParseError", "cannot open '" + path + "'");
    try {
        return OrderedJson::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("ParseError", path + ": " + e.what());
    }
}

FiniteGroup group_from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("table"))
        throw Error("ParseError", "group file needs a \"table\" field");
    std::vector<std::vector<int>> table =
        j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") &&
        j.at("order").get<std::size_t>() != table.size())
        throw Error("ParseError", "\"order\" does not match the table size");
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return from_table(table, std::move(names));
}

OrderedJson group_to_json(const FiniteGroup& g) {
    OrderedJson j;
    j["order"] = g.order;
    std::vector<std::vector<int>> rows(g.order, std::vector<int>(g.order));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) rows[a][b] = g.mul(a, b);
    j["table"] = rows;
    if (!g.names.empty()) j["names"] = g.names;
    return j;
}

FiniteGroup load_group(const std::string& path) {
    return with_context(path,
                        [&] { return group_from_json(load_json_file(path)); });
}

namespace {

FiniteGroup group_from_json_or_path(const OrderedJson& j,
                                    const std::string& base_dir) {
    if (j.is_string()) {
        std::filesystem::path p = j.get<std::string>();
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        return load_group(p.string());
    }
    return group_from_json(j);
}

} // namespace

GroupExtension extension_from_json(const OrderedJson& j,
                                   const std::string& base_dir) {
    for (const char* key : {"N", "E", "G", "j", "p"})
        if (!j.contains(key))
            throw Error("ParseError",
                        std::string("extension file needs a \"") + key +
                            "\" field");
    FiniteGroup n = group_from_json_or_path(j.at("N"), base_dir);
    FiniteGroup e = group_from_json_or_path(j.at("E"), base_dir);
    FiniteGroup g = group_from_json_or_path(j.at("G"), base_dir);
    return build_extension(std::move(n), std::move(e), std::move(g),
                           j.at("j").get<std::vector<int>>(),
                           j.at("p").get<std::vector<int>>());
}

OrderedJson extension_to_json(const GroupExtension& e) {
    OrderedJson j;
    j["N"] = group_to_json(e.N);
    j["E"] = group_to_json(e.E);
    j["G"] = group_to_json(e.G);
    j["j"] = e.j.map;
    j["p"] = e.p.map;
    return j;
}

GroupExtension load_extension(const std::string& path) {
    return with_context(path, [&] {
        std::string dir = std::filesystem::path(path).parent_path().string();
        if (dir.empty()) dir = ".";
        return extension_from_json(load_json_file(path), dir);
    });
}

CoefficientModule coefficients_from_json(const OrderedJson& j,
                                         const FiniteGroup& g) {
    if (!j.contains("cyclic_orders"))
        throw Error("ParseError",
                    "coefficient file needs a \"cyclic_orders\" field");
    std::vector<int> orders = j.at("cyclic_orders").get<std::vector<int>>();
    if (!j.contains("action")) return trivial_module(g, std::move(orders));
    auto matrices =
        j.at("action").get<std::vector<std::vector<std::vector<long long>>>>();
    return module_from_matrices(g, std::move(orders), matrices);
}

CoefficientModule load_coefficients(const std::string& path,
                                    const FiniteGroup& g) {
    return with_context(
        path, [&] { return coefficients_from_json(load_json_file(path), g); });
}

FiniteSpace space_from_json(const OrderedJson& j) {
    if (!j.contains("points") || !j.contains("opens"))
        throw Error("ParseError",
                    "space file needs \"points\" and \"opens\" fields");
    return make_space(j.at("points").get<int>(),
                      j.at("opens").get<std::vector<std::vector<int>>>());
}

FiniteSpace load_space(const std::string& path) {
    return with_context(path,
                        [&] { return space_from_json(load_json_file(path)); });
}

FactorSystem pair_from_json(const OrderedJson& j, const FiniteGroup& g,
                            const FiniteGroup& n) {
    if (!j.contains("L") || !j.contains("f"))
        throw Error("ParseError", "pair file needs \"L\" and \"f\" fields");
    auto l_maps = j.at("L").get<std::vector<std::vector<int>>>();
    auto f_rows = j.at("f").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(l_maps.size()) != g.order)
        throw Error("ParseError", "\"L\" needs one map per element of G");
    if (static_cast<int>(f_rows.size()) != g.order)
        throw Error("ParseError", "\"f\" must be a |G| x |G| table");
    QuasiAction l{g, n, std::move(l_maps)};
    for (int x = 0; x < g.order; ++x) {
        GroupHom lx{n, n, l.maps[x]};
        if (!check_hom(lx) || !lx.is_bijective())
            throw Error("ValidationError",
                        "L(" + std::to_string(x) +
                            ") is not an automorphism of N");
    }
    if (l.maps[0] != identity_hom(n).map)
        throw Error("ValidationError", "L(1) must be the identity");
    FactorSet f{g, n, {}};
    for (const auto& row : f_rows) {
        if (static_cast<int>(row.size()) != g.order)
            throw Error("ParseError", "\"f\" must be a |G| x |G| table");
        for (int v : row)
            if (v < 0 || v >= n.order)
                throw Error("ValidationError", "factor set value out of range");
        f.f.insert(f.f.end(), row.begin(), row.end());
    }
    for (int x = 0; x < g.order; ++x)
        if (f.at(0, x) != 0 || f.at(x, 0) != 0)
            throw Error("ValidationError", "factor set is not normalized");
    return FactorSystem{std::move(f), std::move(l)};
}

FactorSystem load_pair(const std::string& path, const FiniteGroup& g,
                       const FiniteGroup& n) {
    return with_context(
        path, [&] { return pair_from_json(load_json_file(path), g, n); });
}

OrderedJson pair_to_json(const FactorSystem& sys) {
    OrderedJson j;
    j["L"] = sys.L.maps;
    std::vector<std::vector<int>> rows(sys.f.G.order,
                                       std::vector<int>(sys.f.G.order));
    for (int x = 0; x < sys.f.G.order; ++x)
        for (int y = 0; y < sys.f.G.order; ++y) rows[x][y] = sys.f.at(x, y);
    j["f"] = rows;
    return j;
}

OrderedJson classification_to_json(const std::vector<ExtensionClass>& classes) {
    OrderedJson out = OrderedJson::array();
    for (const auto& cls : classes) {
        OrderedJson entry = pair_to_json(FactorSystem{cls.f, cls.L});
        entry["middle_group"] = cls.middle_group;
        entry["class_size"] = cls.size;
        out.push_back(std::move(entry));
    }
    return out;
}

OrderedJson simplicial_set_to_json(const TruncatedSimplicialSet& s) {
    OrderedJson j;
    j["truncation"] = s.truncation;
    std::vector<int> counts;
    for (int n = 0; n <= s.truncation; ++n) counts.push_back(s.count(n));
    j["counts"] = counts;
    j["simplices"] = s.simplex_data;
    OrderedJson faces = OrderedJson::array();
    for (int n = 0; n <= s.truncation; ++n)
        faces.push_back(n >= 1 ? OrderedJson(s.face[n])
                               : OrderedJson(OrderedJson::array()));
    j["faces"] = std::move(faces);
    OrderedJson degeneracies = OrderedJson::array();
    for (int n = 0; n <= s.truncation; ++n)
        degeneracies.push_back(n < s.truncation
                                   ? OrderedJson(s.degeneracy[n])
                                   : OrderedJson(OrderedJson::array()));
    j["degeneracies"] = std::move(degeneracies);
    return j;
}

std::vector<int> parse_index_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            if (cur.empty()) throw Error("ParseError", "empty list entry");
            out.push_back(std::stoi(cur));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

} // namespace catkit
