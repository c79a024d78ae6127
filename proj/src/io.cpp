#include "gca/io.hpp"

#include <cctype>
#include <sstream>

namespace gca {

Json group_to_json(const FiniteGroup& g) {
    Json mul = Json::array();
    for (Elem a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (Elem b = 0; b < g.order(); ++b)
            row.push_back(g.mul(a, b));
        mul.push_back(std::move(row));
    }
    return Json{{"order", g.order()}, {"mul", std::move(mul)}, {"label", g.label()}};
}

FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
        throw StructuralError("group JSON needs \"order\" and \"mul\"");
    const int n = j.at("order").get<int>();
    auto mul = j.at("mul").get<std::vector<std::vector<Elem>>>();
    if (static_cast<int>(mul.size()) != n)
        throw StructuralError("group JSON: order disagrees with table size");
    std::string label = j.value("label", std::string("imported"));
    return FiniteGroup(std::move(mul), std::move(label));
}

Json hom_to_json(const GroupHom& phi) {
    return Json{{"domain", phi.domain().label()},
                {"codomain", phi.codomain().label()},
                {"map", phi.map()}};
}

Json config_to_json(const Config& x) {
    return Json{{"group", x.group().label()}, {"symbols", x.symbols()}};
}

Json gca_to_json(const Gca& tau) {
    return Json{{"phi", hom_to_json(tau.hom())},
                {"memory", std::vector<Elem>(tau.memory().begin(), tau.memory().end())},
                {"rule", std::vector<int>(tau.rule().begin(), tau.rule().end())},
                {"alphabet", tau.alphabet_size()}};
}

Gca gca_from_json(const Json& j, const FiniteGroup& domain, const FiniteGroup& codomain) {
    auto map = j.at("phi").at("map").get<std::vector<Elem>>();
    GroupHom phi(codomain, domain, std::move(map));
    auto memory = j.at("memory").get<std::vector<Elem>>();
    auto rule = j.at("rule").get<std::vector<int>>();
    const int q = j.at("alphabet").get<int>();
    return Gca(std::move(phi), std::move(memory), std::move(rule), Alphabet(q));
}

Json table_to_json(const FunctionTable& t) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < t.rows(); ++r) {
        auto row = t.row(r);
        rows.push_back(std::vector<int>(row.begin(), row.end()));
    }
    return rows;
}

FunctionTable table_from_json(const Json& j, const FiniteGroup& domain,
                              const FiniteGroup& codomain, Alphabet a) {
    if (!j.is_array())
        throw StructuralError("function table JSON must be an array of configurations");
    std::vector<int> flat;
    for (const auto& row : j) {
        auto symbols = row.get<std::vector<int>>();
        if (static_cast<int>(symbols.size()) != codomain.order())
            throw StructuralError("function table row length differs from codomain order");
        flat.insert(flat.end(), symbols.begin(), symbols.end());
    }
    return FunctionTable(domain, codomain, a, std::move(flat));
}

Json catalog_to_json(const MonoidCatalog& cat) {
    Json elements = Json::array();
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const CatalogElement& el = cat.elements()[i];
        elements.push_back(Json{{"index", i},
                                {"table", table_to_json(el.table)},
                                {"witness", hom_to_json(el.witness)},
                                {"memory", std::vector<Elem>(el.automaton.memory().begin(),
                                                             el.automaton.memory().end())},
                                {"rule", std::vector<int>(el.automaton.rule().begin(),
                                                          el.automaton.rule().end())},
                                {"invertible", el.invertible}});
    }
    return Json{{"group", cat.group().label()},
                {"alphabet", cat.alphabet_size()},
                {"size", cat.size()},
                {"identity", cat.identity_index()},
                {"units", cat.units()},
                {"elements", std::move(elements)}};
}

std::string catalog_to_csv(const std::string& kind, const MonoidCatalog& cat) {
    std::ostringstream os;
    os << "kind,group,alphabet,size,units\n";
    os << kind << ',' << cat.group().label() << ',' << cat.alphabet_size() << ','
       << cat.size() << ',' << cat.units().size() << '\n';
    return os.str();
}

std::string configs_to_csv(const std::vector<Config>& configs) {
    std::ostringstream os;
    for (const Config& x : configs) {
        for (std::size_t i = 0; i < x.symbols().size(); ++i)
            os << (i ? "," : "") << x.symbols()[i];
        os << '\n';
    }
    return os.str();
}

std::string mirror_table_csv() {
    std::ostringstream os;
    os << "rule,mirror\n";
    for (int r = 0; r < 256; ++r)
        os << r << ',' << eca_mirror(EcaRule(r)).number() << '\n';
    return os.str();
}

std::string raster_to_pgm(const std::vector<std::vector<int>>& rows, int q) {
    if (rows.empty() || q < 2)
        throw StructuralError("raster must be nonempty over q >= 2");
    const std::size_t width = rows.front().size();
    std::ostringstream os;
    os << "P5\n" << width << ' ' << rows.size() << "\n255\n";
    for (const auto& row : rows) {
        if (row.size() != width)
            throw StructuralError("ragged raster");
        for (int v : row)
            os.put(static_cast<char>(255 - (255 * v) / (q - 1)));
    }
    return os.str();
}

Json raster_to_json(const std::vector<std::vector<int>>& rows) {
    Json out = Json::array();
    for (const auto& row : rows)
        out.push_back(row);
    return out;
}

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

int parse_positive(const std::string& s, const std::string& spec) {
    if (s.empty())
        throw StructuralError("bad group spec \"" + spec + "\"");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw StructuralError("bad group spec \"" + spec + "\"");
    return std::stoi(s);
}

} // namespace

FiniteGroup parse_group_spec(const std::string& raw) {
    const std::string spec = strip(raw);
    if (spec.empty())
        throw StructuralError("empty group spec");
    if (spec.front() == '{')
        return group_from_json(Json::parse(spec));

    // Products: "Zm x Zn" with any spacing around the x.
    const auto xpos = spec.find_first_of("xX", 1);
    if (xpos != std::string::npos && (spec[0] == 'Z' || spec[0] == 'z')) {
        const std::string left = strip(spec.substr(0, xpos));
        const std::string right = strip(spec.substr(xpos + 1));
        if (!right.empty() && (right[0] == 'Z' || right[0] == 'z'))
            return build_direct_product(parse_group_spec(left), parse_group_spec(right));
    }

    const char head = spec[0];
    const std::string tail = spec.substr(1);
    switch (head) {
    case 'Z':
    case 'z':
        return build_cyclic(parse_positive(tail, spec));
    case 'D':
    case 'd':
        return build_dihedral(parse_positive(tail, spec));
    case 'S':
    case 's':
        return build_symmetric(parse_positive(tail, spec));
    default:
        throw StructuralError("unrecognized group spec \"" + spec + "\"");
    }
}

} // namespace gca
