#include "bock/io.hpp"

#include <fstream>

#include "bock/catalog.hpp"
#include "bock/error.hpp"

namespace bock {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::uint32_t small_uint(const json& j, const char* what)
{
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 0xFFFFFFFFull)
        bad(std::string(what) + " must be a non-negative integer");
    return j.get<std::uint32_t>();
}

Prime prime_field(const json& j, const char* key)
{
    return Prime{small_uint(field(j, key), key)};
}

std::vector<std::uint32_t> prime_list(const json& j)
{
    if (!j.is_array())
        bad("prime list must be an array");
    std::vector<std::uint32_t> out;
    for (const auto& x : j)
        out.push_back(Prime{small_uint(x, "prime")}.value());
    return out;
}

AbelianAtom atom_from_json(const json& j)
{
    const auto& kind = field(j, "kind");
    if (!kind.is_string())
        bad("atom kind must be a string");
    const auto k = kind.get<std::string>();
    if (k == "Z")
        return AbelianAtom::z();
    if (k == "Q")
        return AbelianAtom::q();
    if (k == "cyclic")
        return AbelianAtom::cyclic(prime_field(j, "p"), small_uint(field(j, "k"), "k"));
    if (k == "pruefer")
        return AbelianAtom::pruefer(prime_field(j, "p"));
    if (k == "localized")
        return AbelianAtom::localized(prime_field(j, "p"));
    if (k == "localized_away")
        return AbelianAtom::localized_away(primeset_from_json(field(j, "l")));
    if (k == "adic")
        return AbelianAtom::adic(primeset_from_json(field(j, "l")));
    bad("unknown atom kind \"" + k + "\"");
}

json atom_to_json(const AbelianAtom& a)
{
    using K = AbelianAtom::Kind;
    switch (a.kind) {
    case K::Z: return {{"kind", "Z"}};
    case K::Q: return {{"kind", "Q"}};
    case K::Cyclic: return {{"kind", "cyclic"}, {"p", a.p}, {"k", a.k}};
    case K::Pruefer: return {{"kind", "pruefer"}, {"p", a.p}};
    case K::Localized: return {{"kind", "localized"}, {"p", a.p}};
    case K::LocalizedAway: return {{"kind", "localized_away"}, {"l", to_json(a.l)}};
    case K::Adic: return {{"kind", "adic"}, {"l", to_json(a.l)}};
    }
    return {};
}

ExtNat extnat_from_json(const json& j)
{
    if (j.is_string() && j.get<std::string>() == "inf")
        return ExtNat::inf();
    if (j.is_number_unsigned())
        return ExtNat(j.get<std::uint64_t>());
    bad("dimension must be a non-negative integer or \"inf\"");
}

PrimeFamily family_from_json(const json& j)
{
    PrimeFamily f;
    f.default_value = extnat_from_json(field(j, "default"));
    if (j.contains("overrides")) {
        const auto& o = j.at("overrides");
        if (!o.is_object())
            bad("overrides must be an object keyed by prime");
        for (const auto& [key, value] : o.items()) {
            std::uint32_t p = 0;
            try {
                std::size_t used = 0;
                const unsigned long v = std::stoul(key, &used);
                if (used != key.size() || v > 0xFFFFFFFFul)
                    throw std::invalid_argument(key);
                p = static_cast<std::uint32_t>(v);
            } catch (const std::exception&) {
                bad("override key \"" + key + "\" is not an integer");
            }
            f.overrides[Prime{p}.value()] = extnat_from_json(value);
        }
    }
    return f;
}

json family_to_json(const PrimeFamily& f)
{
    json o = json::object();
    for (const auto& [p, v] : f.overrides)
        o[std::to_string(p)] = to_json(v);
    return {{"default", to_json(f.default_value)}, {"overrides", o}};
}

std::string type_of(const json& j)
{
    const auto& t = field(j, "type");
    if (!t.is_string())
        bad("\"type\" must be a string");
    return t.get<std::string>();
}

}  // namespace

json load_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        bad("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        bad(path.string() + ": " + e.what());
    }
}

PrimeSet primeset_from_json(const json& j)
{
    const auto& kind = field(j, "kind");
    if (kind == "finite")
        return PrimeSet::finite(prime_list(field(j, "primes")));
    if (kind == "cofinite")
        return PrimeSet::cofinite(prime_list(field(j, "excluded")));
    bad("prime set kind must be \"finite\" or \"cofinite\"");
}

json to_json(const PrimeSet& s)
{
    if (s.is_finite())
        return {{"kind", "finite"}, {"primes", s.listed()}};
    return {{"kind", "cofinite"}, {"excluded", s.listed()}};
}

AbelianGroup abelian_from_json(const json& j)
{
    if (type_of(j) != "abelian")
        bad("expected an abelian group document");
    const auto& atoms = field(j, "atoms");
    if (!atoms.is_array())
        bad("\"atoms\" must be an array");
    std::vector<AtomTerm> terms;
    for (const auto& a : atoms) {
        const std::uint32_t mult = a.contains("mult") ? small_uint(a.at("mult"), "mult") : 1;
        terms.push_back({atom_from_json(a), mult});
    }
    return canonicalize(std::move(terms));
}

json to_json(const AbelianGroup& g)
{
    json atoms = json::array();
    for (const auto& t : g.terms()) {
        json a = atom_to_json(t.atom);
        a["mult"] = t.mult;
        atoms.push_back(std::move(a));
    }
    return {{"type", "abelian"}, {"atoms", atoms}};
}

NilpotentGroupDesc group_from_json(const json& j)
{
    const std::string type = type_of(j);
    if (type == "abelian")
        return abelian_from_json(j);
    if (type == "finite" || (type == "tower" && j.contains("name"))) {
        if (j.contains("name")) {
            const auto& n = j.at("name");
            if (!n.is_string())
                bad("\"name\" must be a string");
            const CatalogEntry& e = resolve(n.get<std::string>());
            if (type == "tower" && !e.is_tower())
                bad(e.name + " is not a tower");
            if (type == "finite" && !e.is_finite())
                bad(e.name + " is not a finite table");
            return e.value;
        }
        const auto& rows = field(j, "table");
        if (!rows.is_array())
            bad("\"table\" must be an array of rows");
        std::vector<std::vector<Elem>> table;
        for (const auto& r : rows) {
            if (!r.is_array())
                bad("table rows must be arrays");
            std::vector<Elem> row;
            for (const auto& x : r)
                row.push_back(small_uint(x, "table entry"));
            table.push_back(std::move(row));
        }
        return NilpotentGroupDesc::finite("inline", FiniteGroup::from_rows(table));
    }
    if (type == "tower") {
        const auto& layers_json = field(j, "layers");
        if (!layers_json.is_array())
            bad("\"layers\" must be an array");
        std::vector<AbelianGroup> layers;
        for (const auto& l : layers_json)
            layers.push_back(abelian_from_json(l));
        AbelianGroup ab = abelian_from_json(field(j, "ab"));
        const json& w = j.contains("witnessed") ? j.at("witnessed") : json(true);
        if (w.is_boolean())
            return Tower::make(std::move(layers), std::move(ab), w.get<bool>());
        if (!w.is_array())
            bad("\"witnessed\" must be a boolean or an array of booleans");
        std::vector<bool> flags;
        for (const auto& x : w) {
            if (!x.is_boolean())
                bad("\"witnessed\" entries must be booleans");
            flags.push_back(x.get<bool>());
        }
        return Tower::make(std::move(layers), std::move(ab), std::move(flags));
    }
    bad("unknown group type \"" + type + "\"");
}

json to_json(const Tower& t)
{
    json layers = json::array();
    for (const auto& l : t.layers)
        layers.push_back(to_json(l));
    json w = json::array();
    for (bool b : t.witnessed)
        w.push_back(b);
    return {{"type", "tower"}, {"layers", layers}, {"ab", to_json(t.ab)}, {"witnessed", w}};
}

DimensionProfile profile_from_json(const json& j)
{
    if (!j.is_object())
        bad("profile must be a JSON object");
    DimensionProfile d;
    d.q = extnat_from_json(field(j, "q"));
    d.zp = family_from_json(field(j, "zp"));
    d.zpinf = family_from_json(field(j, "zpinf"));
    d.loc = family_from_json(field(j, "loc"));
    return d;
}

json to_json(const DimensionProfile& d)
{
    return {{"q", to_json(d.q)},
            {"zp", family_to_json(d.zp)},
            {"zpinf", family_to_json(d.zpinf)},
            {"loc", family_to_json(d.loc)}};
}

json to_json(ExtNat v)
{
    if (v.is_inf())
        return "inf";
    return v.value();
}

json to_json(const BocksteinBasis& b)
{
    return {{"has_q", b.has_q}, {"loc", to_json(b.loc)}, {"zp", to_json(b.zp)},
            {"zpinf", to_json(b.zpinf)}};
}

json to_json(const Violation& v)
{
    json j = {{"rule", v.rule}, {"message", v.message}};
    j["p"] = v.p ? json(*v.p) : json("generic");
    return j;
}

json to_json(const HomologyReport& r)
{
    auto opt = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
    return {
        {"group", r.group_id},
        {"p", r.p},
        {"sigma_membership",
         {{"Q", r.q_in_sigma}, {"Z_(p)", r.loc_in_sigma}, {"Z/p", r.zp_in_sigma},
          {"Z/p^inf", r.zpinf_in_sigma}}},
        {"h1_q_zero", opt(r.h1_q_zero)},
        {"h1_zp_zero", opt(r.h1_zp_zero)},
        {"zpinf_h12_zero", opt(r.zpinf_h12_zero)},
        {"free_part_h1_zpinf_zero", opt(r.free_part_h1_zpinf_zero)},
        {"verdicts",
         {{"Q", to_string(r.q_verdict)}, {"Z/p", to_string(r.zp_verdict)},
          {"Z/p^inf", to_string(r.zpinf_verdict)}, {"Z_(p)", to_string(r.loc_verdict)}}},
    };
}

}  // namespace bock
