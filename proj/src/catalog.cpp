#include "bock/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "bock/error.hpp"

namespace bock {

namespace {

// ---------------------------------------------------------------------------
// Terms: head or head(arg, ...)
// ---------------------------------------------------------------------------

struct Term {
    std::string head;
    std::vector<Term> args;

    bool is_number() const
    {
        return !head.empty() && args.empty() &&
               std::all_of(head.begin(), head.end(), [](unsigned char c) { return std::isdigit(c); });
    }

    std::uint32_t number() const
    {
        if (!is_number() || head.size() > 9)
            throw Error(ErrorKind::InvalidInput, "expected a small integer, got '" + str() + "'");
        return static_cast<std::uint32_t>(std::stoul(head));
    }

    std::string str() const
    {
        std::string s = head;
        if (!args.empty()) {
            s += '(';
            for (std::size_t i = 0; i < args.size(); ++i)
                s += (i ? "," : "") + args[i].str();
            s += ')';
        }
        return s;
    }
};

class TermParser {
public:
    explicit TermParser(const std::string& text) : text_(text) {}

    Term parse()
    {
        Term t = term();
        skip_space();
        if (pos_ != text_.size())
            fail("trailing characters");
        return t;
    }

private:
    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw Error(ErrorKind::Parse, "cannot parse catalog name '" + text_ + "': " + why);
    }

    Term term()
    {
        skip_space();
        Term t;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            t.head += text_[pos_++];
        if (t.head.empty())
            fail("expected a name at offset " + std::to_string(pos_));
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            t.args.push_back(term());
            skip_space();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                t.args.push_back(term());
                skip_space();
            }
            if (pos_ >= text_.size() || text_[pos_] != ')')
                fail("missing ')'");
            ++pos_;
        }
        return t;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Finite tables
// ---------------------------------------------------------------------------

using Table = std::vector<Elem>;

void check_order(std::size_t n, const std::string& name)
{
    if (n == 0 || n > kMaxCatalogOrder)
        throw Error(ErrorKind::InvalidInput, name + " has order " + std::to_string(n) +
                                                 ", outside the supported range 1.." +
                                                 std::to_string(kMaxCatalogOrder));
}

FiniteGroup cyclic_table(std::uint32_t n)
{
    Table t(std::size_t{n} * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            t[a * n + b] = (a + b) % n;
    return FiniteGroup::from_table(n, std::move(t));
}

// r^i s^j stored as i + m*j
FiniteGroup dihedral_table(std::uint32_t m)
{
    const std::uint32_t n = 2 * m;
    Table t(std::size_t{n} * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            const std::uint32_t a = x % m, b = x / m, c = y % m, d = y / m;
            const std::uint32_t rot = (b == 0 ? a + c : a + m - c) % m;
            t[x * n + y] = rot + m * ((b + d) % 2);
        }
    return FiniteGroup::from_table(n, std::move(t));
}

// ±{1, i, j, k} stored as 2*unit + (negative ? 1 : 0)
FiniteGroup quaternion_table()
{
    // unit products: sign and result unit for units 0=1, 1=i, 2=j, 3=k
    static constexpr int unit_sign[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static constexpr int unit_result[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    Table t(64);
    for (std::uint32_t x = 0; x < 8; ++x)
        for (std::uint32_t y = 0; y < 8; ++y) {
            const int ux = x / 2, uy = y / 2;
            int sign = unit_sign[ux][uy] * ((x % 2) ? -1 : 1) * ((y % 2) ? -1 : 1);
            t[x * 8 + y] = static_cast<Elem>(2 * unit_result[ux][uy] + (sign < 0 ? 1 : 0));
        }
    return FiniteGroup::from_table(8, std::move(t));
}

FiniteGroup symmetric3_table()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::array<int, 3>& q) {
        return static_cast<Elem>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    Table t(36);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i)
                c[i] = perms[a][perms[b][i]];
            t[a * 6 + b] = index(c);
        }
    return FiniteGroup::from_table(6, std::move(t));
}

// [[1,a,c],[0,1,b],[0,0,1]] over Z/m stored as a + m*b + m²*c
FiniteGroup ut3_table(std::uint32_t m)
{
    const std::uint32_t n = m * m * m;
    Table t(std::size_t{n} * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y) {
            const std::uint32_t a = x % m, b = (x / m) % m, c = x / (m * m);
            const std::uint32_t a2 = y % m, b2 = (y / m) % m, c2 = y / (m * m);
            const std::uint32_t ra = (a + a2) % m, rb = (b + b2) % m, rc = (c + c2 + a * b2) % m;
            t[std::size_t{x} * n + y] = ra + m * rb + m * m * rc;
        }
    return FiniteGroup::from_table(n, std::move(t));
}

// Upper unitriangular 4×4 over F_2; bit s holds the entry at slots[s].
FiniteGroup ut4_mod2_table()
{
    static constexpr int slots[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto to_matrix = [](std::uint32_t bits) {
        std::array<std::array<int, 4>, 4> m{};
        for (int i = 0; i < 4; ++i)
            m[i][i] = 1;
        for (int s = 0; s < 6; ++s)
            m[slots[s][0]][slots[s][1]] = (bits >> s) & 1;
        return m;
    };
    Table t(64 * 64);
    for (std::uint32_t x = 0; x < 64; ++x)
        for (std::uint32_t y = 0; y < 64; ++y) {
            const auto a = to_matrix(x), b = to_matrix(y);
            std::uint32_t bits = 0;
            for (int s = 0; s < 6; ++s) {
                const int i = slots[s][0], j = slots[s][1];
                int v = 0;
                for (int k = 0; k < 4; ++k)
                    v ^= a[i][k] & b[k][j];
                bits |= static_cast<std::uint32_t>(v) << s;
            }
            t[x * 64 + y] = bits;
        }
    return FiniteGroup::from_table(64, std::move(t));
}

/// Z/n as a sum of primary cyclic atoms, from the factorization of n.
AbelianGroup cyclic_invariants(std::uint64_t n)
{
    std::vector<AtomTerm> terms;
    for (auto p : prime_divisors(n)) {
        std::uint32_t k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        terms.push_back({AbelianAtom::cyclic(Prime{p}, k), 1});
    }
    return AbelianGroup(std::move(terms));
}

BocksteinBasis finite_expected_sigma(std::size_t order)
{
    BocksteinBasis b;
    b.zp = PrimeSet::finite(prime_divisors(order));
    b.zpinf = b.zp;
    return b;
}

CatalogEntry finite_entry(std::string name, std::vector<std::uint32_t> params, FiniteGroup g,
                          std::optional<int> cls, AbelianGroup ab)
{
    CatalogMetadata meta{g.order(), cls, std::move(ab), std::nullopt};
    if (cls)
        meta.expected_sigma = finite_expected_sigma(g.order());
    return CatalogEntry{name, std::move(params), NilpotentGroupDesc::finite(name, std::move(g)),
                        std::move(meta)};
}

bool is_power_of_two(std::uint64_t n) { return n && !(n & (n - 1)); }

std::uint32_t ipow(std::uint32_t base, std::uint32_t e)
{
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        r *= base;
        if (r > kMaxCatalogOrder * kMaxCatalogOrder)
            break;
    }
    return static_cast<std::uint32_t>(std::min<std::uint64_t>(r, ~std::uint32_t{0}));
}

void expect_params(const std::string& name, const std::vector<std::uint32_t>& params,
                   std::size_t count)
{
    if (params.size() != count)
        throw Error(ErrorKind::InvalidInput, name + " takes " + std::to_string(count) +
                                                 " parameter(s), got " +
                                                 std::to_string(params.size()));
}

std::string call(const std::string& head, const std::vector<std::uint32_t>& params)
{
    std::string s = head;
    if (!params.empty()) {
        s += '(';
        for (std::size_t i = 0; i < params.size(); ++i)
            s += (i ? "," : "") + std::to_string(params[i]);
        s += ')';
    }
    return s;
}

// ---------------------------------------------------------------------------
// Abelian cases and towers
// ---------------------------------------------------------------------------

PrimeSet prime_list(const Term& t)
{
    std::vector<std::uint32_t> ps;
    for (const auto& a : t.args)
        ps.push_back(a.number());
    return PrimeSet::finite(ps);
}

/// Atom from Z, Q, localized(p), pruefer(p), cyclic(p,k), localized_away(...), adic(...).
std::optional<AbelianAtom> atom_term(const Term& t)
{
    const auto& h = t.head;
    if (h == "Z" && t.args.empty())
        return AbelianAtom::z();
    if (h == "Q" && t.args.empty())
        return AbelianAtom::q();
    if (h == "localized" && t.args.size() == 1)
        return AbelianAtom::localized(Prime{t.args[0].number()});
    if (h == "pruefer" && t.args.size() == 1)
        return AbelianAtom::pruefer(Prime{t.args[0].number()});
    if (h == "cyclic" && t.args.size() == 2)
        return AbelianAtom::cyclic(Prime{t.args[0].number()}, t.args[1].number());
    if (h == "localized_away")
        return canonical_atom(AbelianAtom::localized_away(prime_list(t)));
    if (h == "adic")
        return canonical_atom(AbelianAtom::adic(prime_list(t)));
    return std::nullopt;
}

AbelianGroup abelian_value(const CatalogEntry& e)
{
    if (const auto* a = e.value.abelian())
        return *a;
    if (e.is_finite() && e.metadata.nilpotency_class && *e.metadata.nilpotency_class <= 1)
        return e.metadata.ab;
    throw Error(ErrorKind::InvalidInput, e.name + " is not Abelian");
}

std::optional<std::size_t> finite_order(const AbelianGroup& g)
{
    if (!g.is_finite())
        return std::nullopt;
    std::size_t order = 1;
    for (const auto& t : g.terms())
        order *= static_cast<std::size_t>(ipow(t.atom.p, t.atom.k * t.mult));
    return order;
}

CatalogEntry abelian_entry(std::string name, AbelianGroup g)
{
    CatalogMetadata meta;
    meta.order = finite_order(g);
    meta.nilpotency_class = g.is_trivial() ? 0 : 1;
    meta.ab = g;
    return CatalogEntry{std::move(name), {}, NilpotentGroupDesc(std::move(g)), std::move(meta)};
}

CatalogEntry tower_entry(std::string name, Tower t)
{
    CatalogMetadata meta;
    meta.order = 1;
    for (const auto& layer : t.layers) {
        const auto o = finite_order(layer);
        meta.order = o ? std::optional<std::size_t>(*meta.order * *o) : std::nullopt;
        if (!meta.order)
            break;
    }
    meta.nilpotency_class = static_cast<int>(t.nilpotency_class());
    meta.ab = t.ab;
    return CatalogEntry{std::move(name), {}, NilpotentGroupDesc(std::move(t)), std::move(meta)};
}

Tower as_tower(const CatalogEntry& e)
{
    if (const auto* t = e.value.tower())
        return *t;
    if (e.is_finite())
        return gamma_tower(e.table());
    throw Error(ErrorKind::InvalidInput, e.name + " has no tower form");
}

bool is_abelian_like(const CatalogEntry& e)
{
    return e.value.abelian() ||
           (e.is_finite() && e.metadata.nilpotency_class && *e.metadata.nilpotency_class <= 1);
}

CatalogEntry resolve_term(const Term& t);

}  // namespace

// ---------------------------------------------------------------------------

CatalogEntry build(const std::string& name, const std::vector<std::uint32_t>& params)
{
    const std::string full = call(name, params);
    if (name == "cyclic") {
        expect_params(name, params, 1);
        check_order(params[0], full);
        return finite_entry(full, params, cyclic_table(params[0]), params[0] == 1 ? 0 : 1,
                            cyclic_invariants(params[0]));
    }
    if (name == "abelian") {
        if (params.empty())
            throw Error(ErrorKind::InvalidInput, "abelian needs at least one invariant");
        std::uint64_t order = 1;
        for (auto n : params) {
            order *= n;
            check_order(n, full);
            check_order(order, full);
        }
        FiniteGroup g = cyclic_table(params[0]);
        AbelianGroup ab = cyclic_invariants(params[0]);
        for (std::size_t i = 1; i < params.size(); ++i) {
            g = direct_product(g, cyclic_table(params[i]));
            ab += cyclic_invariants(params[i]);
        }
        return finite_entry(full, params, std::move(g), order == 1 ? 0 : 1, std::move(ab));
    }
    if (name == "dihedral" || name == "dihedral8") {
        std::uint32_t m = 4;
        if (name == "dihedral") {
            expect_params(name, params, 1);
            m = params[0];
        } else {
            expect_params(name, params, 0);
        }
        if (m < 3)
            throw Error(ErrorKind::InvalidInput, "dihedral(m) needs m >= 3");
        check_order(2 * m, full);
        // D_{2m} is nilpotent iff m is a power of two, then of class log2(m).
        std::optional<int> cls;
        if (is_power_of_two(m))
            cls = static_cast<int>(std::countr_zero(m));
        AbelianGroup ab = m % 2 ? cyclic_invariants(2)
                                : AbelianGroup::of(AbelianAtom::cyclic(Prime{2}, 1), 2);
        return finite_entry(full, params, dihedral_table(m), cls, std::move(ab));
    }
    if (name == "quaternion8") {
        expect_params(name, params, 0);
        return finite_entry(full, params, quaternion_table(), 2,
                            AbelianGroup::of(AbelianAtom::cyclic(Prime{2}, 1), 2));
    }
    if (name == "symmetric3") {
        expect_params(name, params, 0);
        return finite_entry(full, params, symmetric3_table(), std::nullopt, cyclic_invariants(2));
    }
    if (name == "ut3_mod") {
        expect_params(name, params, 2);
        const Prime p{params[0]};
        if (params[1] == 0)
            throw Error(ErrorKind::InvalidInput, "ut3_mod(p,k) needs k >= 1");
        const std::uint32_t m = ipow(p.value(), params[1]);
        check_order(ipow(m, 3), full);
        return finite_entry(full, params, ut3_table(m), 2,
                            AbelianGroup::of(AbelianAtom::cyclic(p, params[1]), 2));
    }
    if (name == "ut4_mod2") {
        expect_params(name, params, 0);
        return finite_entry(full, params, ut4_mod2_table(), 3,
                            AbelianGroup::of(AbelianAtom::cyclic(Prime{2}, 1), 3));
    }
    throw Error(ErrorKind::UnknownName, "unknown catalog name '" + name + "'");
}

CatalogEntry direct_product(const CatalogEntry& a, const CatalogEntry& b)
{
    const std::string name = "direct_product(" + a.name + "," + b.name + ")";
    if (a.is_finite() && b.is_finite()) {
        const std::size_t n = a.table().order() * b.table().order();
        check_order(n, name);
        std::optional<int> cls;
        if (a.metadata.nilpotency_class && b.metadata.nilpotency_class)
            cls = std::max(*a.metadata.nilpotency_class, *b.metadata.nilpotency_class);
        return finite_entry(name, {}, bock::direct_product(a.table(), b.table()), cls,
                            a.metadata.ab + b.metadata.ab);
    }
    if (is_abelian_like(a) && is_abelian_like(b))
        return abelian_entry(name, abelian_value(a) + abelian_value(b));
    if (is_abelian_like(b))
        return tower_entry(name, tower_product(as_tower(a), abelian_value(b)));
    if (is_abelian_like(a))
        return tower_entry(name, tower_product(as_tower(b), abelian_value(a)));
    return tower_entry(name, tower_product(as_tower(a), as_tower(b)));
}

CatalogEntry heisenberg_ring(const AbelianAtom& ring)
{
    const AbelianGroup r = AbelianGroup::of(ring);
    return tower_entry("heisenberg_ring(" + ring.to_string() + ")",
                       Tower::make({r, r.scaled(2)}, r.scaled(2), true));
}

CatalogEntry ut4_ring(const AbelianAtom& ring)
{
    const AbelianGroup r = AbelianGroup::of(ring);
    return tower_entry("ut4_ring(" + ring.to_string() + ")",
                       Tower::make({r, r.scaled(2), r.scaled(3)}, r.scaled(3), true));
}

namespace {

CatalogEntry resolve_term(const Term& t)
{
    static const std::map<std::string, std::string> aliases = {
        {"Q8", "quaternion8"}, {"D8", "dihedral8"}, {"S3", "symmetric3"}, {"trivial", "cyclic(1)"}};
    if (t.args.empty())
        if (auto it = aliases.find(t.head); it != aliases.end())
            return resolve(it->second);

    const auto& h = t.head;
    if (h == "direct_product" || h == "sum") {
        if (t.args.size() < 2)
            throw Error(ErrorKind::InvalidInput, h + " needs at least two factors");
        CatalogEntry acc = resolve(t.args[0].str());
        for (std::size_t i = 1; i < t.args.size(); ++i)
            acc = direct_product(acc, resolve(t.args[i].str()));
        if (h == "sum" && !is_abelian_like(acc))
            throw Error(ErrorKind::InvalidInput, "sum() takes Abelian groups only");
        acc.name = t.str();
        if (auto* f = acc.value.finite())
            acc.value = NilpotentGroupDesc(FiniteCase{acc.name, f->group});
        return acc;
    }
    if (h == "heisenberg_ring" || h == "ut4_ring") {
        if (t.args.size() != 1)
            throw Error(ErrorKind::InvalidInput, h + " takes one ring");
        const auto ring = atom_term(t.args[0]);
        if (!ring || ring->kind == AbelianAtom::Kind::Pruefer)
            throw Error(ErrorKind::InvalidInput, "'" + t.args[0].str() + "' is not a ring atom");
        CatalogEntry e = h == "heisenberg_ring" ? heisenberg_ring(*ring) : ut4_ring(*ring);
        e.name = t.str();
        return e;
    }
    if (h == "gamma_tower") {
        if (t.args.size() != 1)
            throw Error(ErrorKind::InvalidInput, "gamma_tower takes one finite group");
        const CatalogEntry& inner = resolve(t.args[0].str());
        if (!inner.is_finite())
            throw Error(ErrorKind::InvalidInput, "gamma_tower needs a finite group");
        CatalogEntry e = tower_entry(t.str(), gamma_tower(inner.table()));
        e.metadata.ab = inner.metadata.ab;
        return e;
    }
    if (h != "cyclic" || t.args.size() != 1)
        if (auto atom = atom_term(t))
            return abelian_entry(t.str(), AbelianGroup::of(*atom));

    std::vector<std::uint32_t> params;
    for (const auto& a : t.args)
        params.push_back(a.number());
    return build(h, params);
}

}  // namespace

const CatalogEntry& resolve(const std::string& term)
{
    static std::mutex mu;
    static std::map<std::string, CatalogEntry> cache;

    const Term t = TermParser(term).parse();
    const std::string key = t.str();
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
    }
    CatalogEntry e = resolve_term(t);
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(e)).first->second;
}

const std::vector<std::string>& standard_finite_names()
{
    static const std::vector<std::string> names = {
        "cyclic(1)",
        "cyclic(2)",
        "cyclic(3)",
        "cyclic(4)",
        "cyclic(6)",
        "cyclic(12)",
        "cyclic(30)",
        "cyclic(49)",
        "abelian(2,2)",
        "abelian(2,4)",
        "abelian(3,9)",
        "abelian(2,2,2)",
        "abelian(5,5)",
        "abelian(6,2)",
        "abelian(7,7)",
        "dihedral8",
        "quaternion8",
        "dihedral(8)",
        "dihedral(16)",
        "ut3_mod(2,1)",
        "ut3_mod(3,1)",
        "ut3_mod(5,1)",
        "ut3_mod(7,1)",
        "ut3_mod(2,2)",
        "ut3_mod(2,3)",
        "ut4_mod2",
        "direct_product(quaternion8,cyclic(3))",
        "direct_product(dihedral8,cyclic(5))",
        "direct_product(ut3_mod(3,1),cyclic(2))",
        "direct_product(quaternion8,ut3_mod(3,1))",
        "direct_product(dihedral8,quaternion8)",
        "direct_product(quaternion8,cyclic(7))",
        "direct_product(dihedral8,cyclic(9))",
        "direct_product(ut3_mod(5,1),cyclic(2))",
        "direct_product(dihedral(8),cyclic(15))",
    };
    return names;
}

const std::vector<std::string>& standard_tower_names()
{
    static const std::vector<std::string> names = {
        "heisenberg_ring(Z)",
        "heisenberg_ring(Q)",
        "heisenberg_ring(localized(2))",
        "heisenberg_ring(localized(3))",
        "heisenberg_ring(cyclic(3,1))",
        "heisenberg_ring(cyclic(2,2))",
        "heisenberg_ring(localized_away(2,3))",
        "heisenberg_ring(adic(2,5))",
        "ut4_ring(Z)",
        "ut4_ring(Q)",
        "ut4_ring(localized(5))",
        "gamma_tower(quaternion8)",
        "gamma_tower(ut4_mod2)",
        "gamma_tower(dihedral(16))",
        "gamma_tower(ut3_mod(7,1))",
        "direct_product(heisenberg_ring(Z),cyclic(4))",
        "direct_product(heisenberg_ring(Q),heisenberg_ring(cyclic(5,1)))",
        "direct_product(ut4_ring(localized(2)),pruefer(3))",
        "direct_product(heisenberg_ring(localized(7)),gamma_tower(quaternion8))",
    };
    return names;
}

const std::vector<std::string>& standard_abelian_names()
{
    static const std::vector<std::string> names = {
        "Z",
        "Q",
        "localized(5)",
        "pruefer(3)",
        "localized_away(2,3)",
        "adic(2,3)",
        "sum(Z,pruefer(2))",
        "sum(Q,cyclic(4))",
        "sum(localized(3),cyclic(9),Z)",
    };
    return names;
}

std::vector<std::string> catalog_listing()
{
    std::vector<std::string> lines = {
        "cyclic(n)\ttemplate\tfinite, order n",
        "abelian(n1,...,nr)\ttemplate\tfinite, order n1*...*nr",
        "dihedral(m)\ttemplate\tfinite, order 2m, nilpotent iff m is a power of 2",
        "ut3_mod(p,k)\ttemplate\tfinite, UT(3,Z/p^k), order p^(3k)",
        "direct_product(a,b,...)\ttemplate\tfinite, tower or abelian",
        "heisenberg_ring(R)\ttemplate\ttower, R in {Z, Q, localized(p), cyclic(p,k), "
        "localized_away(...), adic(...)}",
        "ut4_ring(R)\ttemplate\ttower, class 3",
        "gamma_tower(g)\ttemplate\ttower from a finite group of class >= 2",
    };
    auto describe = [](const CatalogEntry& e) {
        std::ostringstream os;
        os << e.name << '\t' << e.value.kind_name() << "\torder "
           << (e.metadata.order ? std::to_string(*e.metadata.order) : "inf") << "\tclass "
           << (e.metadata.nilpotency_class ? std::to_string(*e.metadata.nilpotency_class) : "-");
        return os.str();
    };
    for (const auto* names :
         {&standard_finite_names(), &standard_tower_names(), &standard_abelian_names()})
        for (const auto& n : *names)
            lines.push_back(describe(resolve(n)));
    lines.push_back(describe(resolve("symmetric3")) + "\t(not nilpotent)");
    return lines;
}

}  // namespace bock
