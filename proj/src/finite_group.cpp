#include "bock/finite_group.hpp"

#include <algorithm>
#include <sstream>

#include "bock/error.hpp"
#include "bock/random.hpp"

namespace bock {

TableCheck validate_table(std::size_t n, std::span<const Elem> table)
{
    auto fail = [](std::string msg) { return TableCheck{false, std::move(msg)}; };
    if (n == 0)
        return fail("empty table");
    if (table.size() != n * n)
        return fail("table has " + std::to_string(table.size()) + " entries, expected " +
                    std::to_string(n * n));
    auto at = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };

    std::vector<char> seen(n);
    for (std::size_t r = 0; r < n; ++r) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t c = 0; c < n; ++c) {
            const Elem v = at(r, c);
            if (v >= n)
                return fail("entry (" + std::to_string(r) + "," + std::to_string(c) +
                            ") out of range");
            if (seen[v]++)
                return fail("row " + std::to_string(r) + " is not a permutation");
        }
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t r = 0; r < n; ++r)
            if (seen[at(r, c)]++)
                return fail("column " + std::to_string(c) + " is not a permutation");
    }

    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            ok = at(e, x) == x && at(x, e) == x;
        if (ok)
            identity = e;
    }
    if (!identity)
        return fail("no two-sided identity");

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t ab = at(a, b);
            for (std::size_t c = 0; c < n; ++c)
                if (at(ab, c) != at(a, at(b, c)))
                    return fail("associativity fails at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")");
        }
    // A Latin square with identity has two-sided inverses once associative.
    return {};
}

FiniteGroup FiniteGroup::from_table(std::size_t n, std::vector<Elem> table)
{
    if (auto check = validate_table(n, table); !check)
        throw Error(ErrorKind::InvalidInput, "invalid group table: " + check.violation);
    return FiniteGroup(Unchecked{}, n, std::move(table));
}

FiniteGroup FiniteGroup::from_rows(const std::vector<std::vector<Elem>>& rows)
{
    std::vector<Elem> flat;
    flat.reserve(rows.size() * rows.size());
    for (const auto& r : rows) {
        if (r.size() != rows.size())
            throw Error(ErrorKind::InvalidInput, "invalid group table: table is not square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return from_table(rows.size(), std::move(flat));
}

FiniteGroup::FiniteGroup(Unchecked, std::size_t n, std::vector<Elem> table)
    : n_(n), table_(std::move(table)), inverse_(n)
{
    for (Elem e = 0; e < n_; ++e)
        if (mul(e, e) == e) {
            identity_ = e;
            break;
        }
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
            if (mul(a, b) == identity_) {
                inverse_[a] = b;
                break;
            }
}

Elem FiniteGroup::pow(Elem a, std::uint64_t e) const
{
    Elem result = identity_;
    Elem base = a;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t FiniteGroup::element_order(Elem a) const
{
    std::uint64_t k = 1;
    for (Elem x = a; x != identity_; x = mul(x, a))
        ++k;
    return k;
}

bool FiniteGroup::is_abelian() const
{
    for (Elem a = 0; a < n_; ++a)
        for (Elem b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

bool Subgroup::contains(Elem x) const
{
    return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup whole(const FiniteGroup& g)
{
    Subgroup s;
    s.elements.resize(g.order());
    for (Elem x = 0; x < g.order(); ++x)
        s.elements[x] = x;
    return s;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

namespace {

std::vector<char> mask_of(const FiniteGroup& g, const Subgroup& h)
{
    std::vector<char> m(g.order(), 0);
    for (auto x : h.elements)
        m[x] = 1;
    return m;
}

std::vector<Elem> distinct(const FiniteGroup& g, std::span<const Elem> xs)
{
    std::vector<char> seen(g.order(), 0);
    std::vector<Elem> out;
    for (auto x : xs)
        if (x != g.identity() && !seen[x]++)
            out.push_back(x);
    return out;
}

}  // namespace

Subgroup generate(const FiniteGroup& g, std::span<const Elem> generators)
{
    const auto gens = distinct(g, generators);
    std::vector<char> in(g.order(), 0);
    std::vector<Elem> elems{g.identity()};
    in[g.identity()] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto s : gens) {
            const Elem y = g.mul(elems[i], s);
            if (!in[y]) {
                in[y] = 1;
                elems.push_back(y);
            }
        }
    std::sort(elems.begin(), elems.end());
    return Subgroup{std::move(elems)};
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elements)
{
    if (elements.empty())
        return false;
    std::vector<char> in(g.order(), 0);
    for (auto x : elements) {
        if (x >= g.order())
            return false;
        in[x] = 1;
    }
    if (!in[g.identity()])
        return false;
    for (auto a : elements) {
        if (!in[g.inv(a)])
            return false;
        for (auto b : elements)
            if (!in[g.mul(a, b)])
                return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& n)
{
    const auto in = mask_of(g, n);
    for (Elem x = 0; x < g.order(); ++x)
        for (auto h : n.elements)
            if (!in[g.mul(g.mul(g.inv(x), h), x)])
                return false;
    return true;
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> generators)
{
    std::vector<Elem> conjugates;
    for (auto h : distinct(g, generators))
        for (Elem x = 0; x < g.order(); ++x)
            conjugates.push_back(g.mul(g.mul(g.inv(x), h), x));
    return generate(g, conjugates);
}

Subgroup center(const FiniteGroup& g)
{
    Subgroup z;
    for (Elem a = 0; a < g.order(); ++a) {
        bool central = true;
        for (Elem b = 0; b < g.order() && central; ++b)
            central = g.mul(a, b) == g.mul(b, a);
        if (central)
            z.elements.push_back(a);
    }
    return z;
}

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b)
{
    std::vector<char> seen(g.order(), 0);
    std::vector<Elem> comms;
    for (auto x : a.elements)
        for (auto y : b.elements) {
            const Elem c = g.commutator(x, y);
            if (!seen[c]++)
                comms.push_back(c);
        }
    return generate(g, comms);
}

LowerCentralSeries lower_central_series(const FiniteGroup& g)
{
    LowerCentralSeries lcs;
    lcs.terms.push_back(whole(g));
    const Subgroup all = whole(g);
    while (!lcs.terms.back().is_trivial()) {
        Subgroup next = commutator_subgroup(g, lcs.terms.back(), all);
        if (next == lcs.terms.back())
            throw Error(ErrorKind::NotNilpotent,
                        "lower central series stabilizes at a subgroup of order " +
                            std::to_string(next.size()));
        lcs.terms.push_back(std::move(next));
    }
    lcs.nilpotency_class = static_cast<int>(lcs.terms.size()) - 1;
    return lcs;
}

bool is_nilpotent(const FiniteGroup& g)
{
    try {
        lower_central_series(g);
        return true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotNilpotent)
            throw;
        return false;
    }
}

Restriction restrict_to(const FiniteGroup& g, const Subgroup& h)
{
    const std::size_t m = h.size();
    std::vector<Elem> index(g.order(), 0);
    for (std::size_t i = 0; i < m; ++i)
        index[h.elements[i]] = static_cast<Elem>(i);
    std::vector<Elem> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            table[i * m + j] = index[g.mul(h.elements[i], h.elements[j])];
    return {FiniteGroup(FiniteGroup::Unchecked{}, m, std::move(table)), h.elements};
}

Subgroup Quotient::image(const Subgroup& h) const
{
    std::vector<Elem> out;
    for (auto x : h.elements)
        out.push_back(projection[x]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Subgroup{std::move(out)};
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n)
{
    if (!is_normal(g, n))
        throw Error(ErrorKind::NotNormal, "subgroup of order " + std::to_string(n.size()) +
                                              " is not normal");
    constexpr Elem unset = ~Elem{0};
    std::vector<Elem> proj(g.order(), unset);
    std::vector<Elem> reps;
    // Coset labels follow the smallest representative, so the identity coset is 0.
    for (Elem x = 0; x < g.order(); ++x) {
        if (proj[x] != unset)
            continue;
        const auto label = static_cast<Elem>(reps.size());
        reps.push_back(x);
        for (auto h : n.elements)
            proj[g.mul(x, h)] = label;
    }
    const std::size_t m = reps.size();
    std::vector<Elem> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            table[i * m + j] = proj[g.mul(reps[i], reps[j])];
    return {FiniteGroup(FiniteGroup::Unchecked{}, m, std::move(table)), std::move(proj)};
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            table[x * n + y] = static_cast<Elem>(a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb));
    return FiniteGroup(FiniteGroup::Unchecked{}, n, std::move(table));
}

namespace {

std::uint32_t log_base(std::uint64_t value, std::uint32_t p)
{
    std::uint32_t k = 0;
    while (value > 1) {
        value /= p;
        ++k;
    }
    return k;
}

bool is_power_of(std::uint64_t value, std::uint32_t p)
{
    while (value % p == 0)
        value /= p;
    return value == 1;
}

Subgroup elements_of_power_order(const FiniteGroup& g, std::uint32_t p)
{
    Subgroup s;
    for (Elem x = 0; x < g.order(); ++x)
        if (is_power_of(g.element_order(x), p))
            s.elements.push_back(x);
    return s;
}

/// Cyclic factors of an abelian p-group: split off an element of maximal
/// order, which generates a direct summand, and recurse on the quotient.
void peel_cyclic_factors(FiniteGroup g, std::uint32_t p, std::vector<AtomTerm>& out)
{
    while (g.order() > 1) {
        Elem best = g.identity();
        std::uint64_t best_order = 1;
        for (Elem x = 0; x < g.order(); ++x)
            if (auto o = g.element_order(x); o > best_order) {
                best = x;
                best_order = o;
            }
        out.push_back({AbelianAtom::cyclic(Prime{p}, log_base(best_order, p)), 1});
        const Elem gen[] = {best};
        g = quotient(g, generate(g, gen)).group;
    }
}

}  // namespace

AbelianGroup abelian_invariants(const FiniteGroup& g)
{
    if (!g.is_abelian())
        throw Error(ErrorKind::InvalidInput, "abelian invariants of a non-abelian group");
    std::vector<AtomTerm> terms;
    for (auto p : prime_divisors(g.order()))
        peel_cyclic_factors(restrict_to(g, elements_of_power_order(g, p)).group, p, terms);
    return AbelianGroup(std::move(terms));
}

Abelianization abelianization(const FiniteGroup& g)
{
    const Subgroup all = whole(g);
    Quotient q = quotient(g, commutator_subgroup(g, all, all));
    AbelianGroup inv = abelian_invariants(q.group);
    return {std::move(q.group), std::move(inv)};
}

PowerMap power_map(const FiniteGroup& g, Prime p)
{
    std::vector<char> hit(g.order(), 0);
    std::size_t image = 0;
    for (Elem x = 0; x < g.order(); ++x)
        if (!hit[g.pow(x, p.value())]++)
            ++image;
    const bool onto = image == g.order();
    return {onto, onto};
}

BocksteinBasis sigma_finite(const FiniteGroup& g)
{
    lower_central_series(g);
    std::vector<std::uint32_t> obstructed;
    const auto bound = static_cast<std::uint32_t>(std::max<std::size_t>(g.order(), 2));
    for (auto q : primes_up_to(bound))
        if (!power_map(g, Prime{q}).surjective)
            obstructed.push_back(q);
    BocksteinBasis b;
    b.zp = PrimeSet::finite(obstructed);
    b.zpinf = b.zp;
    return b;
}

std::vector<PrimaryPart> primary_decomposition(const FiniteGroup& g)
{
    std::vector<PrimaryPart> parts;
    std::size_t product = 1;
    for (auto q : prime_divisors(g.order())) {
        Subgroup s = elements_of_power_order(g, q);
        if (!is_subgroup(g, s.elements))
            throw Error(ErrorKind::NotNilpotent,
                        "elements of " + std::to_string(q) + "-power order do not form a subgroup");
        product *= s.size();
        parts.push_back({Prime{q}, std::move(s)});
    }
    if (product != g.order())
        throw Error(ErrorKind::NotNilpotent, "primary parts do not multiply to |G|");
    return parts;
}

std::vector<Subgroup> central_subgroup_samples(const FiniteGroup& g, std::uint64_t seed,
                                               std::size_t count)
{
    auto rng = substream(seed, 0);
    const Subgroup z = center(g);
    std::vector<Subgroup> out;
    for (std::size_t i = 0; i < count; ++i) {
        const Elem gen[] = {z.elements[below(rng, z.size())]};
        out.push_back(generate(g, gen));
    }
    if (is_nilpotent(g)) {
        const auto lcs = lower_central_series(g);
        out.push_back(lcs.terms[std::max(lcs.nilpotency_class - 1, 0)]);
    }
    return out;
}

std::vector<Subgroup> normal_subgroup_samples(const FiniteGroup& g, std::uint64_t seed,
                                              std::size_t count)
{
    auto rng = substream(seed, 1);
    std::vector<Subgroup> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Elem> gens{static_cast<Elem>(below(rng, g.order()))};
        if (below(rng, 2))
            gens.push_back(static_cast<Elem>(below(rng, g.order())));
        out.push_back(normal_closure(g, gens));
    }
    return out;
}

}  // namespace bock
