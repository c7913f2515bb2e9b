#include "bock/abelian.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "bock/error.hpp"

namespace bock {

AbelianAtom AbelianAtom::cyclic(Prime p, std::uint32_t k)
{
    if (k == 0)
        throw Error(ErrorKind::InvalidInput, "cyclic atom needs exponent k >= 1");
    return {Kind::Cyclic, p.value(), k, {}};
}

std::string AbelianAtom::to_string() const
{
    std::ostringstream os;
    auto set_body = [&os](const PrimeSet& s) {
        if (s.is_finite()) {
            os << '{';
            for (std::size_t i = 0; i < s.listed().size(); ++i)
                os << (i ? ", " : "") << s.listed()[i];
            os << '}';
        } else {
            os << '{' << s.to_string() << '}';
        }
    };
    switch (kind) {
    case Kind::Z: os << "Z"; break;
    case Kind::Q: os << "Q"; break;
    case Kind::Cyclic: {
        std::uint64_t order = 1;
        for (std::uint32_t i = 0; i < k; ++i)
            order *= p;
        os << "Z/" << order;
        break;
    }
    case Kind::Pruefer: os << "Z/" << p << "^inf"; break;
    case Kind::Localized: os << "Z_(" << p << ")"; break;
    case Kind::LocalizedAway: os << "Z_"; set_body(l); break;
    case Kind::Adic: os << "Zhat_"; set_body(l); break;
    }
    return os.str();
}

AbelianAtom canonical_atom(AbelianAtom atom)
{
    using K = AbelianAtom::Kind;
    switch (atom.kind) {
    case K::Cyclic:
        if (atom.k == 0)
            throw Error(ErrorKind::InvalidInput, "cyclic atom needs exponent k >= 1");
        [[fallthrough]];
    case K::Pruefer:
    case K::Localized:
        (void)Prime{atom.p};
        atom.l = PrimeSet::none();
        if (atom.kind != K::Cyclic)
            atom.k = 0;
        return atom;
    case K::LocalizedAway:
        if (atom.l.empty())
            return AbelianAtom::q();
        if (atom.l.is_all())
            return AbelianAtom::z();
        if (atom.l.is_finite() && atom.l.listed().size() == 1)
            return AbelianAtom::localized(Prime{atom.l.listed().front()});
        atom.p = atom.k = 0;
        return atom;
    case K::Adic:
        if (atom.l.empty())
            throw Error(ErrorKind::InvalidInput, "adic atom needs a nonempty prime set");
        atom.p = atom.k = 0;
        return atom;
    case K::Z:
    case K::Q:
        return {atom.kind, 0, 0, {}};
    }
    return atom;
}

AbelianGroup canonicalize(std::vector<AtomTerm> terms)
{
    for (auto& t : terms)
        t.atom = canonical_atom(std::move(t.atom));
    std::erase_if(terms, [](const AtomTerm& t) { return t.mult == 0; });
    std::sort(terms.begin(), terms.end());
    std::vector<AtomTerm> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().atom == t.atom)
            merged.back().mult += t.mult;
        else
            merged.push_back(std::move(t));
    }
    return AbelianGroup(std::move(merged));
}

AbelianGroup::AbelianGroup(std::initializer_list<AtomTerm> terms)
    : AbelianGroup(std::vector<AtomTerm>(terms))
{
}

AbelianGroup::AbelianGroup(std::vector<AtomTerm> terms)
{
    const bool canonical = std::is_sorted(terms.begin(), terms.end()) &&
                           std::all_of(terms.begin(), terms.end(), [](const AtomTerm& t) {
                               return t.mult > 0 && canonical_atom(t.atom) == t.atom;
                           }) &&
                           std::adjacent_find(terms.begin(), terms.end(),
                                              [](const AtomTerm& a, const AtomTerm& b) {
                                                  return a.atom == b.atom;
                                              }) == terms.end();
    if (canonical)
        terms_ = std::move(terms);
    else
        terms_ = canonicalize(std::move(terms)).terms_;
}

bool AbelianGroup::is_finitely_generated() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const AtomTerm& t) { return t.atom.is_finitely_generated(); });
}

bool AbelianGroup::is_finite() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const AtomTerm& t) {
        return t.atom.kind == AbelianAtom::Kind::Cyclic;
    });
}

AbelianGroup AbelianGroup::operator+(const AbelianGroup& other) const
{
    auto terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return canonicalize(std::move(terms));
}

AbelianGroup AbelianGroup::scaled(std::uint32_t factor) const
{
    if (factor == 0)
        throw Error(ErrorKind::InvalidInput, "multiplicity scale factor must be positive");
    auto terms = terms_;
    for (auto& t : terms)
        t.mult *= factor;
    return AbelianGroup(std::move(terms));
}

std::string AbelianGroup::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty())
            out += " + ";
        out += t.atom.to_string();
        if (t.mult != 1)
            out += (t.atom.kind == AbelianAtom::Kind::Z || t.atom.kind == AbelianAtom::Kind::Q ? "^"
                                                                                               : "^x") +
                   std::to_string(t.mult);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Atom fact table
// ---------------------------------------------------------------------------

namespace {

using K = AbelianAtom::Kind;

PrimeSet atom_non_divisible(const AbelianAtom& a)
{
    switch (a.kind) {
    case K::Z: return PrimeSet::all();
    case K::Q: return PrimeSet::none();
    case K::Cyclic: return PrimeSet::finite({a.p});
    case K::Pruefer: return PrimeSet::none();
    case K::Localized: return PrimeSet::finite({a.p});
    case K::LocalizedAway:
    case K::Adic: return a.l;
    }
    return PrimeSet::none();
}

PrimeSet atom_non_uniquely_divisible(const AbelianAtom& a)
{
    if (a.kind == K::Pruefer)
        return PrimeSet::finite({a.p});
    return atom_non_divisible(a);
}

bool is_bockstein_coefficient(const AbelianAtom& c)
{
    return c.kind == K::Z || c.kind == K::Q || c.kind == K::Cyclic || c.kind == K::Pruefer ||
           c.kind == K::Localized;
}

/// Primes not inverted in a rank-one torsion-free atom viewed as a subring of Q.
PrimeSet non_inverted(const AbelianAtom& a)
{
    return atom_non_divisible(a);
}

std::optional<AbelianAtom> tensor_atoms(const AbelianAtom& a, const AbelianAtom& c)
{
    if (c.kind == K::Z)
        return a;
    if (a.kind == K::Z)
        return c;
    switch (a.kind) {
    case K::Q:
    case K::Localized:
    case K::LocalizedAway: {
        const PrimeSet kept = non_inverted(a);
        switch (c.kind) {
        case K::Q: return AbelianAtom::q();
        case K::Cyclic:
        case K::Pruefer:
            if (kept.contains(c.p))
                return c;
            return std::nullopt;
        case K::Localized:
            return canonical_atom(AbelianAtom::localized_away(kept & PrimeSet::finite({c.p})));
        default: break;
        }
        break;
    }
    case K::Adic:
        if (c.kind == K::Cyclic || c.kind == K::Pruefer) {
            if (a.l.contains(c.p))
                return c;
            return std::nullopt;
        }
        throw Error(ErrorKind::OutOfScope, a.to_string() + " ⊗ " + c.to_string() +
                                               " has uncountable rank");
    case K::Cyclic:
        switch (c.kind) {
        case K::Q:
        case K::Pruefer: return std::nullopt;
        case K::Cyclic:
            if (a.p == c.p)
                return AbelianAtom::cyclic(Prime{a.p}, std::min(a.k, c.k));
            return std::nullopt;
        case K::Localized:
            if (a.p == c.p)
                return a;
            return std::nullopt;
        default: break;
        }
        break;
    case K::Pruefer:
        if (c.kind == K::Localized && c.p == a.p)
            return a;
        return std::nullopt;
    case K::Z: break;
    }
    return std::nullopt;
}

std::optional<AbelianAtom> tor_atoms(const AbelianAtom& a, const AbelianAtom& c)
{
    if (!a.is_torsion() || !c.is_torsion() || a.p != c.p)
        return std::nullopt;
    const Prime p{a.p};
    if (a.kind == K::Cyclic && c.kind == K::Cyclic)
        return AbelianAtom::cyclic(p, std::min(a.k, c.k));
    if (a.kind == K::Cyclic)
        return a;  // Tor(Z/p^k, Z/p^inf) = Z/p^k
    if (c.kind == K::Cyclic)
        return c;  // Tor(Z/p^inf, Z/p^j) = Z/p^j
    return a;      // Tor(Z/p^inf, Z/p^inf) = Z/p^inf
}

template <typename AtomOp>
AbelianGroup termwise(const AbelianGroup& g, const AbelianAtom& c, AtomOp op)
{
    if (!is_bockstein_coefficient(c))
        throw Error(ErrorKind::InvalidInput, "coefficient " + c.to_string() +
                                                 " is not Z, Q, Z/p^k, Z/p^inf or Z_(p)");
    std::vector<AtomTerm> out;
    for (const auto& t : g.terms())
        if (auto r = op(t.atom, c))
            out.push_back({*r, t.mult});
    return AbelianGroup(std::move(out));
}

}  // namespace

// ---------------------------------------------------------------------------

AbelianGroup Decomposition::tor_p(Prime p) const
{
    std::vector<AtomTerm> out;
    for (const auto& t : tor.terms())
        if (t.atom.p == p.value())
            out.push_back(t);
    return AbelianGroup(std::move(out));
}

AbelianGroup Decomposition::f_p(Prime p) const
{
    std::vector<AtomTerm> out;
    for (const auto& t : source.terms())
        if (!(t.atom.is_torsion() && t.atom.p == p.value()))
            out.push_back(t);
    return AbelianGroup(std::move(out));
}

Decomposition decompose(const AbelianGroup& g)
{
    std::vector<AtomTerm> tor, free;
    for (const auto& t : g.terms())
        (t.atom.is_torsion() ? tor : free).push_back(t);
    Decomposition d;
    d.is_torsion = free.empty();
    d.tor = AbelianGroup(std::move(tor));
    d.free_part = AbelianGroup(std::move(free));
    d.source = g;
    return d;
}

Divisibility divisibility(const AbelianGroup& g, Prime p)
{
    Divisibility d{true, true};
    for (const auto& t : g.terms()) {
        if (atom_non_divisible(t.atom).contains(p))
            d.p_divisible = false;
        if (atom_non_uniquely_divisible(t.atom).contains(p))
            d.uniquely_p_divisible = false;
    }
    return d;
}

PrimeSet non_divisible_primes(const AbelianGroup& g)
{
    PrimeSet out;
    for (const auto& t : g.terms())
        out |= atom_non_divisible(t.atom);
    return out;
}

PrimeSet non_uniquely_divisible_primes(const AbelianGroup& g)
{
    PrimeSet out;
    for (const auto& t : g.terms())
        out |= atom_non_uniquely_divisible(t.atom);
    return out;
}

BocksteinBasis sigma_abelian(const AbelianGroup& g)
{
    const Decomposition d = decompose(g);
    // F(G) not p-divisible: clauses 2, 3 and 4 all fire at these primes.
    const PrimeSet free_obstruction = non_divisible_primes(d.free_part);

    std::vector<std::uint32_t> torsion_primes, torsion_non_divisible;
    for (const auto& t : d.tor.terms())
        torsion_primes.push_back(t.atom.p);
    const PrimeSet torsion = PrimeSet::finite(torsion_primes);
    for (auto q : torsion.listed()) {
        const Prime p{q};
        if (!divisibility(d.tor_p(p), p).p_divisible)
            torsion_non_divisible.push_back(q);
    }

    BocksteinBasis b;
    b.has_q = !d.free_part.is_trivial();
    b.zpinf = torsion | free_obstruction;
    b.zp = PrimeSet::finite(torsion_non_divisible) | free_obstruction;
    b.loc = free_obstruction;
    return b;
}

AbelianGroup tensor_with(const AbelianGroup& g, const AbelianAtom& c)
{
    return termwise(g, canonical_atom(c), tensor_atoms);
}

AbelianGroup tor_with(const AbelianGroup& g, const AbelianAtom& c)
{
    return termwise(g, canonical_atom(c), tor_atoms);
}

}  // namespace bock
