#include "bock/nilpotent.hpp"

#include <algorithm>

#include "bock/error.hpp"

namespace bock {

Tower Tower::make(std::vector<AbelianGroup> layers, AbelianGroup ab, std::vector<bool> witnessed)
{
    if (layers.size() < 2)
        throw Error(ErrorKind::InvalidInput, "a tower needs at least two layers");
    if (witnessed.size() != layers.size())
        throw Error(ErrorKind::InvalidInput, "a tower needs one witness flag per layer");
    for (const auto& l : layers)
        if (l.is_trivial())
            throw Error(ErrorKind::InvalidInput, "tower layers must be nontrivial");
    return Tower{std::move(layers), std::move(ab), std::move(witnessed)};
}

Tower Tower::make(std::vector<AbelianGroup> layers, AbelianGroup ab, bool witnessed)
{
    const std::size_t c = layers.size();
    return make(std::move(layers), std::move(ab), std::vector<bool>(c, witnessed));
}

bool Tower::fully_witnessed() const
{
    return std::all_of(witnessed.begin(), witnessed.end(), [](bool w) { return w; });
}

std::string NilpotentGroupDesc::kind_name() const
{
    if (abelian())
        return "abelian";
    if (tower())
        return "tower";
    return "finite";
}

int nilpotency_class(const NilpotentGroupDesc& g)
{
    if (const auto* a = g.abelian())
        return a->is_trivial() ? 0 : 1;
    if (const auto* t = g.tower())
        return static_cast<int>(t->nilpotency_class());
    return lower_central_series(*g.finite()->group).nilpotency_class;
}

NilpotentPredicates predicates_nilpotent(const NilpotentGroupDesc& g, Prime p)
{
    if (const auto* a = g.abelian()) {
        const auto d = divisibility(*a, p);
        return {decompose(*a).is_torsion, d.p_divisible, d.uniquely_p_divisible};
    }
    if (const auto* f = g.finite()) {
        const FiniteGroup& fg = *f->group;
        lower_central_series(fg);
        const auto pm = power_map(fg, p);
        return {true, pm.surjective, pm.surjective && pm.injective};
    }

    const Tower& t = *g.tower();
    NilpotentPredicates out{true, std::nullopt, true};
    bool all_divisible = true;
    for (const auto& layer : t.layers) {
        const auto d = divisibility(layer, p);
        out.torsion = out.torsion && decompose(layer).is_torsion;
        out.uniquely_p_divisible = out.uniquely_p_divisible && d.uniquely_p_divisible;
        all_divisible = all_divisible && d.p_divisible;
    }
    if (t.fully_witnessed() || all_divisible)
        out.p_divisible = all_divisible;
    else if (!divisibility(t.layers.back(), p).p_divisible)
        out.p_divisible = false;  // the top layer is a quotient of G
    return out;
}

BocksteinBasis sigma_by_locality(const AbelianGroup& g)
{
    BocksteinBasis b;
    b.has_q = !decompose(g).is_torsion;
    b.zpinf = non_uniquely_divisible_primes(g);
    b.zp = non_divisible_primes(g);
    b.loc = non_divisible_primes(decompose(g).free_part);
    return b;
}

BocksteinBasis sigma_nilpotent(const NilpotentGroupDesc& g)
{
    if (const auto* a = g.abelian())
        return sigma_by_locality(*a);
    if (const auto* f = g.finite())
        return sigma_finite(*f->group);

    const Tower& t = *g.tower();
    if (!t.fully_witnessed())
        throw Error(ErrorKind::Unwitnessed,
                    "tower has a stage without a nilpotent-extension witness");
    BocksteinBasis b;
    for (const auto& layer : t.layers)
        b |= sigma_abelian(layer);
    return b;
}

SigmaSplit sigma_split_td(const BocksteinBasis& b)
{
    SigmaSplit s;
    s.td.zpinf = b.zpinf;
    s.ntd = {b.has_q, b.loc, b.zp, b.zp};
    return s;
}

AbelianGroup abelianization_of(const NilpotentGroupDesc& g)
{
    if (const auto* a = g.abelian())
        return *a;
    if (const auto* t = g.tower())
        return t->ab;
    return abelianization(*g.finite()->group).invariants;
}

CentralSplit split_central(const Tower& t)
{
    std::vector<AbelianGroup> rest(t.layers.begin() + 1, t.layers.end());
    if (rest.size() == 1)
        return {t.layers.front(), NilpotentGroupDesc(rest.front())};
    std::vector<bool> w(t.witnessed.begin() + 1, t.witnessed.end());
    return {t.layers.front(), Tower::make(std::move(rest), t.ab, std::move(w))};
}

Tower gamma_tower(const FiniteGroup& g)
{
    const auto lcs = lower_central_series(g);
    if (lcs.nilpotency_class < 2)
        throw Error(ErrorKind::InvalidInput, "Γ-tower needs nilpotency class >= 2");
    std::vector<AbelianGroup> layers;
    for (int i = lcs.nilpotency_class - 1; i >= 0; --i) {
        const Restriction r = restrict_to(g, lcs.terms[i]);
        Subgroup inner;
        for (Elem x = 0; x < r.embedding.size(); ++x)
            if (lcs.terms[i + 1].contains(r.embedding[x]))
                inner.elements.push_back(x);
        layers.push_back(abelian_invariants(quotient(r.group, inner).group));
    }
    return Tower::make(std::move(layers), abelianization(g).invariants, true);
}

Tower tower_product(const Tower& a, const Tower& b)
{
    const Tower& longer = a.layers.size() >= b.layers.size() ? a : b;
    const Tower& shorter = &longer == &a ? b : a;
    Tower out = longer;
    const std::size_t offset = longer.layers.size() - shorter.layers.size();
    for (std::size_t i = 0; i < shorter.layers.size(); ++i) {
        out.layers[offset + i] += shorter.layers[i];
        out.witnessed[offset + i] = out.witnessed[offset + i] && shorter.witnessed[i];
    }
    out.ab = a.ab + b.ab;
    return out;
}

Tower tower_product(const Tower& a, const AbelianGroup& b)
{
    Tower out = a;
    out.layers.back() += b;
    out.ab += b;
    return out;
}

}  // namespace bock
