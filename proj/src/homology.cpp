#include "bock/homology.hpp"

#include "bock/error.hpp"

namespace bock {

AbelianGroup h1(const NilpotentGroupDesc& g, const AbelianAtom& c)
{
    return tensor_with(abelianization_of(g), c);
}

bool zpinf_h12_vanishes_finite(const FiniteGroup& g, Prime p)
{
    const AbelianGroup ab = abelianization(g).invariants;
    const AbelianAtom coeff = AbelianAtom::pruefer(p);
    return tensor_with(ab, coeff).is_trivial() && tor_with(ab, coeff).is_trivial();
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
    }
    return "skipped";
}

namespace {

Verdict judge(bool absent_from_sigma, const std::optional<bool>& vanishes)
{
    if (!vanishes)
        return Verdict::Skipped;
    return absent_from_sigma == *vanishes ? Verdict::Pass : Verdict::Fail;
}

template <typename F>
std::optional<bool> try_vanishes(F compute)
{
    try {
        return compute().is_trivial();
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::OutOfScope)
            throw;
        return std::nullopt;
    }
}

}  // namespace

HomologyReport homology_report(const NilpotentGroupDesc& g, Prime p, const std::string& group_id)
{
    HomologyReport r;
    r.group_id = group_id.empty() ? g.kind_name() : group_id;
    r.p = p.value();

    const BocksteinBasis sigma = sigma_nilpotent(g);
    r.q_in_sigma = sigma.has_q;
    r.loc_in_sigma = sigma.loc.contains(p);
    r.zp_in_sigma = sigma.zp.contains(p);
    r.zpinf_in_sigma = sigma.zpinf.contains(p);

    r.h1_q_zero = try_vanishes([&] { return h1(g, AbelianAtom::q()); });
    r.h1_zp_zero = try_vanishes([&] { return h1(g, AbelianAtom::cyclic(p, 1)); });
    if (const auto* f = g.finite())
        r.zpinf_h12_zero = zpinf_h12_vanishes_finite(*f->group, p);

    // F(G) is torsion-free Abelian here, so H_2(F; Z/p^inf) = Λ²F ⊗ Z/p^inf
    // vanishes whenever F ⊗ Z/p^inf does; the H_1 term decides.
    if (const auto* a = g.abelian())
        r.free_part_h1_zpinf_zero =
            try_vanishes([&] { return tensor_with(decompose(*a).free_part, AbelianAtom::pruefer(p)); });
    else if (g.finite())
        r.free_part_h1_zpinf_zero = true;

    r.q_verdict = judge(!r.q_in_sigma, r.h1_q_zero);
    r.zp_verdict = judge(!r.zp_in_sigma, r.h1_zp_zero);
    r.zpinf_verdict = judge(!r.zpinf_in_sigma, r.zpinf_h12_zero);
    r.loc_verdict = judge(!r.loc_in_sigma, r.free_part_h1_zpinf_zero);
    return r;
}

}  // namespace bock
