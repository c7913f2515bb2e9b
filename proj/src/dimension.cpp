#include "bock/dimension.hpp"

#include <algorithm>
#include <set>

namespace bock {

ExtNat PrimeFamily::at(std::uint32_t p) const
{
    auto it = overrides.find(p);
    return it == overrides.end() ? default_value : it->second;
}

ExtNat PrimeFamily::sup_over(const PrimeSet& s) const
{
    ExtNat best = 0;
    if (s.is_finite()) {
        for (auto p : s.listed())
            best = std::max(best, at(p));
        return best;
    }
    // Infinitely many members of s carry the default.
    best = default_value;
    for (const auto& [p, v] : overrides)
        if (s.contains(p))
            best = std::max(best, v);
    return best;
}

std::vector<std::uint32_t> DimensionProfile::override_primes() const
{
    std::set<std::uint32_t> ps;
    for (const auto* f : {&zp, &zpinf, &loc})
        for (const auto& [p, v] : f->overrides)
            ps.insert(p);
    return {ps.begin(), ps.end()};
}

namespace {

struct Point {
    ExtNat zp, zpinf, loc;
};

std::string where(const std::optional<std::uint32_t>& p)
{
    return p ? "at p=" + std::to_string(*p) : "at generic p";
}

void check_point(ExtNat q, const Point& v, const std::optional<std::uint32_t>& p,
                 std::vector<Violation>& out)
{
    auto add = [&](std::string rule, std::string detail) {
        out.push_back({rule, p, rule + " " + where(p) + ": " + detail});
    };
    if (!(v.zpinf <= v.zp && v.zp <= v.zpinf.succ()))
        add("R1", "Z/p=" + v.zp.to_string() + " outside [Z/p^inf, Z/p^inf+1] = [" +
                      v.zpinf.to_string() + ", " + v.zpinf.succ().to_string() + "]");
    if (const ExtNat lo = std::max(q, v.zp); v.loc < lo)
        add("R2", "Z_(p)=" + v.loc.to_string() + " below max(Q, Z/p)=" + lo.to_string());
    if (const ExtNat hi = std::max(q, v.zpinf.succ()); v.loc > hi)
        add("R3", "Z_(p)=" + v.loc.to_string() + " above max(Q, Z/p^inf+1)=" + hi.to_string());
    if (v.zpinf > q && v.loc != v.zpinf.succ())
        add("R4", "expected loc=" + v.zpinf.succ().to_string());
}

}  // namespace

std::vector<Violation> validate_profile(const DimensionProfile& d)
{
    std::vector<Violation> out;

    std::vector<ExtNat> values{d.q, d.zp.default_value, d.zpinf.default_value, d.loc.default_value};
    for (const auto* f : {&d.zp, &d.zpinf, &d.loc})
        for (const auto& [p, v] : f->overrides)
            values.push_back(v);
    const bool any_zero = std::any_of(values.begin(), values.end(), [](ExtNat v) { return v == 0; });
    const bool any_positive = std::any_of(values.begin(), values.end(), [](ExtNat v) { return v > 0; });
    if (any_zero && any_positive)
        out.push_back({"R0", std::nullopt, "R0: profile mixes zero and positive dimensions"});

    for (auto p : d.override_primes())
        check_point(d.q, {d.zp.at(p), d.zpinf.at(p), d.loc.at(p)}, p, out);
    check_point(d.q, {d.zp.default_value, d.zpinf.default_value, d.loc.default_value},
                std::nullopt, out);
    return out;
}

ExtNat dim_sup(const DimensionProfile& d, const BocksteinBasis& b)
{
    ExtNat best = 0;
    if (b.has_q)
        best = d.q;
    best = std::max(best, d.loc.sup_over(b.loc));
    best = std::max(best, d.zp.sup_over(b.zp));
    best = std::max(best, d.zpinf.sup_over(b.zpinf));
    return best;
}

ExtNat dim_abelian(const DimensionProfile& d, const AbelianGroup& g)
{
    return dim_sup(d, sigma_abelian(g));
}

bool dim_nilpotent_le1(const DimensionProfile& d, const NilpotentGroupDesc& g)
{
    return dim_sup(d, sigma_nilpotent(g)) <= ExtNat(1);
}

}  // namespace bock
