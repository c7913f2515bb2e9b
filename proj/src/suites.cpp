#include "bock/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "bock/catalog.hpp"
#include "bock/error.hpp"
#include "bock/finite_group.hpp"
#include "bock/homology.hpp"
#include "bock/random.hpp"

namespace bock {

namespace {

constexpr std::uint32_t kSmallPrimes[] = {2, 3, 5, 7};

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v)
{
    return v[below(rng, v.size())];
}

std::uint32_t small_prime(std::mt19937_64& rng) { return kSmallPrimes[below(rng, 4)]; }

}  // namespace

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

PrimeSet random_primeset(std::mt19937_64& rng, bool cofinite)
{
    static const auto pool = primes_up_to(30);
    std::vector<std::uint32_t> ps;
    const std::size_t count = cofinite ? below(rng, 4) : 1 + below(rng, 4);
    for (std::size_t i = 0; i < count; ++i)
        ps.push_back(pick(rng, pool));
    return cofinite ? PrimeSet::cofinite(ps) : PrimeSet::finite(ps);
}

AbelianGroup random_abelian(std::mt19937_64& rng)
{
    std::vector<AtomTerm> terms;
    const std::size_t count = below(rng, 7);
    for (std::size_t i = 0; i < count; ++i) {
        const Prime p{small_prime(rng)};
        AbelianAtom atom;
        switch (below(rng, 7)) {
        case 0: atom = AbelianAtom::z(); break;
        case 1: atom = AbelianAtom::q(); break;
        case 2: atom = AbelianAtom::cyclic(p, 1 + static_cast<std::uint32_t>(below(rng, 3))); break;
        case 3: atom = AbelianAtom::pruefer(p); break;
        case 4: atom = AbelianAtom::localized(p); break;
        case 5: atom = AbelianAtom::localized_away(random_primeset(rng, below(rng, 2))); break;
        default: atom = AbelianAtom::adic(random_primeset(rng, below(rng, 2))); break;
        }
        terms.push_back({atom, 1 + static_cast<std::uint32_t>(below(rng, 3))});
    }
    return canonicalize(std::move(terms));
}

namespace {

ExtNat random_value(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi)
{
    return ExtNat(lo + below(rng, hi - lo + 1));
}

/// (zp, zpinf, loc) at one prime, consistent with R1-R4 for the given q >= 1.
std::array<ExtNat, 3> valid_point(std::mt19937_64& rng, ExtNat q)
{
    const ExtNat n = below(rng, 20) == 0 ? ExtNat::inf() : random_value(rng, 1, 4);
    const ExtNat zp = below(rng, 2) ? n : n.succ();
    ExtNat loc;
    if (n > q) {
        loc = n.succ();
    } else {
        const ExtNat lo = std::max(q, zp);
        const ExtNat hi = std::max(q, n.succ());
        loc = lo.is_inf() ? lo : random_value(rng, lo.value(), hi.value());
    }
    return {zp, n, loc};
}

std::vector<std::uint32_t> override_sites(std::mt19937_64& rng)
{
    static const auto pool = primes_up_to(50);
    std::set<std::uint32_t> sites;
    const std::size_t count = below(rng, 4);
    for (std::size_t i = 0; i < count; ++i)
        sites.insert(pick(rng, pool));
    return {sites.begin(), sites.end()};
}

}  // namespace

DimensionProfile random_valid_profile(std::mt19937_64& rng)
{
    if (below(rng, 20) == 0)
        return DimensionProfile::constant(0);
    DimensionProfile d;
    d.q = below(rng, 20) == 0 ? ExtNat::inf() : random_value(rng, 1, 3);
    auto generic = valid_point(rng, d.q);
    d.zp.default_value = generic[0];
    d.zpinf.default_value = generic[1];
    d.loc.default_value = generic[2];
    for (auto p : override_sites(rng)) {
        const auto v = valid_point(rng, d.q);
        d.zp.overrides[p] = v[0];
        d.zpinf.overrides[p] = v[1];
        d.loc.overrides[p] = v[2];
    }
    return d;
}

DimensionProfile random_profile(std::mt19937_64& rng)
{
    auto value = [&rng]() { return below(rng, 6) == 5 ? ExtNat::inf() : ExtNat(below(rng, 5)); };
    DimensionProfile d;
    d.q = value();
    for (auto* f : {&d.zp, &d.zpinf, &d.loc})
        f->default_value = value();
    for (auto p : override_sites(rng))
        for (auto* f : {&d.zp, &d.zpinf, &d.loc})
            if (below(rng, 2))
                f->overrides[p] = value();
    return d;
}

bool GeneratedTower::p_divisible_by_definition(Prime p) const
{
    return std::all_of(factors.begin(), factors.end(), [p](const TowerFactor& f) {
        switch (f.kind) {
        case TowerFactor::Kind::UnitriangularOverRing:
            return divisibility(AbelianGroup::of(f.ring), p).p_divisible;
        case TowerFactor::Kind::FiniteTable:
            return power_map(*f.table, p).surjective;
        case TowerFactor::Kind::Abelian:
            return divisibility(f.group, p).p_divisible;
        }
        return false;
    });
}

namespace {

std::vector<std::string> finite_names_of_class_at_least(int c)
{
    std::vector<std::string> out;
    for (const auto& n : standard_finite_names())
        if (resolve(n).metadata.nilpotency_class.value_or(0) >= c)
            out.push_back(n);
    return out;
}

AbelianAtom random_ring(std::mt19937_64& rng)
{
    const Prime p{small_prime(rng)};
    switch (below(rng, 6)) {
    case 0: return AbelianAtom::z();
    case 1: return AbelianAtom::q();
    case 2: return AbelianAtom::localized(p);
    case 3: return canonical_atom(AbelianAtom::localized_away(random_primeset(rng, below(rng, 2))));
    case 4: return AbelianAtom::adic(random_primeset(rng, below(rng, 2)));
    default: return AbelianAtom::cyclic(p, 1 + static_cast<std::uint32_t>(below(rng, 2)));
    }
}

}  // namespace

GeneratedTower random_tower(std::mt19937_64& rng)
{
    static const auto nonabelian_finite = finite_names_of_class_at_least(2);
    const std::size_t count = 1 + below(rng, 3);
    std::optional<Tower> tower;
    GeneratedTower out;
    for (std::size_t i = 0; i < count; ++i) {
        const auto choice = i == 0 ? below(rng, 3) : below(rng, 4);
        std::string label;
        if (choice == 0 || choice == 1) {
            const AbelianAtom ring = random_ring(rng);
            const CatalogEntry e = choice == 0 ? heisenberg_ring(ring) : ut4_ring(ring);
            label = e.name;
            tower = tower ? tower_product(*tower, *e.value.tower()) : *e.value.tower();
            out.factors.push_back({TowerFactor::Kind::UnitriangularOverRing, ring, nullptr, {}});
        } else if (choice == 2) {
            const CatalogEntry& e = resolve(pick(rng, nonabelian_finite));
            label = "gamma_tower(" + e.name + ")";
            const Tower t = gamma_tower(e.table());
            tower = tower ? tower_product(*tower, t) : t;
            out.factors.push_back({TowerFactor::Kind::FiniteTable, {}, e.value.finite()->group, {}});
        } else {
            const AbelianGroup a = random_abelian(rng);
            if (a.is_trivial())
                continue;
            label = a.to_string();
            tower = tower_product(*tower, a);
            out.factors.push_back({TowerFactor::Kind::Abelian, {}, nullptr, a});
        }
        out.label += (out.label.empty() ? "" : " x ") + label;
    }
    out.tower = *tower;
    return out;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
public:
    void check(bool ok, std::string instance, std::string expected, std::string actual)
    {
        if (!ok)
            failures_.push_back({std::move(instance), std::move(expected), std::move(actual)});
    }

    std::vector<SuiteFailure> take()
    {
        std::sort(failures_.begin(), failures_.end());
        return std::move(failures_);
    }

private:
    std::vector<SuiteFailure> failures_;
};

std::string instance_name(std::size_t i, const std::string& what)
{
    std::ostringstream os;
    os << '#' << i << ' ' << what;
    return os.str();
}

BocksteinBasis sigma_of_subgroup(const FiniteGroup& g, const Subgroup& h)
{
    return sigma_finite(restrict_to(g, h).group);
}

/// Catalog groups first, then seeded extras.
template <typename Fixed, typename Random>
void cycle(std::size_t trials, std::uint64_t seed, std::size_t fixed_count, Fixed fixed, Random random)
{
    for (std::size_t i = 0; i < trials; ++i) {
        if (i < fixed_count) {
            fixed(i);
        } else {
            auto rng = substream(seed, i);
            random(i, rng);
        }
    }
}

void suite_sigma_union(Recorder& rec, std::size_t trials, std::uint64_t seed)
{
    static const auto finite = finite_names_of_class_at_least(2);
    const auto& towers = standard_tower_names();

    auto check_finite = [&](std::size_t i, const CatalogEntry& e) {
        const FiniteGroup& g = e.table();
        const auto lcs = lower_central_series(g);
        const Subgroup& k = lcs.terms[lcs.nilpotency_class - 1];
        const BocksteinBasis whole = sigma_finite(g);
        const BocksteinBasis parts = sigma_of_subgroup(g, k) | sigma_finite(quotient(g, k).group);
        rec.check(whole == parts, instance_name(i, e.name + " K=Γ_c"), whole.to_string(),
                  parts.to_string());
    };
    auto check_tower = [&](std::size_t i, const std::string& label, const Tower& t) {
        const BocksteinBasis whole = sigma_nilpotent(t);
        const CentralSplit s = split_central(t);
        const BocksteinBasis parts = sigma_abelian(s.kernel) | sigma_nilpotent(s.quotient);
        rec.check(whole == parts, instance_name(i, label), whole.to_string(), parts.to_string());
    };

    cycle(
        trials, seed, finite.size() + towers.size(),
        [&](std::size_t i) {
            if (i < finite.size())
                check_finite(i, resolve(finite[i]));
            else
                check_tower(i, towers[i - finite.size()], *resolve(towers[i - finite.size()]).value.tower());
        },
        [&](std::size_t i, std::mt19937_64& rng) {
            if (below(rng, 2)) {
                const auto gt = random_tower(rng);
                check_tower(i, gt.label, gt.tower);
            } else {
                const auto& a = resolve(pick(rng, finite));
                const auto& b = resolve(pick(rng, standard_finite_names()));
                if (a.table().order() * b.table().order() <= kMaxCatalogOrder)
                    check_finite(i, direct_product(a, b));
                else
                    check_finite(i, a);
            }
        });
}

void suite_sigma_subset_central(Recorder& rec, std::size_t trials, std::uint64_t seed)
{
    const auto& names = standard_finite_names();
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = substream(seed, i);
        const CatalogEntry& e = resolve(pick(rng, names));
        const FiniteGroup& g = e.table();
        const Subgroup k = central_subgroup_samples(g, rng(), 1).front();
        const BocksteinBasis whole = sigma_finite(g);
        const BocksteinBasis parts = sigma_of_subgroup(g, k) | sigma_finite(quotient(g, k).group);
        rec.check(whole.subset_of(parts),
                  instance_name(i, e.name + " |K|=" + std::to_string(k.size())),
                  "subset of " + parts.to_string(), whole.to_string());
    }
}

void suite_ntd_epi(Recorder& rec, std::size_t trials, std::uint64_t seed)
{
    const auto& names = standard_finite_names();
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = substream(seed, i);
        const CatalogEntry& e = resolve(pick(rng, names));
        const FiniteGroup& g = e.table();
        const Subgroup n = normal_subgroup_samples(g, rng(), 1).front();
        const BocksteinBasis source = sigma_ntd(sigma_finite(g));
        const BocksteinBasis image = sigma_ntd(sigma_finite(quotient(g, n).group));
        rec.check(image.subset_of(source),
                  instance_name(i, e.name + " |N|=" + std::to_string(n.size())),
                  "subset of " + source.to_string(), image.to_string());
    }
}

void suite_ab_sigma(Recorder& rec, std::size_t trials, std::uint64_t seed)
{
    const auto& finite = standard_finite_names();
    const auto& towers = standard_tower_names();

    auto check = [&](std::size_t i, const std::string& label, const BocksteinBasis& sigma,
                     const AbelianGroup& ab) {
        const BocksteinBasis sigma_ab = sigma_abelian(ab);
        rec.check(sigma_ntd(sigma) == sigma_ntd(sigma_ab), instance_name(i, label + " ntd"),
                  sigma_ntd(sigma_ab).to_string(), sigma_ntd(sigma).to_string());
        rec.check(sigma_ab.subset_of(sigma), instance_name(i, label + " Ab"),
                  "subset of " + sigma.to_string(), sigma_ab.to_string());
    };
    auto check_finite = [&](std::size_t i, const CatalogEntry& e) {
        check(i, e.name, sigma_finite(e.table()), abelianization(e.table()).invariants);
    };

    cycle(
        trials, seed, finite.size() + towers.size(),
        [&](std::size_t i) {
            if (i < finite.size()) {
                check_finite(i, resolve(finite[i]));
            } else {
                const auto& e = resolve(towers[i - finite.size()]);
                check(i, e.name, sigma_nilpotent(e.value), e.value.tower()->ab);
            }
        },
        [&](std::size_t i, std::mt19937_64& rng) {
            const auto gt = random_tower(rng);
            check(i, gt.label, sigma_nilpotent(gt.tower), gt.tower.ab);
        });
}

void suite_pdiv_extension(Recorder& rec, std::size_t trials, std::uint64_t seed)
{
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = substream(seed, i);
        const auto gt = random_tower(rng);
        for (auto q : kSmallPrimes) {
            const Prime p{q};
            const auto layer_rule = predicates_nilpotent(gt.tower, p).p_divisible;
            const bool by_definition = gt.p_divisible_by_definition(p);
            const bool by_sigma = !sigma_nilpotent(gt.tower).zp.contains(p);
            const bool by_ab = divisibility(gt.tower.ab, p).p_divisible;
            const bool ok = layer_rule && *layer_rule == by_definition && by_sigma == by_definition &&
                            by_ab == by_definition;
            auto show = [](bool b) { return std::string(b ? "divisible" : "not divisible"); };
            rec.check(ok, instance_name(i, gt.label + " p=" + std::to_string(q)),
                      show(by_definition),
                      "layers " + (layer_rule ? show(*layer_rule) : "indeterminate") + ", sigma " +
                          show(by_sigma) + ", Ab " + show(by_ab));
        }
    }
}

void suite_def_consistency(Recorder& rec, std::size_t trials, std::uint64_t seed)
{
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = substream(seed, i);
        const AbelianGroup g = random_abelian(rng);
        const BocksteinBasis by_torsion = sigma_abelian(g);
        const BocksteinBasis by_locality = sigma_nilpotent(g);
        rec.check(by_torsion == by_locality, instance_name(i, g.to_string()),
                  by_torsion.to_string(), by_locality.to_string());
    }
}

void suite_homology_corollaries(Recorder& rec, std::size_t trials, std::uint64_t seed)
{
    std::vector<std::string> fixed = standard_finite_names();
    fixed.insert(fixed.end(), standard_tower_names().begin(), standard_tower_names().end());
    fixed.insert(fixed.end(), standard_abelian_names().begin(), standard_abelian_names().end());

    auto check = [&](std::size_t i, const std::string& label, const NilpotentGroupDesc& g) {
        for (auto q : kSmallPrimes) {
            const auto r = homology_report(g, Prime{q}, label);
            rec.check(!r.any_failed(), instance_name(i, label + " p=" + std::to_string(q)),
                      "no failed verdict", to_json(r).dump());
        }
    };
    cycle(
        trials, seed, fixed.size(),
        [&](std::size_t i) { check(i, fixed[i], resolve(fixed[i]).value); },
        [&](std::size_t i, std::mt19937_64& rng) {
            if (below(rng, 2)) {
                const auto g = random_abelian(rng);
                check(i, g.to_string(), g);
            } else {
                const auto gt = random_tower(rng);
                check(i, gt.label, gt.tower);
            }
        });
}

void suite_zl_zhat(Recorder& rec, std::size_t trials, std::uint64_t seed)
{
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = substream(seed, i);
        const PrimeSet l = random_primeset(rng, i % 2 == 1);
        const AbelianGroup zl = AbelianGroup::of(AbelianAtom::localized_away(l));
        const AbelianGroup zhat = AbelianGroup::of(AbelianAtom::adic(l));
        const BocksteinBasis a = sigma_abelian(zl), b = sigma_abelian(zhat);
        rec.check(a == b, instance_name(i, "l=" + l.to_string() + " sigma"), a.to_string(),
                  b.to_string());
        const DimensionProfile d = random_valid_profile(rng);
        const ExtNat da = dim_abelian(d, zl), db = dim_abelian(d, zhat);
        rec.check(da == db, instance_name(i, "l=" + l.to_string() + " dim " + to_json(d).dump()),
                  da.to_string(), db.to_string());
    }
}

/// Rules evaluated prime by prime, with no shortcut through defaults.
std::set<std::pair<std::string, std::uint32_t>> brute_force_rules(const DimensionProfile& d,
                                                                  std::uint32_t bound)
{
    std::set<std::pair<std::string, std::uint32_t>> flagged;
    for (auto p : primes_up_to(bound)) {
        const ExtNat zp = d.zp.at(p), zpinf = d.zpinf.at(p), loc = d.loc.at(p);
        if (zp < zpinf || zp > zpinf.succ())
            flagged.insert({"R1", p});
        if (loc < d.q || loc < zp)
            flagged.insert({"R2", p});
        if (loc > d.q && loc > zpinf.succ())
            flagged.insert({"R3", p});
        if (zpinf > d.q && loc != zpinf.succ())
            flagged.insert({"R4", p});
    }
    return flagged;
}

void suite_profile_rules(Recorder& rec, std::size_t trials, std::uint64_t seed)
{
    static const auto all_finite = standard_finite_names();
    for (std::size_t i = 0; i < trials; ++i) {
        auto rng = substream(seed, i);
        const DimensionProfile d = random_valid_profile(rng);
        const std::string tag = to_json(d).dump();

        const auto violations = validate_profile(d);
        rec.check(violations.empty(), instance_name(i, "generated profile valid " + tag), "[]",
                  violations.empty() ? "[]" : violations.front().message);

        // sup over σ(Z) (every Bockstein group) against a scan of primes <= 100
        ExtNat brute = d.q;
        for (const auto* f : {&d.zp, &d.zpinf, &d.loc}) {
            brute = std::max(brute, f->default_value);  // primes above 100
            for (auto p : primes_up_to(100))
                brute = std::max(brute, f->at(p));
        }
        const ExtNat via_defaults = dim_abelian(d, AbelianGroup::of(AbelianAtom::z()));
        rec.check(brute == via_defaults, instance_name(i, "cofinite sup " + tag), brute.to_string(),
                  via_defaults.to_string());

        const AbelianGroup g = random_abelian(rng), h = random_abelian(rng);
        const ExtNat sum = dim_abelian(d, g + h);
        const ExtNat sep = std::max(dim_abelian(d, g), dim_abelian(d, h));
        rec.check(sum == sep, instance_name(i, "union " + g.to_string() + " | " + h.to_string()),
                  sep.to_string(), sum.to_string());

        if (d.q <= ExtNat(1))
            for (auto p : primes_up_to(50)) {
                const ExtNat n = d.zpinf.at(p);
                if (n >= ExtNat(2))
                    rec.check(d.loc.at(p) == n.succ(),
                              instance_name(i, "R4 closure p=" + std::to_string(p) + " " + tag),
                              n.succ().to_string(), d.loc.at(p).to_string());
            }

        const CatalogEntry& e = resolve(pick(rng, all_finite));
        const ExtNat via_ab = dim_sup(d, sigma_abelian(abelianization(e.table()).invariants));
        const ExtNat via_g = dim_sup(d, sigma_finite(e.table()));
        rec.check(via_ab <= via_g, instance_name(i, "Ab monotone " + e.name),
                  "<= " + via_g.to_string(), via_ab.to_string());

        // arbitrary profiles: the default-aware validator against prime-by-prime evaluation
        const DimensionProfile any = random_profile(rng);
        std::set<std::pair<std::string, std::uint32_t>> reported;
        bool generic_flagged = false;
        for (const auto& v : validate_profile(any)) {
            if (v.rule == "R0")
                continue;
            if (v.p)
                reported.insert({v.rule, *v.p});
            else
                generic_flagged = true;
        }
        auto brute_flags = brute_force_rules(any, 100);
        const auto sites = any.override_primes();
        bool generic_brute = false;
        for (auto it = brute_flags.begin(); it != brute_flags.end();) {
            if (!std::binary_search(sites.begin(), sites.end(), it->second)) {
                generic_brute = true;
                it = brute_flags.erase(it);
            } else {
                ++it;
            }
        }
        rec.check(reported == brute_flags && generic_flagged == generic_brute,
                  instance_name(i, "validator vs scan " + to_json(any).dump()),
                  std::to_string(brute_flags.size()) + " site flags, generic " +
                      (generic_brute ? "flagged" : "clean"),
                  std::to_string(reported.size()) + " site flags, generic " +
                      (generic_flagged ? "flagged" : "clean"));
    }
}

using SuiteFn = void (*)(Recorder&, std::size_t, std::uint64_t);

struct SuiteEntry {
    SuiteInfo info;
    SuiteFn run;
};

const std::vector<SuiteEntry>& registry()
{
    static const std::vector<SuiteEntry> suites = {
        {{"sigma-union", "σ(G) = σ(K) ∪ σ(I) for K = Γ_c(G) and tower splits", 100},
         suite_sigma_union},
        {{"sigma-subset-central", "σ(G) ⊆ σ(K) ∪ σ(G/K) for central K", 100},
         suite_sigma_subset_central},
        {{"ntd-epi", "σ_NTD(G/N) ⊆ σ_NTD(G)", 100}, suite_ntd_epi},
        {{"ab-sigma", "σ_NTD(G) = σ_NTD(Ab(G)) and σ(Ab(G)) ⊆ σ(G)", 100}, suite_ab_sigma},
        {{"pdiv-extension", "witnessed tower is p-divisible iff every layer is", 100},
         suite_pdiv_extension},
        {{"def-consistency", "torsion clauses and locality clauses agree on Abelian groups", 200},
         suite_def_consistency},
        {{"homology-corollaries", "Q, Z/p, Z/p^inf, Z_(p) membership via low-degree homology", 100},
         suite_homology_corollaries},
        {{"zl-zhat", "σ(Z_l) = σ(Zhat_l) and equal dimensions", 50}, suite_zl_zhat},
        {{"profile-rules", "dimension profile calculus invariants", 50}, suite_profile_rules},
    };
    return suites;
}

}  // namespace

const std::vector<SuiteInfo>& suite_list()
{
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& s : registry())
            v.push_back(s.info);
        return v;
    }();
    return infos;
}

SuiteResult run_suite(std::string_view name, std::size_t trials, std::uint64_t seed)
{
    for (const auto& s : registry()) {
        if (s.info.name != name)
            continue;
        const auto start = Clock::now();
        Recorder rec;
        s.run(rec, trials, seed);
        SuiteResult r;
        r.suite = std::string(name);
        r.instances = trials;
        r.failures = rec.take();
        r.seed = seed;
        r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return r;
    }
    throw Error(ErrorKind::UnknownName, "unknown suite '" + std::string(name) + "'");
}

std::string format_text(const SuiteResult& r)
{
    std::set<std::string> failed_instances;
    for (const auto& f : r.failures)
        failed_instances.insert(f.instance.substr(0, f.instance.find(' ')));
    const std::size_t passed = r.instances - std::min(r.instances, failed_instances.size());

    std::ostringstream os;
    os << r.suite << ": " << (r.passed() ? "PASS " : "FAIL ") << passed << '/' << r.instances
       << " seed=" << r.seed << '\n';
    for (const auto& f : r.failures)
        os << "  " << f.instance << "\n    expected: " << f.expected << "\n    actual:   "
           << f.actual << '\n';
    return os.str();
}

json to_json(const SuiteResult& r)
{
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"instance", f.instance}, {"expected", f.expected}, {"actual", f.actual}});
    return {{"suite", r.suite},
            {"instances", r.instances},
            {"passed", r.passed()},
            {"failures", failures},
            {"seed", r.seed},
            {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace bock
