#include <doctest.h>

#include "bock/catalog.hpp"
#include "bock/homology.hpp"

using namespace bock;

namespace {

AbelianGroup of(const AbelianAtom& a, std::uint32_t m = 1) { return AbelianGroup::of(a, m); }

}  // namespace

TEST_SUITE("homology") {

TEST_CASE("first homology")
{
    CHECK(h1(resolve("quaternion8").value, AbelianAtom::cyclic(Prime{2}, 1)) ==
          of(AbelianAtom::cyclic(Prime{2}, 1), 2));
    CHECK(h1(resolve("cyclic(3)").value, AbelianAtom::q()).is_trivial());
    CHECK(h1(resolve("heisenberg_ring(Z)").value, AbelianAtom::q()) == of(AbelianAtom::q(), 2));
}

TEST_CASE("Z/p^inf coefficients on finite groups")
{
    const auto& q8 = resolve("quaternion8").table();
    CHECK_FALSE(zpinf_h12_vanishes_finite(q8, Prime{2}));
    CHECK(zpinf_h12_vanishes_finite(q8, Prime{3}));
    for (auto p : {2u, 3u, 5u})
        CHECK(zpinf_h12_vanishes_finite(FiniteGroup::trivial(), Prime{p}));
}

TEST_CASE("homology verdicts on small groups")
{
    const auto q8 = homology_report(resolve("quaternion8").value, Prime{2}, "Q8");
    CHECK(q8.zp_in_sigma);
    CHECK(q8.h1_zp_zero == false);
    CHECK(q8.zp_verdict == Verdict::Pass);
    CHECK(q8.zpinf_verdict == Verdict::Pass);
    CHECK_FALSE(q8.any_failed());

    const auto z3 = homology_report(resolve("cyclic(3)").value, Prime{2});
    CHECK_FALSE(z3.zp_in_sigma);
    CHECK(z3.h1_zp_zero == true);
    CHECK(z3.zp_verdict == Verdict::Pass);

    for (auto p : {2u, 3u, 5u, 7u}) {
        const auto q = homology_report(of(AbelianAtom::q()), Prime{p});
        CHECK(q.q_in_sigma);
        CHECK(q.h1_q_zero == false);
        CHECK(q.q_verdict == Verdict::Pass);
        CHECK(q.loc_verdict == Verdict::Pass);
        CHECK_FALSE(q.any_failed());
    }
}

TEST_CASE("faces without data are skipped, not failed")
{
    const auto t = homology_report(resolve("heisenberg_ring(Z)").value, Prime{2});
    CHECK(t.zpinf_verdict == Verdict::Skipped);
    CHECK(t.loc_verdict == Verdict::Skipped);
    CHECK(t.q_verdict == Verdict::Pass);
    CHECK(t.zp_verdict == Verdict::Pass);

    const auto adic = homology_report(of(AbelianAtom::adic(PrimeSet::finite({2}))), Prime{3});
    CHECK(adic.q_verdict == Verdict::Skipped);
    CHECK_FALSE(adic.any_failed());
    CHECK(to_string(Verdict::Skipped) == "skipped");
}

TEST_CASE("no failures across the catalog")
{
    std::vector<std::string> names = standard_finite_names();
    names.insert(names.end(), standard_tower_names().begin(), standard_tower_names().end());
    names.insert(names.end(), standard_abelian_names().begin(), standard_abelian_names().end());
    for (const auto& name : names)
        for (auto p : {2u, 3u, 5u, 7u}) {
            CAPTURE(name);
            CAPTURE(p);
            CHECK_FALSE(homology_report(resolve(name).value, Prime{p}, name).any_failed());
        }
}

}
