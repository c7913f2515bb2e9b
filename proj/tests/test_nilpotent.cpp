#include <doctest.h>

#include "bock/catalog.hpp"
#include "bock/error.hpp"
#include "bock/nilpotent.hpp"
#include "bock/random.hpp"
#include "bock/suites.hpp"

using namespace bock;

namespace {

const AbelianAtom Z = AbelianAtom::z();
const AbelianAtom Q = AbelianAtom::q();

AbelianGroup of(const AbelianAtom& a, std::uint32_t m = 1) { return AbelianGroup::of(a, m); }
AbelianGroup cyc(std::uint32_t p, std::uint32_t k, std::uint32_t m = 1)
{
    return of(AbelianAtom::cyclic(Prime{p}, k), m);
}

const Tower& ut3z() { return *resolve("heisenberg_ring(Z)").value.tower(); }

BocksteinBasis all_primes_with_q() { return {true, PrimeSet::all(), PrimeSet::all(), PrimeSet::all()}; }

}  // namespace

TEST_SUITE("nilpotent") {

TEST_CASE("tower construction")
{
    CHECK_THROWS_AS(Tower::make({of(Z)}, of(Z)), Error);
    CHECK_THROWS_AS(Tower::make({of(Z), AbelianGroup::trivial()}, of(Z)), Error);
    CHECK_THROWS_AS(Tower::make({of(Z), of(Z)}, of(Z), std::vector<bool>{true}), Error);
    const auto& t = ut3z();
    CHECK(t.layers == std::vector<AbelianGroup>{of(Z), of(Z, 2)});
    CHECK(t.ab == of(Z, 2));
    CHECK(t.fully_witnessed());
}

TEST_CASE("nilpotency class")
{
    CHECK(nilpotency_class(of(Z, 2)) == 1);
    CHECK(nilpotency_class(ut3z()) == 2);
    CHECK(nilpotency_class(AbelianGroup::trivial()) == 0);
    CHECK(nilpotency_class(resolve("ut4_mod2").value) == 3);
    CHECK(nilpotency_class(resolve("ut4_ring(Z)").value) == 3);
}

TEST_CASE("predicates")
{
    const auto a = predicates_nilpotent(ut3z(), Prime{2});
    CHECK_FALSE(a.torsion);
    CHECK(a.p_divisible == false);
    CHECK_FALSE(a.uniquely_p_divisible);

    for (auto q : {2u, 3u, 5u, 7u, 11u}) {
        const auto b = predicates_nilpotent(resolve("heisenberg_ring(Q)").value, Prime{q});
        CHECK_FALSE(b.torsion);
        CHECK(b.p_divisible == true);
        CHECK(b.uniquely_p_divisible);
    }

    const auto c = predicates_nilpotent(resolve("ut3_mod(3,1)").value, Prime{3});
    CHECK(c.torsion);
    CHECK(c.p_divisible == false);
    CHECK_FALSE(c.uniquely_p_divisible);
}

// In UT(3, Q), [[1,a,c],[0,1,b],[0,0,1]] has the p-th root with entries
// a/p, b/p, c/p - (p-1)ab/(2p^2): the n-th power of the root has upper
// corner n*c' + n(n-1)/2 * a'b'. Checked with exact rationals.
TEST_CASE("p-th roots in UT(3, Q)")
{
    struct Rat {
        long long n, d;
    };
    auto norm = [](Rat r) {
        long long a = r.n < 0 ? -r.n : r.n, b = r.d;
        while (b) {
            const long long t = a % b;
            a = b;
            b = t;
        }
        return Rat{r.n / (a ? a : 1), r.d / (a ? a : 1)};
    };
    auto add = [&](Rat x, Rat y) { return norm({x.n * y.d + y.n * x.d, x.d * y.d}); };
    auto mul = [&](Rat x, Rat y) { return norm({x.n * y.n, x.d * y.d}); };
    for (long long p : {2, 3, 5, 7})
        for (long long a = -2; a <= 2; ++a)
            for (long long b = -2; b <= 2; ++b)
                for (long long c = -2; c <= 2; ++c) {
                    const Rat ra{a, p}, rb{b, p};
                    const Rat rc = add({c, p}, {-(p - 1) * a * b, 2 * p * p});
                    // power by repeated multiplication of (x, y, z) triples
                    Rat x{0, 1}, y{0, 1}, z{0, 1};
                    for (long long i = 0; i < p; ++i) {
                        z = add(add(z, rc), mul(x, rb));
                        x = add(x, ra);
                        y = add(y, rb);
                    }
                    const Rat ex = norm({a, 1}), ey = norm({b, 1}), ez = norm({c, 1});
                    CHECK(x.n * ex.d == ex.n * x.d);
                    CHECK(y.n * ey.d == ey.n * y.d);
                    CHECK(z.n * ez.d == ez.n * z.d);
                }
}

TEST_CASE("sigma of nilpotent descriptors")
{
    CHECK(sigma_nilpotent(ut3z()) == all_primes_with_q());
    CHECK(sigma_nilpotent(resolve("ut3_mod(5,1)").value) ==
          BocksteinBasis{false, {}, PrimeSet::finite({5}), PrimeSet::finite({5})});
    // the same group through its tower Z/5 -> G -> (Z/5)^2
    const auto t = Tower::make({cyc(5, 1), cyc(5, 1, 2)}, cyc(5, 1, 2));
    CHECK(sigma_nilpotent(t) == sigma_nilpotent(resolve("ut3_mod(5,1)").value));
    CHECK(sigma_nilpotent(of(Z)) == sigma_abelian(of(Z)));

    auto unwitnessed = ut3z();
    unwitnessed.witnessed[0] = false;
    try {
        sigma_nilpotent(unwitnessed);
        FAIL("expected Unwitnessed");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unwitnessed);
    }
}

TEST_CASE("unwitnessed p-divisibility is decided only where it is safe")
{
    auto t = Tower::make({of(Z), of(Q, 2)}, of(Q, 2), std::vector<bool>{false, true});
    CHECK_FALSE(predicates_nilpotent(t, Prime{2}).p_divisible.has_value());
    t.layers[1] = of(Z, 2);
    CHECK(predicates_nilpotent(t, Prime{2}).p_divisible == false);
    t.layers = {of(Q), of(Q, 2)};
    CHECK(predicates_nilpotent(t, Prime{2}).p_divisible == true);
}

TEST_CASE("definition routes agree on Abelian groups")
{
    for (std::uint64_t i = 0; i < 500; ++i) {
        auto rng = substream(31, i);
        const AbelianGroup g = random_abelian(rng);
        CAPTURE(g.to_string());
        CHECK(sigma_by_locality(g) == sigma_abelian(g));
    }
}

TEST_CASE("torsion-divisible split")
{
    const auto s4 = sigma_split_td(sigma_abelian(cyc(2, 2)));
    CHECK(s4.td == BocksteinBasis{false, {}, {}, PrimeSet::finite({2})});
    CHECK(s4.ntd == BocksteinBasis{false, {}, PrimeSet::finite({2}), PrimeSet::finite({2})});

    const auto sq = sigma_split_td(sigma_abelian(of(Q)));
    CHECK(sq.td.empty());
    CHECK(sq.ntd == BocksteinBasis{true, {}, {}, {}});

    const auto sz = sigma_split_td(sigma_abelian(of(Z)));
    CHECK(sz.td == BocksteinBasis{false, {}, {}, PrimeSet::all()});
    CHECK(sz.ntd == all_primes_with_q());

    for (std::uint64_t i = 0; i < 200; ++i) {
        auto rng = substream(32, i);
        const auto s = sigma_abelian(random_abelian(rng));
        CHECK(sigma_split_td(s).reconstruct() == s);
    }
}

TEST_CASE("central split of a tower")
{
    const auto s = split_central(ut3z());
    CHECK(s.kernel == of(Z));
    REQUIRE(s.quotient.abelian());
    CHECK(*s.quotient.abelian() == of(Z, 2));

    const auto s4 = split_central(*resolve("ut4_ring(Z)").value.tower());
    REQUIRE(s4.quotient.tower());
    CHECK(s4.quotient.tower()->layers.size() == 2);
}

TEST_CASE("gamma towers of finite groups")
{
    for (const auto& name : standard_finite_names()) {
        const auto& e = resolve(name);
        if (e.metadata.nilpotency_class.value_or(0) < 2)
            continue;
        CAPTURE(name);
        const Tower t = gamma_tower(e.table());
        CHECK(static_cast<int>(t.nilpotency_class()) == *e.metadata.nilpotency_class);
        CHECK(t.layers.back() == t.ab);
        CHECK(sigma_nilpotent(t) == sigma_finite(e.table()));
    }
    CHECK_THROWS_AS(gamma_tower(resolve("cyclic(4)").table()), Error);
}

TEST_CASE("tower products")
{
    const auto p = tower_product(ut3z(), *resolve("ut4_ring(Q)").value.tower());
    CHECK(p.layers == std::vector<AbelianGroup>{of(Q), of(Z) + of(Q, 2), of(Z, 2) + of(Q, 3)});
    CHECK(p.ab == of(Z, 2) + of(Q, 3));
    const auto q = tower_product(ut3z(), cyc(3, 1));
    CHECK(q.layers.back() == of(Z, 2) + cyc(3, 1));
    CHECK(q.ab == of(Z, 2) + cyc(3, 1));
}

TEST_CASE("generated towers: layer rule matches the definition")
{
    for (std::uint64_t i = 0; i < 100; ++i) {
        auto rng = substream(33, i);
        const auto gt = random_tower(rng);
        CAPTURE(gt.label);
        for (auto q : {2u, 3u, 5u, 7u}) {
            const auto rule = predicates_nilpotent(gt.tower, Prime{q}).p_divisible;
            REQUIRE(rule.has_value());
            CHECK(*rule == gt.p_divisible_by_definition(Prime{q}));
        }
    }
}

}
