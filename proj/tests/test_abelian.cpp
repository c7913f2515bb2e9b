#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "bock/abelian.hpp"
#include "bock/error.hpp"
#include "bock/random.hpp"
#include "bock/suites.hpp"

using namespace bock;

namespace {

const AbelianAtom Z = AbelianAtom::z();
const AbelianAtom Q = AbelianAtom::q();

AbelianAtom cyc(std::uint32_t p, std::uint32_t k) { return AbelianAtom::cyclic(Prime{p}, k); }
AbelianAtom pruefer(std::uint32_t p) { return AbelianAtom::pruefer(Prime{p}); }
AbelianAtom loc(std::uint32_t p) { return AbelianAtom::localized(Prime{p}); }
AbelianGroup of(const AbelianAtom& a, std::uint32_t m = 1) { return AbelianGroup::of(a, m); }

std::uint64_t ipow(std::uint64_t b, std::uint32_t e)
{
    std::uint64_t r = 1;
    while (e--)
        r *= b;
    return r;
}

// Order of Z/a ⊗ Z/b: the number of bilinear maps Z/a × Z/b -> Z/N for
// N = a*b equals |Hom(Z/a ⊗ Z/b, Z/N)| = |Z/a ⊗ Z/b|. Each candidate value
// t = f(1,1) is accepted only if x*y*t mod N is well defined on both
// residue systems, checked pointwise.
std::uint64_t tensor_order_by_bilinear_maps(std::uint64_t a, std::uint64_t b)
{
    const std::uint64_t n = a * b;
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
        bool ok = true;
        for (std::uint64_t x = 0; x < a && ok; ++x)
            for (std::uint64_t y = 0; y < b && ok; ++y)
                ok = (x * y * t) % n == ((x + a) * y * t) % n && (x * y * t) % n == (x * (y + b) * t) % n;
        count += ok;
    }
    return count;
}

// Z/p^k ⊗ Z/p^inf as the colimit of Z/p^k ⊗ Z/p^j = Z/p^min(k,j) along the
// inclusions Z/p^j -> Z/p^(j+1), x -> px. Returns the number of elements of
// stage `j` that survive to stage `j + horizon`.
std::uint64_t colimit_survivors(std::uint64_t p, std::uint32_t k, std::uint32_t j, std::uint32_t horizon)
{
    std::uint64_t survivors = 0;
    const std::uint32_t stage_exp = std::min(k, j);
    for (std::uint64_t x = 0; x < ipow(p, stage_exp); ++x) {
        std::uint64_t v = x;
        std::uint32_t e = stage_exp;
        for (std::uint32_t s = 1; s <= horizon; ++s) {
            e = std::min(k, j + s);
            v = (v * p) % ipow(p, e);
        }
        survivors += v != 0;
    }
    return survivors;
}

// |Tor(Z/a, Z/b)| = #{x in Z/b : a x = 0}.
std::uint64_t tor_order_by_kernel(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < b; ++x)
        count += (a * x) % b == 0;
    return count;
}

std::uint64_t finite_order(const AbelianGroup& g)
{
    std::uint64_t n = 1;
    for (const auto& t : g.terms()) {
        REQUIRE(t.atom.kind == AbelianAtom::Kind::Cyclic);
        n *= ipow(ipow(t.atom.p, t.atom.k), t.mult);
    }
    return n;
}

}  // namespace

TEST_SUITE("abelian") {

TEST_CASE("canonical forms")
{
    CHECK(AbelianGroup({{Z, 1}, {Z, 1}}) == of(Z, 2));
    CHECK(AbelianGroup({{AbelianAtom::localized_away(PrimeSet::none()), 1}}) == of(Q));
    CHECK(AbelianGroup({{cyc(2, 3), 1}, {cyc(2, 3), 2}}) == of(cyc(2, 3), 3));
    CHECK(canonical_atom(AbelianAtom::localized_away(PrimeSet::finite({5}))) == loc(5));
    CHECK(canonical_atom(AbelianAtom::localized_away(PrimeSet::all())) == Z);
    CHECK_THROWS_AS(canonical_atom(AbelianAtom::adic(PrimeSet::none())), Error);
    CHECK_THROWS_AS(cyc(2, 0), Error);
    CHECK(AbelianGroup({{Z, 0}}).is_trivial());
    CHECK((of(cyc(3, 1)) + of(Z) + of(cyc(3, 1))) == AbelianGroup({{Z, 1}, {cyc(3, 1), 2}}));
    CHECK(of(Z).to_string() == "Z");
    CHECK(AbelianGroup::trivial().to_string() == "0");
    CHECK(of(cyc(2, 3)).to_string() == "Z/8");
    CHECK(of(pruefer(3)).to_string() == "Z/3^inf");
    CHECK(of(loc(5)).to_string() == "Z_(5)");
}

TEST_CASE("canonicalize is idempotent and order-free")
{
    for (std::uint64_t i = 0; i < 100; ++i) {
        auto rng = substream(21, i);
        const AbelianGroup g = random_abelian(rng);
        CHECK(canonicalize(g.terms()) == g);
        auto reversed = g.terms();
        std::reverse(reversed.begin(), reversed.end());
        CHECK(canonicalize(reversed) == g);
    }
}

TEST_CASE("decomposition")
{
    const auto g = of(Z) + of(cyc(2, 2));
    const auto d = decompose(g);
    CHECK_FALSE(d.is_torsion);
    CHECK(d.tor == of(cyc(2, 2)));
    CHECK(d.tor_p(Prime{2}) == of(cyc(2, 2)));
    CHECK(d.tor_p(Prime{3}).is_trivial());
    CHECK(d.free_part == of(Z));
    CHECK(d.f_p(Prime{2}) == of(Z));

    CHECK(decompose(of(pruefer(3))).is_torsion);
    CHECK(decompose(of(pruefer(3))).free_part.is_trivial());
    CHECK(decompose(of(loc(5))).tor.is_trivial());
    CHECK(decompose(of(loc(5))).free_part == of(loc(5)));
}

TEST_CASE("divisibility")
{
    CHECK(divisibility(of(Z), Prime{2}) == Divisibility{false, false});
    CHECK(divisibility(of(pruefer(2)), Prime{2}) == Divisibility{true, false});
    CHECK(divisibility(of(loc(3)), Prime{2}) == Divisibility{true, true});
    CHECK(divisibility(AbelianGroup::trivial(), Prime{2}) == Divisibility{true, true});
    CHECK(divisibility(of(cyc(3, 2)), Prime{2}) == Divisibility{true, true});
    CHECK(divisibility(of(AbelianAtom::adic(PrimeSet::finite({2}))), Prime{3}) == Divisibility{true, true});
    CHECK(divisibility(of(AbelianAtom::adic(PrimeSet::finite({2}))), Prime{2}) == Divisibility{false, false});
}

// x -> 2x on Z/2^k truncations of the Pruefer group: the image is the
// previous truncation and the kernel has order 2 at every level.
TEST_CASE("Pruefer doubling on truncations")
{
    for (std::uint32_t k = 1; k <= 10; ++k) {
        const std::uint64_t n = ipow(2, k), next = ipow(2, k + 1);
        // Z/2^k sits in Z/2^(k+1) as the even residues; every one of them is a double.
        std::set<std::uint64_t> image;
        std::uint64_t kernel = 0;
        for (std::uint64_t y = 0; y < next; ++y) {
            image.insert((2 * y) % next);
            kernel += (2 * y) % next == 0;
        }
        CHECK(image.size() == n);
        CHECK(std::all_of(image.begin(), image.end(), [](std::uint64_t v) { return v % 2 == 0; }));
        CHECK(kernel == 2);
    }
    CHECK(divisibility(of(pruefer(2)), Prime{2}) == Divisibility{true, false});
}

// Z_(3) is 2-divisible: for m/b with 3 ∤ b, the solution of 2x = m/b is
// m/(2b) whose denominator stays prime to 3; reducing mod 3^k, 2x ≡ m has a
// unique solution because 2 is a unit.
TEST_CASE("Z_(3) modular solve")
{
    for (std::uint32_t k = 1; k <= 6; ++k) {
        const std::uint64_t n = ipow(3, k);
        for (std::uint64_t m = 0; m < n; ++m) {
            std::uint64_t solutions = 0;
            for (std::uint64_t x = 0; x < n; ++x)
                solutions += (2 * x) % n == m;
            CHECK(solutions == 1);
        }
        std::uint64_t triple_hits = 0;
        for (std::uint64_t x = 0; x < n; ++x)
            triple_hits += (3 * x) % n == 1;
        CHECK(triple_hits == 0);
    }
    CHECK(divisibility(of(loc(3)), Prime{2}) == Divisibility{true, true});
    CHECK(divisibility(of(loc(3)), Prime{3}) == Divisibility{false, false});
}

TEST_CASE("sigma of the basic atoms")
{
    const auto sq = sigma_abelian(of(Q));
    CHECK(sq == BocksteinBasis{true, {}, {}, {}});

    const auto sz = sigma_abelian(of(Z));
    CHECK(sz == BocksteinBasis{true, PrimeSet::all(), PrimeSet::all(), PrimeSet::all()});
    for (auto p : primes_up_to(100))
        CHECK(sz.loc.contains(p) == !divisibility(of(Z), Prime{p}).p_divisible);

    CHECK(sigma_abelian(of(pruefer(3))) == BocksteinBasis{false, {}, {}, PrimeSet::finite({3})});

    const auto z12 = of(cyc(2, 2)) + of(cyc(3, 1));
    CHECK(sigma_abelian(z12) ==
          BocksteinBasis{false, {}, PrimeSet::finite({2, 3}), PrimeSet::finite({2, 3})});

    const PrimeSet l = PrimeSet::finite({2, 3});
    const BocksteinBasis expected{true, l, l, l};
    CHECK(sigma_abelian(of(AbelianAtom::adic(l))) == expected);
    CHECK(sigma_abelian(of(AbelianAtom::localized_away(l))) == expected);

    CHECK(sigma_abelian(AbelianGroup::trivial()).empty());
    CHECK(sigma_abelian(of(loc(5))) ==
          BocksteinBasis{true, PrimeSet::finite({5}), PrimeSet::finite({5}), PrimeSet::finite({5})});
}

TEST_CASE("sigma invariants on generated groups")
{
    for (std::uint64_t i = 0; i < 300; ++i) {
        auto rng = substream(22, i);
        const AbelianGroup g = random_abelian(rng), h = random_abelian(rng);
        const auto s = sigma_abelian(g);
        CAPTURE(g.to_string());
        CHECK(s.chain_holds());
        CHECK(sigma_abelian(g.scaled(3)) == s);
        CHECK(sigma_abelian(g + h) == (s | sigma_abelian(h)));
        CHECK(s.has_q == !decompose(g).is_torsion);
        for (auto q : {2u, 3u, 5u, 7u, 11u}) {
            const Prime p{q};
            const auto d = divisibility(g, p);
            CHECK(s.zpinf.contains(p) == !d.uniquely_p_divisible);
            CHECK(s.zp.contains(p) == !d.p_divisible);
        }
    }
}

TEST_CASE("tensor products")
{
    CHECK(tensor_with(of(Z), pruefer(5)) == of(pruefer(5)));
    CHECK(tensor_with(of(cyc(2, 2)), pruefer(2)).is_trivial());
    CHECK(tensor_with(of(cyc(2, 2)), cyc(2, 1)) == of(cyc(2, 1)));
    CHECK(tensor_with(of(cyc(3, 1)), Q).is_trivial());
    CHECK(tensor_with(of(cyc(3, 2)), loc(3)) == of(cyc(3, 2)));
    CHECK(tensor_with(of(cyc(3, 2)), loc(2)).is_trivial());
    CHECK(tensor_with(of(Z, 2), Q) == of(Q, 2));
    CHECK(tensor_with(of(Q), cyc(2, 1)).is_trivial());
    CHECK(tensor_with(of(Q), Q) == of(Q));
    CHECK(tensor_with(of(pruefer(2)), pruefer(2)).is_trivial());
    CHECK(tensor_with(of(pruefer(2)), Q).is_trivial());
    CHECK(tensor_with(of(loc(3)), cyc(3, 2)) == of(cyc(3, 2)));
    CHECK(tensor_with(of(loc(3)), cyc(2, 1)).is_trivial());
    CHECK(tensor_with(of(loc(3)), loc(3)) == of(loc(3)));
    CHECK(tensor_with(of(loc(3)), loc(2)) == of(Q));
    CHECK_THROWS_AS(tensor_with(of(AbelianAtom::adic(PrimeSet::finite({2}))), Q), Error);
}

TEST_CASE("tensor of cyclic groups matches bilinear-map count")
{
    const std::uint32_t ps[] = {2, 3, 5};
    for (auto p : ps)
        for (auto q : ps)
            for (std::uint32_t k = 1; k <= 2; ++k)
                for (std::uint32_t j = 1; j <= 2; ++j) {
                    const auto a = ipow(p, k), b = ipow(q, j);
                    CAPTURE(a);
                    CAPTURE(b);
                    const auto t = tensor_with(of(cyc(p, k)), cyc(q, j));
                    CHECK(finite_order(t) == tensor_order_by_bilinear_maps(a, b));
                    CHECK(finite_order(t) == std::gcd(a, b));
                }
}

TEST_CASE("Z/p^k ⊗ Z/p^inf vanishes in the colimit")
{
    for (std::uint32_t p : {2u, 3u})
        for (std::uint32_t k = 1; k <= 3; ++k) {
            for (std::uint32_t j = 1; j <= 5; ++j)
                CHECK(colimit_survivors(p, k, j, k) == 0);
            // before k steps the generator is still alive
            CHECK(colimit_survivors(p, k, k, k - 1) > 0);
            CHECK(tensor_with(of(cyc(p, k)), pruefer(p)).is_trivial());
        }
}

TEST_CASE("Tor")
{
    CHECK(tor_with(of(Z), pruefer(2)).is_trivial());
    CHECK(tor_with(of(cyc(2, 2)), pruefer(2)) == of(cyc(2, 2)));
    CHECK(tor_with(of(cyc(3, 1)), pruefer(2)).is_trivial());
    CHECK(tor_with(of(Q), cyc(2, 1)).is_trivial());
    CHECK(tor_with(of(pruefer(2)), cyc(2, 3)) == of(cyc(2, 3)));
    CHECK(tor_with(of(pruefer(2)), pruefer(2)) == of(pruefer(2)));
    CHECK(tor_with(of(cyc(2, 2)), Q).is_trivial());

    // Tor(Z/p^k, Z/q^j) against kernel counts; Pruefer through truncations.
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::uint32_t q : {2u, 3u, 5u})
            for (std::uint32_t k = 1; k <= 3; ++k) {
                for (std::uint32_t j = 1; j <= 3; ++j)
                    CHECK(finite_order(tor_with(of(cyc(p, k)), cyc(q, j))) ==
                          tor_order_by_kernel(ipow(p, k), ipow(q, j)));
                // p^k-torsion of Z/q^J stabilizes for J >= k
                const std::uint64_t stable = tor_order_by_kernel(ipow(p, k), ipow(q, k + 3));
                const auto t = tor_with(of(cyc(p, k)), pruefer(q));
                CHECK(finite_order(t) == stable);
            }
}

}
