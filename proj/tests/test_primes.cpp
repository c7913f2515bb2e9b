#include <doctest.h>

#include <random>

#include "bock/basis.hpp"
#include "bock/error.hpp"
#include "bock/primes.hpp"
#include "bock/random.hpp"

using namespace bock;

TEST_SUITE("primes") {

TEST_CASE("primality by trial division")
{
    const std::vector<std::uint32_t> expected = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    CHECK(primes_up_to(30) == expected);
    CHECK(primes_up_to(1).empty());
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(65537));
    CHECK_FALSE(is_prime(65535));
    CHECK(prime_divisors(360) == std::vector<std::uint32_t>{2, 3, 5});
    CHECK(prime_divisors(1).empty());
    CHECK(prime_divisors(97) == std::vector<std::uint32_t>{97});
}

TEST_CASE("Prime rejects composites")
{
    CHECK(Prime{7}.value() == 7);
    CHECK_THROWS_AS(Prime{1}, Error);
    CHECK_THROWS_AS(Prime{9}, Error);
    try {
        Prime{4};
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidInput);
    }
}

TEST_CASE("finite and cofinite set identities")
{
    const auto u = PrimeSet::finite({2, 3}) | PrimeSet::cofinite({2, 5});
    CHECK(u == PrimeSet::cofinite({5}));
    CHECK_FALSE(PrimeSet::cofinite({3}).contains(3u));
    CHECK(PrimeSet::none().complement() == PrimeSet::all());
    CHECK(PrimeSet::all().complement().empty());

    CHECK((PrimeSet::cofinite({2}) & PrimeSet::finite({2, 3, 5})) == PrimeSet::finite({3, 5}));
    CHECK((PrimeSet::cofinite({2}) & PrimeSet::cofinite({3})) == PrimeSet::cofinite({2, 3}));
    CHECK((PrimeSet::all() - PrimeSet::finite({7})) == PrimeSet::cofinite({7}));
    CHECK(PrimeSet::finite({3, 2, 3}) == PrimeSet::finite({2, 3}));
    CHECK_FALSE(PrimeSet::all().contains(4u));
    CHECK_THROWS_AS(PrimeSet::finite({4}), Error);
}

TEST_CASE("text form")
{
    CHECK(PrimeSet::none().to_string() == "{}");
    CHECK(PrimeSet::finite({3, 2}).to_string() == "{2, 3}");
    CHECK(PrimeSet::all().to_string() == "all primes");
    CHECK(PrimeSet::cofinite({5}).to_string() == "all primes except {5}");
}

// Boolean-algebra laws against membership on a window of primes.
TEST_CASE("set operations agree with pointwise membership")
{
    const auto window = primes_up_to(60);
    auto random_set = [&](std::mt19937_64& rng) {
        std::vector<std::uint32_t> ps;
        for (auto p : window)
            if (below(rng, 4) == 0)
                ps.push_back(p);
        return below(rng, 2) ? PrimeSet::finite(ps) : PrimeSet::cofinite(ps);
    };
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto rng = substream(11, i);
        const PrimeSet a = random_set(rng), b = random_set(rng);
        for (auto p : primes_up_to(100)) {
            CHECK((a | b).contains(p) == (a.contains(p) || b.contains(p)));
            CHECK((a & b).contains(p) == (a.contains(p) && b.contains(p)));
            CHECK((a - b).contains(p) == (a.contains(p) && !b.contains(p)));
            CHECK(a.complement().contains(p) == !a.contains(p));
        }
        CHECK(a.complement().complement() == a);
        CHECK(((a | b).complement()) == (a.complement() & b.complement()));
        CHECK((a & b).subset_of(a));
        CHECK(a.subset_of(a | b));
    }
}

TEST_CASE("Bockstein basis union and order")
{
    BocksteinBasis a{false, {}, PrimeSet::finite({2}), PrimeSet::finite({2})};
    BocksteinBasis b{true, PrimeSet::finite({3}), PrimeSet::finite({3}), PrimeSet::finite({3, 5})};
    const auto u = a | b;
    CHECK(u.has_q);
    CHECK(u.zpinf == PrimeSet::finite({2, 3, 5}));
    CHECK(a.subset_of(u));
    CHECK(b.subset_of(u));
    CHECK_FALSE(u.subset_of(a));
    CHECK(u.chain_holds());
    CHECK(a.to_string() == "Q: no | Z_(p): {} | Z/p: {2} | Z/p^inf: {2}");
    CHECK(BocksteinBasis{}.empty());
}

}
