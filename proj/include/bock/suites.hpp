#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bock/abelian.hpp"
#include "bock/dimension.hpp"
#include "bock/io.hpp"
#include "bock/nilpotent.hpp"

namespace bock {

struct SuiteFailure {
    std::string instance;
    std::string expected;
    std::string actual;

    auto operator<=>(const SuiteFailure&) const = default;
};

struct SuiteResult {
    std::string suite;
    std::size_t instances = 0;
    std::vector<SuiteFailure> failures;  // sorted by instance
    std::uint64_t seed = 0;
    double elapsed_ms = 0;

    bool passed() const { return failures.empty(); }
};

struct SuiteInfo {
    std::string_view name;
    std::string_view statement;
    std::size_t default_trials;
};

const std::vector<SuiteInfo>& suite_list();

/// Runs `trials` instances of a named suite. Deterministic in (name, trials,
/// seed). Throws UnknownName for an unknown suite.
SuiteResult run_suite(std::string_view name, std::size_t trials, std::uint64_t seed);

/// "sigma-union: PASS 100/100 seed=7", then one line per failure.
std::string format_text(const SuiteResult& r);
json to_json(const SuiteResult& r);

// ---------------------------------------------------------------------------
// Seeded instance generators
// ---------------------------------------------------------------------------

/// 0..6 atoms over the primes {2, 3, 5, 7}, multiplicities 1..3.
AbelianGroup random_abelian(std::mt19937_64& rng);

/// Nonempty; finite sets draw from primes <= 30, cofinite sets exclude some.
PrimeSet random_primeset(std::mt19937_64& rng, bool cofinite);

/// Satisfies R0-R4 by construction; overrides at primes <= 50.
DimensionProfile random_valid_profile(std::mt19937_64& rng);

/// Arbitrary values in 0..4 and inf, overrides at primes <= 50.
DimensionProfile random_profile(std::mt19937_64& rng);

/// One direct factor of a generated tower, kept so that p-divisibility can
/// be decided from the group itself rather than from the layers.
struct TowerFactor {
    enum class Kind { UnitriangularOverRing, FiniteTable, Abelian };
    Kind kind;
    AbelianAtom ring;                           // UnitriangularOverRing
    std::shared_ptr<const FiniteGroup> table;   // FiniteTable
    AbelianGroup group;                         // Abelian
};

struct GeneratedTower {
    std::string label;
    Tower tower;
    std::vector<TowerFactor> factors;

    /// p-divisibility from the definition: UT(n, R) is p-divisible iff p is
    /// invertible in R; finite tables by brute-force power maps.
    bool p_divisible_by_definition(Prime p) const;
};

/// Direct product of one to three factors, at least one non-Abelian.
GeneratedTower random_tower(std::mt19937_64& rng);

}  // namespace bock
