#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bock {

bool is_prime(std::uint64_t n);

/// All primes p with p <= bound, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

/// Distinct prime divisors of n (n >= 1), ascending.
std::vector<std::uint32_t> prime_divisors(std::uint64_t n);

/// A rational prime, checked by trial division at construction.
class Prime {
public:
    explicit Prime(std::uint32_t value);

    std::uint32_t value() const noexcept { return value_; }

    auto operator<=>(const Prime&) const = default;

private:
    std::uint32_t value_;
};

/// A set of primes that is either finite or cofinite.
///
/// The finite/cofinite sets form a Boolean algebra, which is all the
/// Bockstein-basis computations need: every per-atom condition contributes
/// either finitely many primes or all but finitely many.
class PrimeSet {
public:
    enum class Kind { Finite, Cofinite };

    /// The empty set.
    PrimeSet() = default;

    static PrimeSet none() { return {}; }
    static PrimeSet all() { return PrimeSet(Kind::Cofinite, {}); }
    static PrimeSet finite(std::vector<std::uint32_t> primes);
    static PrimeSet finite(std::initializer_list<std::uint32_t> primes)
    {
        return finite(std::vector<std::uint32_t>(primes));
    }
    static PrimeSet cofinite(std::vector<std::uint32_t> excluded);
    static PrimeSet cofinite(std::initializer_list<std::uint32_t> excluded)
    {
        return cofinite(std::vector<std::uint32_t>(excluded));
    }
    static PrimeSet singleton(Prime p) { return finite({p.value()}); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_cofinite() const noexcept { return kind_ == Kind::Cofinite; }

    /// For Finite: the members. For Cofinite: the excluded primes.
    const std::vector<std::uint32_t>& listed() const noexcept { return listed_; }

    bool empty() const noexcept { return is_finite() && listed_.empty(); }
    bool is_all() const noexcept { return is_cofinite() && listed_.empty(); }

    bool contains(Prime p) const;
    bool contains(std::uint32_t p) const;

    PrimeSet complement() const;
    PrimeSet operator|(const PrimeSet& other) const;
    PrimeSet operator&(const PrimeSet& other) const;
    PrimeSet operator-(const PrimeSet& other) const { return *this & other.complement(); }
    PrimeSet& operator|=(const PrimeSet& other) { return *this = *this | other; }

    bool subset_of(const PrimeSet& other) const { return (*this - other).empty(); }

    /// "{2, 3}" or "all primes" or "all primes except {5}".
    std::string to_string() const;

    auto operator<=>(const PrimeSet&) const = default;

private:
    PrimeSet(Kind kind, std::vector<std::uint32_t> listed);

    Kind kind_ = Kind::Finite;
    std::vector<std::uint32_t> listed_;
};

}  // namespace bock
