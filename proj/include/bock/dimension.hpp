#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bock/abelian.hpp"
#include "bock/basis.hpp"
#include "bock/nilpotent.hpp"

namespace bock {

/// A natural number or infinity.
class ExtNat {
public:
    constexpr ExtNat(std::uint64_t v = 0) : value_(v) {}
    static constexpr ExtNat inf()
    {
        ExtNat x;
        x.value_.reset();
        return x;
    }

    constexpr bool is_inf() const noexcept { return !value_; }
    constexpr std::uint64_t value() const { return *value_; }

    constexpr ExtNat succ() const { return is_inf() ? inf() : ExtNat(*value_ + 1); }

    constexpr std::strong_ordering operator<=>(const ExtNat& o) const
    {
        if (is_inf() || o.is_inf())
            return is_inf() <=> o.is_inf();
        return *value_ <=> *o.value_;
    }
    constexpr bool operator==(const ExtNat& o) const = default;

    /// "inf" or decimal.
    std::string to_string() const { return is_inf() ? "inf" : std::to_string(*value_); }

private:
    std::optional<std::uint64_t> value_;
};

/// Values of one Bockstein family (Z/p, Z/p^inf or Z_(p)) over all primes:
/// a default with finitely many exceptions.
struct PrimeFamily {
    ExtNat default_value;
    std::map<std::uint32_t, ExtNat> overrides;

    ExtNat at(std::uint32_t p) const;

    /// Exact supremum over a finite or cofinite set; 0 over the empty set.
    ExtNat sup_over(const PrimeSet& s) const;

    bool operator==(const PrimeFamily&) const = default;
};

/// dim_H(X) for every Bockstein group H of a hypothetical space X.
struct DimensionProfile {
    ExtNat q;
    PrimeFamily zp;
    PrimeFamily zpinf;
    PrimeFamily loc;

    static DimensionProfile constant(ExtNat v) { return {v, {v, {}}, {v, {}}, {v, {}}}; }

    /// Primes with an override in any family, ascending.
    std::vector<std::uint32_t> override_primes() const;

    bool operator==(const DimensionProfile&) const = default;
};

/// Rules enforced by validate_profile, at each prime p:
///   R0  every value is 0, or every value is >= 1
///   R1  D(Z/p^inf) <= D(Z/p) <= D(Z/p^inf) + 1
///   R2  max(D(Q), D(Z/p)) <= D(Z_(p))
///   R3  D(Z_(p)) <= max(D(Q), D(Z/p^inf) + 1)
///   R4  D(Z/p^inf) > D(Q) implies D(Z_(p)) = D(Z/p^inf) + 1
inline constexpr std::array<std::string_view, 5> kProfileRules = {"R0", "R1", "R2", "R3", "R4"};

struct Violation {
    std::string rule;
    std::optional<std::uint32_t> p;  // nullopt: the generic (default) prime
    std::string message;

    bool operator==(const Violation&) const = default;
};

/// Empty when the profile satisfies R0-R4 at every prime. Primes without an
/// override all share the defaults and are checked once as "generic p".
std::vector<Violation> validate_profile(const DimensionProfile& d);

/// sup{ D(H) : H in b }, 0 for the empty basis.
ExtNat dim_sup(const DimensionProfile& d, const BocksteinBasis& b);

/// dim_G(X) of a Bockstein space with profile d.
ExtNat dim_abelian(const DimensionProfile& d, const AbelianGroup& g);

/// Whether the supremum of d over σ(G) is at most 1, which for a Bockstein
/// space is equivalent to dim_G(X) <= 1 for nilpotent G.
bool dim_nilpotent_le1(const DimensionProfile& d, const NilpotentGroupDesc& g);

}  // namespace bock
