#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "bock/basis.hpp"
#include "bock/primes.hpp"

namespace bock {

/// One indecomposable building block of an Abelian group.
///
/// The vocabulary is closed: Z, Q, Z/p^k, the Pruefer group Z/p^inf, the
/// localization Z_(p), the subring Z_l of Q with denominators prime to l,
/// and the l-adic integers.
struct AbelianAtom {
    enum class Kind : std::uint8_t { Z, Q, Cyclic, Pruefer, Localized, LocalizedAway, Adic };

    Kind kind = Kind::Z;
    std::uint32_t p = 0;  // Cyclic, Pruefer, Localized
    std::uint32_t k = 0;  // Cyclic exponent
    PrimeSet l;           // LocalizedAway, Adic

    static AbelianAtom z() { return {Kind::Z, 0, 0, {}}; }
    static AbelianAtom q() { return {Kind::Q, 0, 0, {}}; }
    static AbelianAtom cyclic(Prime p, std::uint32_t k);
    static AbelianAtom pruefer(Prime p) { return {Kind::Pruefer, p.value(), 0, {}}; }
    static AbelianAtom localized(Prime p) { return {Kind::Localized, p.value(), 0, {}}; }
    static AbelianAtom localized_away(PrimeSet l) { return {Kind::LocalizedAway, 0, 0, std::move(l)}; }
    static AbelianAtom adic(PrimeSet l) { return {Kind::Adic, 0, 0, std::move(l)}; }

    bool is_torsion() const { return kind == Kind::Cyclic || kind == Kind::Pruefer; }
    bool is_finitely_generated() const { return kind == Kind::Z || kind == Kind::Cyclic; }

    /// "Z", "Z/8", "Z/3^inf", "Z_(5)", "Z_{2, 3}", "Zhat_{2}"
    std::string to_string() const;

    auto operator<=>(const AbelianAtom&) const = default;
};

/// Canonical representative: LocalizedAway over {} is Q, over {p} is Z_(p),
/// over all primes is Z. Throws on Adic over the empty set.
AbelianAtom canonical_atom(AbelianAtom atom);

struct AtomTerm {
    AbelianAtom atom;
    std::uint32_t mult = 1;

    auto operator<=>(const AtomTerm&) const = default;
};

/// Finite direct sum of atoms with multiplicities, always in canonical form:
/// atoms normalized, sorted, merged, no zero multiplicities.
class AbelianGroup {
public:
    AbelianGroup() = default;
    AbelianGroup(std::initializer_list<AtomTerm> terms);
    explicit AbelianGroup(std::vector<AtomTerm> terms);

    static AbelianGroup trivial() { return {}; }
    static AbelianGroup of(const AbelianAtom& atom, std::uint32_t mult = 1)
    {
        return AbelianGroup({AtomTerm{atom, mult}});
    }

    const std::vector<AtomTerm>& terms() const noexcept { return terms_; }
    bool is_trivial() const noexcept { return terms_.empty(); }
    bool is_finitely_generated() const;
    bool is_finite() const;

    AbelianGroup operator+(const AbelianGroup& other) const;  // direct sum
    AbelianGroup& operator+=(const AbelianGroup& other) { return *this = *this + other; }

    /// Every multiplicity multiplied by factor (factor >= 1).
    AbelianGroup scaled(std::uint32_t factor) const;

    /// "0" or "Z^2 + Z/4 + Z/3^inf"
    std::string to_string() const;

    bool operator==(const AbelianGroup&) const = default;

private:
    std::vector<AtomTerm> terms_;
};

/// Canonical form of an arbitrary term list; idempotent.
AbelianGroup canonicalize(std::vector<AtomTerm> terms);

/// Torsion subgroup, p-primary parts, and torsion-free quotients.
struct Decomposition {
    bool is_torsion = false;
    AbelianGroup tor;
    AbelianGroup free_part;  // F(G) = G / Tor(G)

    AbelianGroup tor_p(Prime p) const;
    AbelianGroup f_p(Prime p) const;  // G / Tor_p(G)

    AbelianGroup source;
};

Decomposition decompose(const AbelianGroup& g);

struct Divisibility {
    bool p_divisible = false;
    bool uniquely_p_divisible = false;

    bool operator==(const Divisibility&) const = default;
};

Divisibility divisibility(const AbelianGroup& g, Prime p);

/// Primes p for which g is not p-divisible.
PrimeSet non_divisible_primes(const AbelianGroup& g);

/// Primes p for which x -> px is not a bijection on g.
PrimeSet non_uniquely_divisible_primes(const AbelianGroup& g);

/// Maximal Bockstein basis by the four torsion / torsion-free clauses.
BocksteinBasis sigma_abelian(const AbelianGroup& g);

/// g ⊗ c for a coefficient atom c in {Z, Q, Z/p^k, Z/p^inf, Z_(p)}.
///
/// Exact for finitely generated g. Torsion-free rank-one atoms and Pruefer
/// atoms are handled when the product stays inside the atom vocabulary;
/// l-adic ⊗ {Q, Z_(p)} throws OutOfScope.
AbelianGroup tensor_with(const AbelianGroup& g, const AbelianAtom& c);

/// Tor_1(g, c) for the same coefficient atoms as tensor_with.
AbelianGroup tor_with(const AbelianGroup& g, const AbelianAtom& c);

}  // namespace bock
