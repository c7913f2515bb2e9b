#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bock/abelian.hpp"
#include "bock/basis.hpp"
#include "bock/primes.hpp"

namespace bock {

using Elem = std::uint32_t;

/// Result of a full table scan; `violation` names the first failure.
struct TableCheck {
    bool ok = true;
    std::string violation;

    explicit operator bool() const { return ok; }
};

/// Checks a row-major n×n table for the Latin property, a two-sided
/// identity, and associativity over all n³ triples.
TableCheck validate_table(std::size_t n, std::span<const Elem> table);

/// A finite group given by its multiplication table.
class FiniteGroup {
public:
    struct Unchecked {};

    /// Validates; throws InvalidInput with the violation report.
    static FiniteGroup from_table(std::size_t n, std::vector<Elem> table);
    static FiniteGroup from_rows(const std::vector<std::vector<Elem>>& rows);

    /// For tables produced by trusted constructions (products, quotients).
    FiniteGroup(Unchecked, std::size_t n, std::vector<Elem> table);

    static FiniteGroup trivial() { return FiniteGroup(Unchecked{}, 1, {0}); }

    std::size_t order() const noexcept { return n_; }
    Elem identity() const noexcept { return identity_; }
    Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem pow(Elem a, std::uint64_t e) const;
    Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
    std::uint64_t element_order(Elem a) const;
    bool is_abelian() const;

    const std::vector<Elem>& table() const noexcept { return table_; }

private:
    std::size_t n_ = 1;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
    Elem identity_ = 0;
};

/// Sorted set of elements closed under product and inverse.
struct Subgroup {
    std::vector<Elem> elements;

    std::size_t size() const noexcept { return elements.size(); }
    bool is_trivial() const noexcept { return elements.size() <= 1; }
    bool contains(Elem x) const;

    bool operator==(const Subgroup&) const = default;
};

Subgroup whole(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);

/// Smallest subgroup containing `generators`.
Subgroup generate(const FiniteGroup& g, std::span<const Elem> generators);
bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elements);
bool is_normal(const FiniteGroup& g, const Subgroup& n);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Elem> generators);
Subgroup center(const FiniteGroup& g);

/// [A, B], generated by x⁻¹y⁻¹xy for x in A, y in B.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

struct LowerCentralSeries {
    std::vector<Subgroup> terms;  // Γ_1 = G, ..., ending with the trivial subgroup
    int nilpotency_class = 0;     // last index c with Γ_c != 1
};

/// Iterates Γ_{n+1} = [Γ_n, G]; throws NotNilpotent if it stalls above 1.
LowerCentralSeries lower_central_series(const FiniteGroup& g);
bool is_nilpotent(const FiniteGroup& g);

/// A subgroup as a group in its own right; `embedding[i]` is the parent element.
struct Restriction {
    FiniteGroup group;
    std::vector<Elem> embedding;
};
Restriction restrict_to(const FiniteGroup& g, const Subgroup& h);

struct Quotient {
    FiniteGroup group;
    std::vector<Elem> projection;  // parent element -> coset index

    Subgroup image(const Subgroup& h) const;
};

/// G/N via cosets; throws NotNormal when N is not normal.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Cyclic primary decomposition of a finite abelian group as Z/p^k atoms.
/// Throws InvalidInput for non-abelian input.
AbelianGroup abelian_invariants(const FiniteGroup& g);

struct Abelianization {
    FiniteGroup group;
    AbelianGroup invariants;
};
Abelianization abelianization(const FiniteGroup& g);

struct PowerMap {
    bool surjective = false;
    bool injective = false;
};
PowerMap power_map(const FiniteGroup& g, Prime p);

/// Bockstein basis by brute-force power maps. Throws NotNilpotent.
BocksteinBasis sigma_finite(const FiniteGroup& g);

struct PrimaryPart {
    Prime p;
    Subgroup part;
};

/// Elements of q-power order for each prime q dividing |G|. Throws
/// NotNilpotent when some part fails to be a subgroup or the orders do not
/// multiply back to |G|.
std::vector<PrimaryPart> primary_decomposition(const FiniteGroup& g);

/// `count` seeded cyclic subgroups of Z(G), followed by Γ_c(G).
std::vector<Subgroup> central_subgroup_samples(const FiniteGroup& g, std::uint64_t seed,
                                               std::size_t count);

/// `count` seeded normal closures of one or two random elements.
std::vector<Subgroup> normal_subgroup_samples(const FiniteGroup& g, std::uint64_t seed,
                                              std::size_t count);

}  // namespace bock
