#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bock/abelian.hpp"
#include "bock/basis.hpp"
#include "bock/finite_group.hpp"
#include "bock/nilpotent.hpp"

namespace bock {

/// Metadata known from the construction itself, independent of the oracle.
struct CatalogMetadata {
    std::optional<std::size_t> order;           // nullopt for infinite groups
    std::optional<int> nilpotency_class;        // nullopt when not nilpotent
    AbelianGroup ab;
    std::optional<BocksteinBasis> expected_sigma;
};

struct CatalogEntry {
    std::string name;                  // canonical term, e.g. "ut3_mod(3,1)"
    std::vector<std::uint32_t> params;
    NilpotentGroupDesc value;
    CatalogMetadata metadata;

    bool is_finite() const { return value.finite() != nullptr; }
    bool is_tower() const { return value.tower() != nullptr; }
    const FiniteGroup& table() const { return *value.finite()->group; }
};

inline constexpr std::size_t kMaxCatalogOrder = 512;

/// Entry for a name with integer parameters:
///   cyclic(n), abelian(n1,...,nr), dihedral(m) (order 2m), dihedral8,
///   quaternion8, symmetric3, ut3_mod(p,k), ut4_mod2.
/// Throws UnknownName or InvalidInput (order above kMaxCatalogOrder).
CatalogEntry build(const std::string& name, const std::vector<std::uint32_t>& params = {});

/// Entry for a full term, including nested constructions:
///   direct_product(a,b,...), heisenberg_ring(R), ut4_ring(R),
///   gamma_tower(g), sum(a,b,...), and the Abelian atoms Z, Q,
///   localized(p), pruefer(p), localized_away(p,...), adic(p,...).
/// Rings R are Z, Q, localized(p), cyclic(p,k), localized_away(...), adic(...).
/// Aliases: Q8, D8, S3, trivial. Results are memoized.
const CatalogEntry& resolve(const std::string& term);

/// Direct product of two entries (finite tables, towers, or Abelian cases).
CatalogEntry direct_product(const CatalogEntry& a, const CatalogEntry& b);

/// Γ-tower of UT(3, R): layers [R, R²], Ab = R², witnessed.
CatalogEntry heisenberg_ring(const AbelianAtom& ring);

/// Γ-tower of UT(4, R): layers [R, R², R³], Ab = R³, witnessed.
CatalogEntry ut4_ring(const AbelianAtom& ring);

/// The finite nilpotent groups used by the verification suites.
const std::vector<std::string>& standard_finite_names();
/// The towers used by the verification suites.
const std::vector<std::string>& standard_tower_names();
/// Abelian (non-table) groups used by the verification suites.
const std::vector<std::string>& standard_abelian_names();

/// One line per template and standard entry: name, kind, order, class.
std::vector<std::string> catalog_listing();

}  // namespace bock
