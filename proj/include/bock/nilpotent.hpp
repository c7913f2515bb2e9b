#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bock/abelian.hpp"
#include "bock/basis.hpp"
#include "bock/finite_group.hpp"

namespace bock {

/// A nilpotent group presented by a tower of central extensions with
/// Abelian layers.
///
/// `layers.front()` is the innermost kernel, central in the whole group;
/// `layers.back()` is the top quotient. For the Γ-tower of G this is
/// [Γ_c/Γ_{c+1}, ..., Γ_1/Γ_2]. Stage i adjoins `layers[i]` as a central
/// kernel over the tower `layers[i+1..]`; `witnessed[i]` asserts an
/// epimorphism from a tensor power of Ab onto that kernel.
///
/// The layers do not determine Ab(G), so `ab` is carried alongside.
struct Tower {
    std::vector<AbelianGroup> layers;
    AbelianGroup ab;
    std::vector<bool> witnessed;

    /// Checks c >= 2, nontrivial layers and one witness flag per layer.
    static Tower make(std::vector<AbelianGroup> layers, AbelianGroup ab,
                      std::vector<bool> witnessed);
    static Tower make(std::vector<AbelianGroup> layers, AbelianGroup ab, bool witnessed = true);

    std::size_t nilpotency_class() const noexcept { return layers.size(); }
    bool fully_witnessed() const;

    bool operator==(const Tower&) const = default;
};

struct FiniteCase {
    std::string name;
    std::shared_ptr<const FiniteGroup> group;
};

/// An Abelian group, a witnessed tower, or a finite multiplication table.
class NilpotentGroupDesc {
public:
    NilpotentGroupDesc(AbelianGroup g) : value_(std::move(g)) {}
    NilpotentGroupDesc(Tower t) : value_(std::move(t)) {}
    NilpotentGroupDesc(FiniteCase f) : value_(std::move(f)) {}

    static NilpotentGroupDesc finite(std::string name, FiniteGroup g)
    {
        return FiniteCase{std::move(name), std::make_shared<const FiniteGroup>(std::move(g))};
    }

    const AbelianGroup* abelian() const { return std::get_if<AbelianGroup>(&value_); }
    const Tower* tower() const { return std::get_if<Tower>(&value_); }
    const FiniteCase* finite() const { return std::get_if<FiniteCase>(&value_); }

    /// "abelian", "tower" or "finite"
    std::string kind_name() const;

private:
    std::variant<AbelianGroup, Tower, FiniteCase> value_;
};

/// 0 for the trivial group, 1 for other Abelian groups, c for a tower, and
/// the lower-central-series length for a finite table (NotNilpotent).
int nilpotency_class(const NilpotentGroupDesc& g);

struct NilpotentPredicates {
    bool torsion = false;
    std::optional<bool> p_divisible;  // nullopt: undecidable without witnesses
    bool uniquely_p_divisible = false;
};

/// Towers use the layer rules: a predicate holds iff it holds on every
/// layer. Downward p-divisibility needs every stage witnessed; without
/// that, only "all layers divisible => divisible" and "top layer not
/// divisible => not divisible" are decided.
NilpotentPredicates predicates_nilpotent(const NilpotentGroupDesc& g, Prime p);

/// The four locality clauses evaluated on an Abelian group:
/// Q iff not torsion, Z/p^inf iff not uniquely p-divisible, Z/p iff not
/// p-divisible, Z_(p) iff F(G) not p-divisible.
BocksteinBasis sigma_by_locality(const AbelianGroup& g);

/// Abelian: locality clauses. Tower: union of sigma over the layers
/// (throws Unwitnessed unless fully witnessed). Finite: power maps.
BocksteinBasis sigma_nilpotent(const NilpotentGroupDesc& g);

struct SigmaSplit {
    BocksteinBasis td;   // only Z/p^inf members
    BocksteinBasis ntd;  // Q, Z_(p), Z/p members; zpinf mirrors zp

    BocksteinBasis reconstruct() const { return td | ntd; }
};

SigmaSplit sigma_split_td(const BocksteinBasis& b);

inline BocksteinBasis sigma_ntd(const BocksteinBasis& b) { return sigma_split_td(b).ntd; }

/// Ab(G): the group itself, the tower metadata, or the oracle's answer.
AbelianGroup abelianization_of(const NilpotentGroupDesc& g);

/// Central kernel layers.front() and the quotient tower (Abelian when one
/// layer remains). The quotient keeps Ab, which is exact for Γ-towers.
struct CentralSplit {
    AbelianGroup kernel;
    NilpotentGroupDesc quotient;
};
CentralSplit split_central(const Tower& t);

/// Γ-tower of a finite nilpotent group of class >= 2: layers Γ_i/Γ_{i+1}
/// from the oracle, Ab from the oracle, every stage witnessed.
Tower gamma_tower(const FiniteGroup& g);

/// Direct product of Γ-towers: layers summed aligned at the top.
Tower tower_product(const Tower& a, const Tower& b);

/// Direct product with an Abelian factor, which lands in the top layer.
Tower tower_product(const Tower& a, const AbelianGroup& b);

}  // namespace bock
