#pragma once

#include <string>

#include "bock/primes.hpp"

namespace bock {

/// A Bockstein basis: which of Q, Z_(p), Z/p, Z/p^inf belong to sigma(G).
///
/// Maximal convention: loc ⊆ zp ⊆ zpinf.
struct BocksteinBasis {
    bool has_q = false;
    PrimeSet loc;    // p with Z_(p) in sigma
    PrimeSet zp;     // p with Z/p in sigma
    PrimeSet zpinf;  // p with Z/p^inf in sigma

    bool chain_holds() const { return loc.subset_of(zp) && zp.subset_of(zpinf); }
    bool empty() const { return !has_q && loc.empty() && zp.empty() && zpinf.empty(); }

    BocksteinBasis operator|(const BocksteinBasis& other) const
    {
        return {has_q || other.has_q, loc | other.loc, zp | other.zp, zpinf | other.zpinf};
    }
    BocksteinBasis& operator|=(const BocksteinBasis& other) { return *this = *this | other; }

    bool subset_of(const BocksteinBasis& other) const
    {
        return (!has_q || other.has_q) && loc.subset_of(other.loc) && zp.subset_of(other.zp) &&
               zpinf.subset_of(other.zpinf);
    }

    bool operator==(const BocksteinBasis&) const = default;

    /// "Q: no | Z_(p): {} | Z/p: {2} | Z/p^inf: {2}"
    std::string to_string() const
    {
        return std::string("Q: ") + (has_q ? "yes" : "no") + " | Z_(p): " + loc.to_string() +
               " | Z/p: " + zp.to_string() + " | Z/p^inf: " + zpinf.to_string();
    }
};

}  // namespace bock
