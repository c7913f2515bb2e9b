#pragma once

#include <optional>
#include <string>

#include "bock/abelian.hpp"
#include "bock/finite_group.hpp"
#include "bock/nilpotent.hpp"

namespace bock {

/// H_1(G; C) = Ab(G) ⊗ C. Throws OutOfScope when the product leaves the
/// atom vocabulary.
AbelianGroup h1(const NilpotentGroupDesc& g, const AbelianAtom& c);

/// Whether H_1(G; Z/p^inf) and H_2(G; Z/p^inf) both vanish for finite G.
///
/// Universal coefficients give H_1(G; Z/p^inf) = Ab(G) ⊗ Z/p^inf, which is
/// zero for finite Ab(G), and H_2(G; Z/p^inf) = H_2(G) ⊗ Z/p^inf ⊕
/// Tor(Ab(G), Z/p^inf), whose first summand is again finite ⊗ divisible.
/// What remains is Tor(Ab(G), Z/p^inf), the p-primary part of Ab(G).
bool zpinf_h12_vanishes_finite(const FiniteGroup& g, Prime p);

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

struct HomologyReport {
    std::string group_id;
    std::uint32_t p = 2;

    bool q_in_sigma = false;
    bool loc_in_sigma = false;
    bool zp_in_sigma = false;
    bool zpinf_in_sigma = false;

    std::optional<bool> h1_q_zero;             // H_1(G; Q) = 0
    std::optional<bool> h1_zp_zero;            // H_1(G; Z/p) = 0
    std::optional<bool> zpinf_h12_zero;        // finite G only
    std::optional<bool> free_part_h1_zpinf_zero;  // H_1(F(G); Z/p^inf) = 0

    Verdict q_verdict = Verdict::Skipped;      // Q ∉ σ  ⇔ H_1(G;Q) = 0
    Verdict zp_verdict = Verdict::Skipped;     // Z/p ∉ σ ⇔ H_1(G;Z/p) = 0
    Verdict zpinf_verdict = Verdict::Skipped;  // Z/p^inf ∉ σ ⇔ H_1 = H_2 = 0 with Z/p^inf
    Verdict loc_verdict = Verdict::Skipped;    // Z_(p) ∉ σ ⇔ same, applied to F(G)

    bool any_failed() const
    {
        return q_verdict == Verdict::Fail || zp_verdict == Verdict::Fail ||
               zpinf_verdict == Verdict::Fail || loc_verdict == Verdict::Fail;
    }
};

/// Evaluates every applicable homological characterization of σ(G) at p.
/// The Z/p^inf face needs a finite table; the Z_(p) face needs F(G), known
/// for Abelian and finite inputs (F = 1). Inapplicable faces are Skipped.
HomologyReport homology_report(const NilpotentGroupDesc& g, Prime p,
                                 const std::string& group_id = "");

}  // namespace bock
