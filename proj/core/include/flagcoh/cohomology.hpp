#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flagcoh/blowup.hpp"
#include "flagcoh/graph.hpp"
#include "flagcoh/smith.hpp"
#include "flagcoh/weyl.hpp"

namespace flagcoh {

/// Everything the complex is built from, for one (type, eps).
struct IncidenceData {
    WeylGroup group;
    EtaTable table;
    CoverRelation covers;
    GraphBuild build;

    static IncidenceData make(const LieType& type, const SignVector& eps, std::uint64_t cap = kDefaultCap);
};

struct DiamondReport {
    std::uint64_t intervals = 0;
    std::uint64_t complete = 0;    // intervals with both two-edge paths in the graph
    std::uint64_t malformed = 0;   // intervals without exactly two middle elements
    std::vector<std::pair<WeylGroup::Index, WeylGroup::Index>> violations;  // exactly one complete path

    bool ok() const noexcept { return violations.empty() && malformed == 0; }
};

/// Scans every length-two Bruhat interval [w, u].
DiamondReport diamond_check(const IncidenceData& data);

enum class Gauge { Forward, Reversed };

struct ChainComplex {
    std::vector<std::vector<int>> basis;  // graph vertex positions per degree
    std::vector<IntMatrix> delta;         // delta[k] : C^k -> C^{k+1}
    std::vector<int> edge_sign;           // per graph edge, +1 or -1
    int sign_freedom = 0;                 // free F2 unknowns left after the gauge fix

    int top_degree() const { return static_cast<int>(basis.size()) - 1; }
    /// delta[k+1] * delta[k] == 0 for every k.
    bool is_complex() const;
};

/// Solves the F2 sign system and returns the 0/±2 cochain complex.
ChainComplex assign_signs(const IncidenceData& data, Gauge gauge = Gauge::Forward);

/// Incidence numbers of the Bruhat cells of the dual flag manifold, read off
/// from Bott-Samelson cube parametrizations: the cell of w^{-1} is oriented by
/// the reversed word of w, and the face theta_j = pi is compared with theta_j = 0
/// through the M-element cascade. Throws Mismatch if the resulting edge set is
/// not the blow-up graph.
ChainComplex orientation_complex(const IncidenceData& data);

enum class SignMethod { Orientation, SolveForward, SolveReversed };
SignMethod parse_sign_method(const std::string& name);
ChainComplex build_complex(const IncidenceData& data, SignMethod method = SignMethod::Orientation);

struct CohomologyGroup {
    int free_rank = 0;
    std::vector<BigInt> torsion;  // elementary divisors > 1

    friend bool operator==(const CohomologyGroup&, const CohomologyGroup&) = default;
};

struct CohomologyGroups {
    std::vector<CohomologyGroup> degrees;
    std::vector<std::string> warnings;  // torsion other than Z/2
};

CohomologyGroups integral_cohomology(const ChainComplex& complex);
CohomologyGroups integral_cohomology(const LieType& type, const SignVector& eps,
                                     std::uint64_t cap = kDefaultCap,
                                     SignMethod method = SignMethod::Orientation);

std::vector<int> rational_betti(const CohomologyGroups& h);
std::vector<int> rational_betti(const LieType& type, const SignVector& eps, std::uint64_t cap = kDefaultCap);

/// Coefficients of prod (1 + t^{2 d_i - 1}) over the dual compact degrees.
std::vector<int> expected_betti(const LieType& type);

/// Differentials vanish mod 2, so this is the length distribution.
std::vector<std::uint64_t> mod2_dims(const WeylGroup& group);
std::vector<std::uint64_t> mod2_dims(const LieType& type, std::uint64_t cap = kDefaultCap);

/// F2 dimensions predicted from the integral groups by universal coefficients.
std::vector<std::uint64_t> mod2_from_integral(const CohomologyGroups& h);

/// "Z + Z/2 + Z/2" style rendering of one group, "0" when trivial.
std::string group_str(const CohomologyGroup& g);

}  // namespace flagcoh
