#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wbsdp/idempotents.hpp"
#include "wbsdp/lattice.hpp"

namespace wbsdp {

// King modification: sign in {-1, 0, +1} and the modified bipartition
// (defined iff the sign is nonzero).
struct ModificationResult {
    int g = 0;
    std::optional<Bipartition> f;
};

// Number of Littlewood-Richardson skew tableaux of shape mu/lam with content
// gamma (lattice-word condition). Zero when sizes or containment fail.
long lrCoefficient(const Partition& mu, const Partition& gamma, const Partition& lam);

ModificationResult kingModify(const Bipartition& tilde, int d);

// m^lambda_{mu,nu}(d): signed sum over King preimages; never negative.
long restrictionMultiplicity(const Bipartition& lam, const Partition& mu, const Partition& nu,
                             int d);

enum class CountKind { FullBrauer, GelfandTsetlin, SpSq, Dimension };

Int variableCount(int p, int q, int d, CountKind kind);

// Paper-layout tables as CSV (rows/columns mirroring the printed axes).
std::string brauerTableCsv(int maxD = 10);
std::string spqTableCsv(int maxD = 10);
std::string gtTableCsv(int maxN = 8, int maxD = 10);
std::string dimensionTableCsv(int maxN = 8, int maxD = 10);

// The printed (p, q) column order shared by the Brauer and SpSq tables.
std::vector<std::pair<int, int>> printedPairOrder(int maxTotal = 10);

}  // namespace wbsdp
