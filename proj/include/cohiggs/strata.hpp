#pragma once

#include <vector>

#include "cohiggs/lie_core.hpp"

namespace cohiggs {

struct StratumRecord {
  HNType hn;
  int dim_cohiggs_space;  // dim V_M
  int dim_automorphisms;  // dim Aut_M
  int dim_stratum;        // dim V_M - dim Aut_M
  bool is_generic;        // M vanishes on every simple factor
};

/// Simple-root values at most this large are the ones admitting stable co-Higgs fields,
/// so they index the strata.
inline constexpr int kMaxStratumSimpleValue = 2;

/// dim H^0(ad(E_G) (x) TX) = 3 rank(G) + sum over roots of h^0(O(chi(M) + 2)),
/// by direct summation.
int dim_cohiggs_space(const ReductiveGroup& g, const HNType& m);

/// 3 dim(G) + sum_{chi(M) > 3} (chi(M) - 3); agrees with dim_cohiggs_space for every M.
int dim_cohiggs_space_closed_form(const ReductiveGroup& g, const HNType& m);

/// rank(G) + sum_{chi(M) >= 0} (chi(M) + 1).  Also evaluates
/// dim(G) + sum_{chi(M) > 1} (chi(M) - 1) and throws std::logic_error on disagreement.
int dim_automorphisms(const ReductiveGroup& g, const HNType& m);

/// 2 dim(G) - 2 #{chi(M) > 3} - sum_{1 < chi(M) <= 3} (chi(M) - 1).
int dim_stratum_closed_form(const ReductiveGroup& g, const HNType& m);

/// dim_cohiggs_space - dim_automorphisms, cross-checked against the closed form.
int dim_stratum(const ReductiveGroup& g, const HNType& m);

StratumRecord make_stratum_record(const ReductiveGroup& g, const HNType& m);

/// Every dominant M with simple values in {0,1,2} and the given central degrees,
/// lexicographic in the concatenated a-vector.  Size 3^(semisimple rank).
std::vector<StratumRecord> enumerate_strata(const ReductiveGroup& g, const IntVector& central_degrees);

}  // namespace cohiggs
