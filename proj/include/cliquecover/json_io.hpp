#pragma once

#include "json.hpp"

#include "cliquecover/constructions.hpp"
#include "cliquecover/cover.hpp"
#include "cliquecover/lp.hpp"
#include "cliquecover/multipartite.hpp"
#include "cliquecover/rational.hpp"
#include "cliquecover/sweep.hpp"
#include "cliquecover/symmetrize.hpp"

namespace cliquecover {

using Json = nlohmann::ordered_json;

/// {"num": .., "den": ..}; each part is a number when it fits in 64 bits and
/// a decimal string otherwise.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json opt_result_json(const OptResult& r);
Json trace_json(const SymmetrizationTrace& trace);
Json sweep_report_json(const SweepReport& report, bool include_wall_time = true);
/// Subsets use 1-based part indices.
Json subset_weighting_json(const SubsetWeighting& f);
Json lp_solution_json(const LpSolution& s);
Json hypergraph_json(const LinearHypergraph& h);
/// Throws std::invalid_argument on a malformed or invalid hypergraph.
LinearHypergraph hypergraph_from_json(const Json& j);

}  // namespace cliquecover
