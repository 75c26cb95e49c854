#pragma once

#include <optional>
#include <vector>

#include "flow3/groupconn.hpp"
#include "flow3/multigraph.hpp"
#include "flow3/orient.hpp"

namespace flow3 {

/// The unique value in {0, +-1, +-2, +-3} matching d(A) mod 2 and beta(A)
/// mod 3. The (odd, residue 0) case admits both +-3 and resolves to +3; only
/// |tau| is ever consumed.
int tau(const Multigraph& g, const Boundary& beta, const VertexSet& a);

struct HypothesisReport {
  bool order_ok = false;   // |V| >= 3
  bool vertex_ok = false;  // d(z) <= 4 + |tau(z)| and the pre-orientation meets beta(z)
  bool cuts_ok = false;    // d(A) >= 4 + |tau(A)| away from z
  std::size_t degree_z = 0;
  int tau_z = 0;
  std::optional<VertexSet> violating_set;
  std::size_t violating_degree = 0;
  int violating_tau = 0;
  bool pass() const { return order_ok && vertex_ok && cuts_ok; }
};

/// Conditions of the extension theorem, scanned exhaustively over all
/// nonempty A avoiding z with |V - A| >= 2. The first violating set in scan
/// order is reported.
HypothesisReport check_extension_hypotheses(const Multigraph& g, const Boundary& beta,
                                            Vertex z, const PartialOrientation& dz,
                                            const Budget& budget = {});

/// Extends dz to a beta-orientation once the hypotheses hold. The theorem
/// guarantees existence, so a solver miss is an internal-consistency error.
Orientation extend_preorientation(const Multigraph& g, const Boundary& beta, Vertex z,
                                  const PartialOrientation& dz, const Budget& budget = {});

struct FourCutApex {
  bool degenerate = false;  // no 4-cuts: graph returned unchanged
  Multigraph graph;         // apex over every 4-critical set
  Boundary boundary;
  PartialOrientation preorientation;  // decided exactly on the apex edges
  Vertex apex = 0;
  std::vector<VertexSet> critical;
};

/// Apex construction for 4-edge-connected graphs with at most five 4-cuts
/// and no 5-cuts: one apex edge into each 4-critical set, oriented and the
/// boundary adjusted so that d(A_i) = 4 + |tau'(A_i)| holds for every set,
/// making the extension hypotheses pass.
FourCutApex build_four_cut_apex(const Multigraph& g, const Boundary& beta,
                                const Budget& budget = {});

/// Full pipeline: build the apex, extend, restrict back to G. Solves directly
/// in the degenerate no-4-cut case.
Orientation beta_orientation_via_apex(const Multigraph& g, const Boundary& beta,
                                      const Budget& budget = {});

/// 5-edge-connected graphs with at most seven 5-critical cuts: builds the
/// degree-7 apex over the critical sets (padding the first set) as a
/// hypothesis check, then reports the Z3-connectivity verdict of G itself.
Verdict five_cut_apex_check(const Multigraph& g, const ZMode& mode = {},
                            const Budget& budget = {}, unsigned jobs = 1);

}  // namespace flow3
