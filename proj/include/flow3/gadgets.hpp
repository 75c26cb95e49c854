#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "flow3/multigraph.hpp"
#include "flow3/orient.hpp"

namespace flow3 {

/// The 6-vertex, 5-regular gadget: a doubled 5-cycle on vertices 1..5 plus a
/// hub 0 joined to each cycle vertex once. Edge ids: the doubled cycle pairs
/// (1,2),(2,3),(3,4),(4,5),(5,1) take ids 0..9, the spokes (0,i) ids 10..14.
Multigraph doubled_wheel();

struct WheelScan {
  std::uint64_t scanned = 0;    // orientations enumerated
  std::uint64_t compliant = 0;  // orientations meeting the boundary
};

/// Every mod 3-orientation of the wheel has some spoke (0,k) as the
/// minor-edge at vertex k; checked over all 2^15 orientations.
bool wheel_minor_edge_check(WheelScan* scan = nullptr);

/// Under the all-ones boundary every orientation has an in-degree-5 vertex
/// and deficiency multiset {1,1,1,1,1,-5}; checked over all 2^15 orientations.
bool wheel_sink_check(WheelScan* scan = nullptr);

/// Where every piece of a replacement graph came from. Copies are indexed by
/// the wheel vertex they replace; labels index the five edges at the hub
/// vertex of the original graph.
struct HProvenance {
  Vertex hub;                        // the replaced vertex of G
  VertexSet base_vertices;           // V(G) - hub, ascending
  std::vector<EdgeId> base_edges;    // G edge ids away from hub, ascending
  std::array<EdgeId, 5> hub_edge;    // G edge ids at hub, by attachment label
  std::array<std::vector<Vertex>, 6> copy_vertex;  // by base vertex position
  std::array<std::vector<EdgeId>, 6> copy_edge;    // by base edge position

  struct WheelEdgeImage {
    std::uint8_t wu, wv;          // wheel edge endpoints
    EdgeId h_edge;                // its id in H (endpoint order matches wu, wv)
    std::uint8_t label_u, label_v;  // attachment labels in the two copies
  };
  std::vector<WheelEdgeImage> wheel_edges;  // 15, in wheel edge order
};

/// Six copies of G - x glued along the wheel. Label 0 is the minor-edge of
/// the pre-orientation; labels 1..4 are the remaining hub edges ascending.
/// shifts[0] rotates the five spoke attachments in copy 0; shifts[j] (j>=1)
/// rotates the four cycle-end attachments of copy j, keeping the spoke at
/// label 0 (the rotation freedom used for the planar variant).
std::pair<Multigraph, HProvenance> build_mod3_replacement(
    const Multigraph& g, Vertex x, const PartialOrientation& dx,
    const std::array<unsigned, 6>& shifts = {0, 0, 0, 0, 0, 0});

/// From a mod 3-orientation of the replacement graph, recover a mod
/// 3-orientation of G that extends the pre-orientation at x.
Orientation extract_mod3_orientation(const Multigraph& h, const Orientation& d,
                                     const HProvenance& prov, const Multigraph& g, Vertex x,
                                     const PartialOrientation& dx);

struct Z3Replacement {
  Multigraph h;
  Boundary beta_star;     // boundary of H, consistent with beta on each copy
  HProvenance prov;
  Boundary beta;          // derived boundary of G (hub value 2)
  PartialOrientation dz;  // all hub edges oriented outward
};

/// Replacement graph for the group-connectivity argument: labels follow the
/// hub edges ascending, the boundary is derived from beta1 on G - z by
/// discharging the all-outward pre-orientation at z.
Z3Replacement build_z3_replacement(const Multigraph& g, Vertex z, const Boundary& beta1);

/// From a beta*-orientation of the replacement graph, recover a
/// beta-orientation of G with every edge at z directed out of z.
Orientation extract_beta_orientation(const Multigraph& h, const Orientation& dstar,
                                     const HProvenance& prov, const Multigraph& g, Vertex z,
                                     const Boundary& beta);

struct FourCutReduction {
  Multigraph g3;                       // G/A^c with one ingoing boundary edge doubled outward
  Vertex x;                            // the contracted vertex, now of degree 5
  PartialOrientation pre;              // decided exactly on the edges at x
  std::vector<EdgeId> g3_edge_source;  // G edge id per g3 edge; the doubled pair is marked
  EdgeId replaced_edge;                // the boundary edge the doubled pair stands for
  static constexpr EdgeId doubled = static_cast<EdgeId>(-1);
};

/// d1 must be a mod 3-orientation of contract(g, a).first. The boundary is
/// oriented 2-in 2-out at the contraction; the smallest ingoing edge is
/// replaced by two outgoing parallel edges, leaving a balanced degree-5
/// pre-orientation.
FourCutReduction four_cut_reduction(const Multigraph& g, const VertexSet& a,
                                    const Orientation& d1);

/// Merge a mod 3-orientation of g3 extending the pre-orientation with d1
/// back into a mod 3-orientation of G.
Orientation four_cut_recombine(const Multigraph& g, const VertexSet& a, const Orientation& d1,
                               const FourCutReduction& red, const Orientation& d3);

/// Delete the two crossing edges and join a new degree-5 vertex to their
/// ends, doubling the edge to the second end of e2 (alt_doubling doubles the
/// first end of e2 instead).
Multigraph crossing_reduction(const Multigraph& g, EdgeId e1, EdgeId e2,
                              bool alt_doubling = false);

}  // namespace flow3
