#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apexrep/arrangement.hpp"
#include "apexrep/gadget.hpp"
#include "apexrep/graph.hpp"

namespace apexrep {

struct IntersectionResult {
  Graph graph;
  // Pairs of same-orientation segments that share at least one point. Any
  // entry makes the arrangement illegal as a PURE-2-DIR representation.
  std::vector<std::pair<Vertex, Vertex>> parallel_contacts;
};

// Exact pairwise closed-segment intersection test. Vertices are the segment
// owners; an edge joins owners of a crossing or touching horizontal and
// vertical segment. Knows nothing about how the arrangement was built.
IntersectionResult intersection_graph(const Arrangement& arr);

// True iff no pair of segments shares more than one point.
bool one_string_check(const Arrangement& arr);

// Originals ordered by where their segments meet the apex segment, bottom
// to top. Throws ContractViolation when the apex segment is not vertical or
// an original does not meet it in exactly one point.
std::vector<Vertex> extract_hamiltonian_order(const Arrangement& arr, const Vertex& apex,
                                              const std::vector<Vertex>& originals);

// Extracts the order and checks that g plus the induced path is planar.
bool roundtrip_check(const Graph& g, const Arrangement& arr, const ApexGadget& gadget);

struct Failure {
  std::string check;
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  int k = 0;
  int girth_bound = 0;
  std::optional<std::size_t> gadget_girth;  // nullopt: acyclic

  bool bipartite = false;
  bool girth_ok = false;
  bool apex_ok = false;

  bool phpc_yes = false;
  std::vector<Vertex> ordering;  // certificate ordering when phpc_yes

  // Constructive checks; nullopt when not attempted (no-instance, or the
  // construction is unavailable for this input).
  std::optional<bool> census_ok;
  std::optional<bool> pure2dir_legal;
  std::optional<bool> one_point_per_pair;
  std::optional<bool> graph_equality;
  std::optional<bool> extraction_matches;
  std::optional<bool> roundtrip_planar;

  std::vector<Failure> failures;
  // Why constructive checks were skipped, if they were.
  std::vector<std::string> notes;

  // Every attempted check passed and nothing was recorded as failing.
  bool passed() const;
};

struct VerifyOptions {
  std::optional<int> k;  // overrides the depth derived from the girth bound
  unsigned threads = 1;
};

// Runs the whole reduction on g: gadget properties, PHPC decision, and for
// yes-instances the drawing, the segment arrangement and every check on
// it. Throws InvalidInput for non-planar g.
VerificationReport verify_reduction(const Graph& g, int girth_bound, const VerifyOptions& opts = {});

}  // namespace apexrep
