#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oddc/classify.hpp"
#include "oddc/coloring.hpp"
#include "oddc/discharge.hpp"
#include "oddc/embedding.hpp"
#include "oddc/graph.hpp"
#include "oddc/solver.hpp"

namespace oddc {

// Reducible configurations. The first four are purely graph-theoretic;
// the rest need an embedding.
//   L-no3v       a 3-vertex
//   L-tool1      two adjacent 2-vertices
//   L-tool2      two adjacent convenient vertices
//   L-tool3      a k-vertex (4<=k<=6) with >= 2k-6 neighbors that are
//                2-vertices or convenient
//   L-4f5f       a 4- or 5-face with two 2-vertices two steps apart
//   L-nc4v       a non-convenient 4-vertex with exactly one convenient
//                neighbor and a non-convenient 4-neighbor
//   L-53nbr      a non-convenient k-vertex (k in {4,6,8,10}) with
//                >= 3k/2-5 convenient neighbors, one of them a 5_3-vertex
//   L-2path4f    a 2-path u-w-v (w a 2-vertex, u and v 5_3-vertices)
//                whose two incident faces are both 4-faces
//   L-4040face   a (4_0,4_0,4_0,4_0)-face
//   L-12vert     a non-convenient 12-vertex adjacent to twelve poor
//                5_3-vertices (detection + ledger recomputation only)
enum class LemmaId {
    No3V,
    Tool1,
    Tool2,
    Tool3,
    FourFiveFace,
    NonConv4V,
    FiveThreeNbr,
    TwoPath4F,
    All40Face,
    TwelveVert,
};

std::string lemma_id_str(LemmaId id);
std::optional<LemmaId> parse_lemma_id(std::string_view text);
bool lemma_needs_embedding(LemmaId id);
std::vector<LemmaId> all_lemma_ids();

// A located configuration: role name -> vertex id (role order fixed per
// lemma), plus face roles where applicable.
struct ConfigMatch {
    LemmaId lemma = LemmaId::No3V;
    std::vector<std::pair<std::string, int>> vertex_map;
    std::vector<std::pair<std::string, int>> face_map;

    int vertex(std::string_view role) const;
};

// All matches, canonically ordered (lexicographic on the role vertex
// ids). The Graph overload serves the graph-theoretic lemmas and throws
// for face-dependent ones.
std::vector<ConfigMatch> find_configurations(const Graph& g, LemmaId id);
std::vector<ConfigMatch> find_configurations(const RotationSystem& rs,
                                             const FaceSet& faces, LemmaId id);

enum class SurgeryKind { DeleteVertices, SplitEdge, Add2Path };

struct SurgeryStep {
    SurgeryKind kind = SurgeryKind::DeleteVertices;
    std::vector<int> operands;  // original vertex ids
    std::vector<int> produced;  // reduced ids of new 2-vertices
};

struct SurgeryResult {
    std::vector<SurgeryStep> steps;
    Graph reduced;
    std::vector<int> to_reduced;    // original id -> reduced id, -1 if deleted
    std::vector<int> from_reduced;  // reduced id -> original id, -1 if new
    std::vector<int> produced;      // reduced ids of all new 2-vertices
};

// The reduction from the matched configuration's argument: vertex
// deletions, one edge split, or deletions plus 2-paths. The result stays
// simple; split-edge keeps retained ids unchanged. L-12vert has no
// surgery and throws.
SurgeryResult apply_surgery(const Graph& g, const ConfigMatch& match);

struct Extension {
    std::optional<Coloring> coloring;  // odd 7-coloring of the original graph
    bool used_fallback = false;        // scripted step failed, search used
    std::vector<std::string> trace;    // forbidden sets / failure detail
};

// Lifts a verified odd 7-coloring of the reduced instance back to the
// original graph. Scripted forbidden-set extensions (minimum-color
// tie-break) for L-no3v, L-tool1, L-tool2, L-4f5f, falling back to
// bounded search over the same modified vertex set if the scripted
// choice does not verify; bounded exhaustive search over the proof's
// modified vertex set for the rest. Every returned coloring has been
// verified against the original graph.
Extension extend_coloring(const Graph& g, const ConfigMatch& match,
                          const SurgeryResult& surgery,
                          const Coloring& reduced_coloring);

// Recoloring capability of convenient vertices: when even-degree x with
// a 2-neighbor has no odd color, recoloring a 2-neighbor creates one.
// Returns false if x stays without an odd color.
bool repair_via_2_neighbor(const Graph& g, Coloring& c, int x);

struct LemmaReport {
    ConfigMatch match;
    SurgeryResult surgery;
    Coloring oracle;  // reduced-instance coloring from the solver
    Extension extension;
    bool verified = false;
};

struct CorpusEntry {
    Graph g;
    std::optional<RotationSystem> rs;
    std::string provenance;
};

struct HarnessFailure {
    int entry = 0;
    ConfigMatch match;
    std::string detail;
};

struct HarnessSummary {
    LemmaId lemma = LemmaId::No3V;
    int entries = 0;
    std::uint64_t matches = 0;
    int processed = 0;
    int passed = 0;
    int failed = 0;
    int oracle_timeouts = 0;
    int oracle_infeasible = 0;
    std::vector<HarnessFailure> failures;
};

// For each sampled match: surgery -> solver oracle -> extension ->
// verification. trials <= 0 processes every match; otherwise up to
// `trials` matches are drawn per entry with the given seed and processed
// in canonical order. Failed extensions dump a reproducer into
// reproducer_dir when it is nonempty.
HarnessSummary run_lemma_harness(const std::vector<CorpusEntry>& corpus,
                                 LemmaId id, int trials, std::uint64_t seed,
                                 const SearchConfig& oracle_cfg,
                                 const std::string& reproducer_dir = "");

// L-12vert support: finals of the matched neighborhood (the 12-vertex,
// its neighbors, their 2-neighbors and the faces around the hub) from a
// full rule application.
struct NeighborhoodLedger {
    std::vector<std::pair<ElementId, Charge>> finals;
};

NeighborhoodLedger twelve_vertex_ledger(const RotationSystem& rs,
                                        const FaceSet& faces,
                                        const ConfigMatch& match);

}  // namespace oddc
