#pragma once

// Brute-force enumeration of vertex gluings.  A diagram starts from j labeled
// vertices, each with 2*nu cyclically ordered darts; a gluing pairs up all the
// darts (a fixed-point-free involution).  Each connected gluing is a map on an
// orientable surface whose genus follows from its Euler characteristic, so
// exhaustive enumeration gives an independent count of maps by genus.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hicat/arith.hpp"
#include "hicat/guard.hpp"

namespace hicat {

inline constexpr int kDefaultDartGuard = 16;

// A complete pairing of the darts of j labeled vertices of valence 2*nu.  Dart
// ids are v * 2*nu + p for vertex v, position p; partner[d] is the dart glued
// to d (partner is a fixed-point-free involution).
struct GluingDiagram {
    int nu = 2;
    int j = 1;
    std::vector<int> partner;

    int dart_count() const { return 2 * nu * j; }
    int vertex_of(int dart) const { return dart / (2 * nu); }
};

// Counts of connected gluings of (nu, j) keyed by genus, plus bookkeeping.
struct GenusCountTable {
    int nu = 2;
    int j = 1;
    Integer total_matchings;        // all pairings, connected or not
    Integer disconnected;           // pairings whose glued graph is not connected
    std::map<int, Integer> counts;  // genus -> number of connected pairings

    Integer connected_total() const;
};

// Number of ways to pair 2*nu*j darts: (2*nu*j - 1)!!.
Integer count_matchings(int nu, int j);

// Visit every fixed-point-free involution on the darts of (nu, j) exactly
// once, always pairing the lowest unpaired dart first.  Throws GuardError when
// 2*nu*j > dart_guard.
void enumerate_matchings(int nu, int j, int dart_guard,
                         const std::function<void(const GluingDiagram&)>& visit);

// True when the multigraph on vertices induced by the pairing is connected.
bool is_connected(const GluingDiagram& diagram);

// Face count of a gluing: cycles of the permutation d -> sigma(partner[d]),
// where sigma advances a dart one position around its vertex.
int count_faces(const GluingDiagram& diagram);

// Genus of a connected gluing via Euler's formula with V = j, E = nu*j and
// F = count_faces: g = (2 - V + E - F) / 2.  Throws std::invalid_argument on
// a disconnected diagram (the formula applies per component).
int genus(const GluingDiagram& diagram);

// Exhaustive genus census of all gluings of (nu, j).  threads > 1 shards the
// enumeration by the partner of dart 0 and sums the per-shard tables.  Throws
// GuardError when 2*nu*j > dart_guard.
GenusCountTable count_maps_oracle(int nu, int j, int dart_guard = kDefaultDartGuard,
                                  int threads = 1);

// JSON encoding of a census:
// {"nu":2,"j":2,"total":"105","disconnected":"9","counts":{"0":"36","1":"60"}}
std::string genus_table_json(const GenusCountTable& table);

}  // namespace hicat
