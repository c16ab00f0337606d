#pragma once

// The three concrete object families counted by the higher Catalan numbers --
// generalized Dyck paths, exact-change queues, polygon dissections -- with
// exhaustive enumerators and the bijections between them, including the
// multi-line queue shift.
//
// Conventions fixed here:
//   * A path step is Up = +1 or Down = -(nu-1) on the line (equivalently the
//     2-D steps (1,1) and (1,-(nu-1))). A path is admissible when every
//     prefix sum is >= 0 and the total is 0.
//   * Enumeration order is lexicographic in steps with Up < Down.
//   * Queue lines run front to back; a line gives exact change when the
//     running till never goes negative (each One deposits 1, each Nu takes
//     nu-1 in change).
//   * Dissections live on a convex ((nu-1)j+2)-gon with vertices labeled
//     0..sides-1 and the marked edge fixed at (0,1); diagonals are stored as
//     sorted vertex pairs and the set is kept sorted.

#include "hicat/arith.hpp"
#include "hicat/guard.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hicat {

inline constexpr int kDefaultPathStepGuard = 24;       // max nu*j steps
inline constexpr int kDefaultDissectionFaceGuard = 10;  // max faces j

enum class Step : unsigned char { Up, Down };
enum class Bill : unsigned char { One, Nu };

struct LatticePoint {
    long long x = 0;
    long long y = 0;
};

struct LatticePath {
    int nu = 2;
    std::vector<Step> steps;

    bool operator==(const LatticePath&) const = default;

    // Every prefix sum >= 0 and total sum 0.
    bool is_admissible() const;
    // Number of Down steps (the size index j).
    int down_count() const;
};

using QueueLine = std::vector<Bill>;

struct QueueArrangement {
    int nu = 2;
    std::vector<QueueLine> lines;

    bool operator==(const QueueArrangement&) const = default;
};

struct PolygonDissection {
    int nu = 2;
    int j = 1;
    int sides = 0;  // (nu-1)*j + 2
    std::vector<std::pair<int, int>> diagonals;  // sorted pairs, sorted set

    bool operator==(const PolygonDissection&) const = default;
};

// Closed-form path counts ------------------------------------------------

// Number of (1,1)/(1,-(nu-1)) lattice paths from p to q: C(q.x-p.x, d) where
// u + d = q.x - p.x and u - (nu-1)d = q.y - p.y, or 0 when that system has no
// nonnegative integer solution. Requires p.x < q.x.
Integer count_paths_between(LatticePoint p, LatticePoint q, int nu);

// Number of paths from (0,0) to (nu j, 0) that dip below the x-axis:
// (nu-1) C(nu j, j-1), by the correspondence with paths from (0,-nu).
Integer count_paths_touching_below(int nu, long long j);

// Exhaustive enumeration -------------------------------------------------

// All admissible paths with j Down steps (length nu*j), lexicographic with
// Up < Down. Throws GuardError when nu*j exceeds step_guard.
std::vector<LatticePath> enumerate_dyck_paths(int nu, int j,
                                              int step_guard = kDefaultPathStepGuard);

// All i-line arrangements with j Nu bills total: every line nonempty, valid,
// and returning the till to zero. Cases are ordered by the composition of j
// and then per-line enumeration order.
std::vector<QueueArrangement> enumerate_queue_arrangements(
    int nu, int j, int lines, int step_guard = kDefaultPathStepGuard);

// All dissections of the marked ((nu-1)j+2)-gon into j faces with nu+1 sides
// each, generated recursively from the face on the marked edge. Throws
// GuardError when j exceeds face_guard.
std::vector<PolygonDissection> enumerate_dissections(
    int nu, int j, int face_guard = kDefaultDissectionFaceGuard);

// Queue validity and bijections ------------------------------------------

// Scanning front to back, the till never goes negative.
bool line_gives_exact_change(const QueueLine& line, int nu);

// Till ends at exactly zero (and never dips below on the way).
bool line_is_balanced(const QueueLine& line, int nu);

// Positionwise Up <-> One, Down <-> Nu. path_to_queue yields a single-line
// arrangement; queue_to_path requires one. Both reject invalid inputs.
QueueArrangement path_to_queue(const LatticePath& path);
LatticePath queue_to_path(const QueueArrangement& queue);

// The multi-line shift: repeatedly change the Nu bill at the back of the
// first line into a One and adjoin the next line; after the last adjoin,
// remove the final Nu customer. Produces a single valid line with j-i Nu
// bills and (nu-1)j + i-1 One bills from an i-line arrangement with j Nu
// bills. Requires every line nonempty, valid, and balanced (hence ending in
// a Nu bill).
QueueLine merge_queues(const QueueArrangement& queue);

// Inverse of merge_queues: append a Nu bill, then repeatedly scan from the
// back matching each Nu bill with nu-1 One bills; the first One bill with no
// Nu behind it to serve marks a completed line, which is cut off, and the
// One at the new back becomes a Nu again. Requires a valid line with the
// merged composition for (nu, lines).
QueueArrangement split_queue(const QueueLine& line, int nu, int lines);

// First-block decomposition ----------------------------------------------

// Splits a nonempty admissible path into nu admissible sub-paths: the first
// Up step, the other nu-2 Up steps whose change the first returning Down
// consumes, and that Down cut the path into nu gaps, each balanced at its
// level.
std::vector<LatticePath> decompose_path(const LatticePath& path);

// Inverse: U p1 U p2 ... U p_{nu-1} D p_nu. Requires nu admissible parts.
LatticePath reassemble_path(int nu, const std::vector<LatticePath>& parts);

// Dissection structure ---------------------------------------------------

bool diagonals_non_crossing(const PolygonDissection& d);

// Side counts of the faces cut out by the diagonals (boundary edges and
// diagonals both count as sides). Throws std::invalid_argument on crossing
// or duplicate diagonals.
std::vector<int> face_sizes(const PolygonDissection& d);

// Serialization ----------------------------------------------------------

std::string path_str(const LatticePath& path);                    // "UUDD"
LatticePath parse_path(int nu, std::string_view text);
std::string queue_str(const QueueArrangement& queue);             // "11NN|1N"
QueueArrangement parse_queue(int nu, std::string_view text);
std::string dissection_str(const PolygonDissection& d);  // "sides=6 diagonals=(0,2),(0,4)"

}  // namespace hicat
