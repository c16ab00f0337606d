#include "hicat/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hicat {

namespace {

void require_nu(int nu) {
    if (nu < 2) throw std::invalid_argument("nu must be >= 2");
}

}  // namespace

bool LatticePath::is_admissible() const {
    long long h = 0;
    for (Step s : steps) {
        h += s == Step::Up ? 1 : -(nu - 1);
        if (h < 0) return false;
    }
    return h == 0;
}

int LatticePath::down_count() const {
    return static_cast<int>(std::count(steps.begin(), steps.end(), Step::Down));
}

Integer count_paths_between(LatticePoint p, LatticePoint q, int nu) {
    require_nu(nu);
    if (p.x >= q.x) throw std::invalid_argument("count_paths_between: need p.x < q.x");
    long long dx = q.x - p.x;
    long long dy = q.y - p.y;
    // u + d = dx, u - (nu-1) d = dy  =>  d = (dx - dy)/nu, u = dx - d
    if ((dx - dy) % nu != 0) return 0;
    long long d = (dx - dy) / nu;
    if (d < 0 || dx - d < 0) return 0;
    return binomial(dx, d);
}

Integer count_paths_touching_below(int nu, long long j) {
    require_nu(nu);
    if (j < 1) throw std::invalid_argument("count_paths_touching_below: j must be >= 1");
    return Integer(nu - 1) * binomial(nu * j, j - 1);
}

namespace {

void dyck_dfs(int nu, int ups_left, int downs_left, long long height,
              std::vector<Step>& cur, std::vector<LatticePath>& out) {
    if (ups_left == 0 && downs_left == 0) {
        out.push_back(LatticePath{nu, cur});
        return;
    }
    if (ups_left > 0) {
        cur.push_back(Step::Up);
        dyck_dfs(nu, ups_left - 1, downs_left, height + 1, cur, out);
        cur.pop_back();
    }
    if (downs_left > 0 && height >= nu - 1) {
        cur.push_back(Step::Down);
        dyck_dfs(nu, ups_left, downs_left - 1, height - (nu - 1), cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<LatticePath> enumerate_dyck_paths(int nu, int j, int step_guard) {
    require_nu(nu);
    if (j < 0) throw std::invalid_argument("enumerate_dyck_paths: j must be nonnegative");
    long long total = static_cast<long long>(nu) * j;
    if (total > step_guard)
        throw GuardError("enumerate_dyck_paths: " + std::to_string(total) +
                         " steps exceeds guard of " + std::to_string(step_guard));
    std::vector<LatticePath> out;
    std::vector<Step> cur;
    cur.reserve(static_cast<size_t>(total));
    dyck_dfs(nu, (nu - 1) * j, j, 0, cur, out);
    return out;
}

bool line_gives_exact_change(const QueueLine& line, int nu) {
    long long till = 0;
    for (Bill b : line) {
        if (b == Bill::One) {
            ++till;
        } else {
            if (till < nu - 1) return false;
            till -= nu - 1;
        }
    }
    return true;
}

bool line_is_balanced(const QueueLine& line, int nu) {
    if (!line_gives_exact_change(line, nu)) return false;
    long long till = 0;
    for (Bill b : line) till += b == Bill::One ? 1 : -(nu - 1);
    return till == 0;
}

QueueArrangement path_to_queue(const LatticePath& path) {
    require_nu(path.nu);
    if (!path.is_admissible())
        throw std::invalid_argument("path_to_queue: path is not admissible");
    QueueLine line;
    line.reserve(path.steps.size());
    for (Step s : path.steps) line.push_back(s == Step::Up ? Bill::One : Bill::Nu);
    return QueueArrangement{path.nu, {std::move(line)}};
}

LatticePath queue_to_path(const QueueArrangement& queue) {
    require_nu(queue.nu);
    if (queue.lines.size() != 1)
        throw std::invalid_argument("queue_to_path: expected a single line");
    const QueueLine& line = queue.lines[0];
    if (!line_is_balanced(line, queue.nu))
        throw std::invalid_argument("queue_to_path: line is not a valid balanced line");
    LatticePath path{queue.nu, {}};
    path.steps.reserve(line.size());
    for (Bill b : line) path.steps.push_back(b == Bill::One ? Step::Up : Step::Down);
    return path;
}

std::vector<QueueArrangement> enumerate_queue_arrangements(int nu, int j, int lines,
                                                           int step_guard) {
    require_nu(nu);
    if (j < 0 || lines < 1)
        throw std::invalid_argument("enumerate_queue_arrangements: need j >= 0, lines >= 1");
    if (static_cast<long long>(nu) * j > step_guard)
        throw GuardError("enumerate_queue_arrangements: " + std::to_string(nu * j) +
                         " customers exceeds guard of " + std::to_string(step_guard));
    std::vector<QueueArrangement> out;
    if (j < lines) return out;  // every line needs at least one Nu bill

    std::map<int, std::vector<QueueLine>> pools;
    auto pool = [&](int k) -> const std::vector<QueueLine>& {
        auto it = pools.find(k);
        if (it == pools.end()) {
            std::vector<QueueLine> p;
            for (const LatticePath& path : enumerate_dyck_paths(nu, k, step_guard))
                p.push_back(path_to_queue(path).lines[0]);
            it = pools.emplace(k, std::move(p)).first;
        }
        return it->second;
    };

    std::vector<int> comp(static_cast<size_t>(lines));
    QueueArrangement arr{nu, {}};

    auto product = [&](auto&& self, int idx) -> void {
        if (idx == lines) {
            out.push_back(arr);
            return;
        }
        for (const QueueLine& l : pool(comp[static_cast<size_t>(idx)])) {
            arr.lines.push_back(l);
            self(self, idx + 1);
            arr.lines.pop_back();
        }
    };
    auto compose = [&](auto&& self, int idx, int remaining) -> void {
        if (idx == lines - 1) {
            comp[static_cast<size_t>(idx)] = remaining;
            product(product, 0);
            return;
        }
        for (int v = 1; v <= remaining - (lines - 1 - idx); ++v) {
            comp[static_cast<size_t>(idx)] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    compose(compose, 0, j);
    return out;
}

QueueLine merge_queues(const QueueArrangement& queue) {
    require_nu(queue.nu);
    if (queue.lines.empty())
        throw std::invalid_argument("merge_queues: need at least one line");
    for (const QueueLine& l : queue.lines) {
        if (l.empty()) throw std::invalid_argument("merge_queues: empty line");
        if (!line_is_balanced(l, queue.nu))
            throw std::invalid_argument(
                "merge_queues: every line must give exact change and return the till to zero");
        if (l.back() != Bill::Nu)
            throw std::invalid_argument("merge_queues: every line must end in a Nu bill");
    }
    QueueLine work = queue.lines[0];
    for (size_t k = 1; k < queue.lines.size(); ++k) {
        work.back() = Bill::One;  // change the Nu bill at the back, then adjoin
        work.insert(work.end(), queue.lines[k].begin(), queue.lines[k].end());
    }
    work.pop_back();  // the final customer holds a Nu bill; remove them
    return work;
}

QueueArrangement split_queue(const QueueLine& line, int nu, int lines) {
    require_nu(nu);
    if (lines < 1) throw std::invalid_argument("split_queue: lines must be >= 1");
    if (!line_gives_exact_change(line, nu))
        throw std::invalid_argument("split_queue: line does not give exact change");
    long long nus = static_cast<long long>(std::count(line.begin(), line.end(), Bill::Nu));
    long long ones = static_cast<long long>(line.size()) - nus;
    long long j = nus + lines;
    if (ones != (nu - 1) * j + lines - 1)
        throw std::invalid_argument("split_queue: bill counts do not match a merged " +
                                    std::to_string(lines) + "-line arrangement");

    QueueLine work = line;
    work.push_back(Bill::Nu);  // restore the removed final customer
    std::vector<QueueLine> collected;  // lines in back-to-front order
    for (int cut = 0; cut < lines - 1; ++cut) {
        // Scan from the back; each Nu bill claims nu-1 One bills ahead of it.
        // The first One bill nobody claims marks the previous shift point.
        long long need = 0;
        long long at = -1;
        for (long long p = static_cast<long long>(work.size()) - 1; p >= 0; --p) {
            if (work[p] == Bill::Nu) {
                need += nu - 1;
            } else if (need == 0) {
                at = p;
                break;
            } else {
                --need;
            }
        }
        if (at < 0) throw std::invalid_argument("split_queue: malformed line (no cut point)");
        collected.emplace_back(work.begin() + at + 1, work.end());
        work.resize(static_cast<size_t>(at) + 1);
        work.back() = Bill::Nu;  // undo the shift's change
    }
    collected.push_back(std::move(work));

    QueueArrangement out{nu, {collected.rbegin(), collected.rend()}};
    for (const QueueLine& l : out.lines)
        if (l.empty() || !line_is_balanced(l, nu))
            throw std::invalid_argument("split_queue: malformed line (bad segment)");
    return out;
}

std::vector<LatticePath> decompose_path(const LatticePath& path) {
    require_nu(path.nu);
    if (path.steps.empty() || !path.is_admissible())
        throw std::invalid_argument("decompose_path: need a nonempty admissible path");
    const int nu = path.nu;
    // Walk to the first return to zero; remember, per level k = 1..nu-1, the
    // last Up step that raised the height to k before that point.
    std::vector<size_t> last_up(static_cast<size_t>(nu - 1), 0);
    long long h = 0;
    size_t first_return = 0;
    for (size_t p = 0; p < path.steps.size(); ++p) {
        if (path.steps[p] == Step::Up) {
            if (h < nu - 1) last_up[static_cast<size_t>(h)] = p;
            ++h;
        } else {
            h -= nu - 1;
        }
        if (h == 0) {
            first_return = p;
            break;
        }
    }
    std::vector<size_t> cuts(last_up.begin(), last_up.end());
    cuts.push_back(first_return);
    std::vector<LatticePath> parts;
    parts.reserve(static_cast<size_t>(nu));
    for (size_t g = 0; g + 1 < cuts.size(); ++g)
        parts.push_back(LatticePath{
            nu, {path.steps.begin() + static_cast<long>(cuts[g]) + 1,
                 path.steps.begin() + static_cast<long>(cuts[g + 1])}});
    parts.push_back(LatticePath{
        nu, {path.steps.begin() + static_cast<long>(first_return) + 1, path.steps.end()}});
    return parts;
}

LatticePath reassemble_path(int nu, const std::vector<LatticePath>& parts) {
    require_nu(nu);
    if (parts.size() != static_cast<size_t>(nu))
        throw std::invalid_argument("reassemble_path: need exactly nu parts");
    for (const LatticePath& p : parts)
        if (p.nu != nu || !p.is_admissible())
            throw std::invalid_argument("reassemble_path: parts must be admissible paths for nu");
    LatticePath out{nu, {}};
    for (int g = 0; g < nu - 1; ++g) {
        out.steps.push_back(Step::Up);
        out.steps.insert(out.steps.end(), parts[static_cast<size_t>(g)].steps.begin(),
                         parts[static_cast<size_t>(g)].steps.end());
    }
    out.steps.push_back(Step::Down);
    out.steps.insert(out.steps.end(), parts[static_cast<size_t>(nu) - 1].steps.begin(),
                     parts[static_cast<size_t>(nu) - 1].steps.end());
    return out;
}

namespace {

using DiagSet = std::vector<std::pair<int, int>>;

std::vector<DiagSet> dissect_arc(int nu, int lo, int hi);

// Enumerate the face containing the marked chord (lo,hi): its vertices are
// u[0]=lo < u[1] < ... < u[nu-1] < u[nu]=hi, every gap of size 1 mod (nu-1).
void pick_face(int nu, int lo, int hi, int k, std::vector<int>& u, std::vector<DiagSet>& out) {
    if (k == nu) {
        if ((hi - u[static_cast<size_t>(nu - 1)] - 1) % (nu - 1) != 0) return;
        u[static_cast<size_t>(nu)] = hi;
        DiagSet chords;
        std::vector<std::vector<DiagSet>> subs(static_cast<size_t>(nu));
        for (int g = 0; g < nu; ++g) {
            int a = u[static_cast<size_t>(g)], b = u[static_cast<size_t>(g) + 1];
            if (b - a > 1) chords.emplace_back(a, b);
            subs[static_cast<size_t>(g)] = dissect_arc(nu, a, b);
        }
        DiagSet acc = chords;
        auto product = [&](auto&& self, int g) -> void {
            if (g == nu) {
                out.push_back(acc);
                return;
            }
            for (const DiagSet& ds : subs[static_cast<size_t>(g)]) {
                size_t mark = acc.size();
                acc.insert(acc.end(), ds.begin(), ds.end());
                self(self, g + 1);
                acc.resize(mark);
            }
        };
        product(product, 0);
        return;
    }
    for (int v = u[static_cast<size_t>(k) - 1] + 1; v <= hi - (nu - k); ++v) {
        if ((v - u[static_cast<size_t>(k) - 1] - 1) % (nu - 1) != 0) continue;
        u[static_cast<size_t>(k)] = v;
        pick_face(nu, lo, hi, k + 1, u, out);
    }
}

std::vector<DiagSet> dissect_arc(int nu, int lo, int hi) {
    std::vector<DiagSet> out;
    if (hi - lo == 1) {
        out.emplace_back();  // bare edge, nothing to dissect
        return out;
    }
    std::vector<int> u(static_cast<size_t>(nu) + 1);
    u[0] = lo;
    pick_face(nu, lo, hi, 1, u, out);
    return out;
}

}  // namespace

std::vector<PolygonDissection> enumerate_dissections(int nu, int j, int face_guard) {
    require_nu(nu);
    if (j < 1) throw std::invalid_argument("enumerate_dissections: j must be >= 1");
    if (j > face_guard)
        throw GuardError("enumerate_dissections: " + std::to_string(j) +
                         " faces exceeds guard of " + std::to_string(face_guard));
    const int sides = (nu - 1) * j + 2;
    // Work over positions 1..sides so the marked edge (0,1) is the closing
    // chord (1, sides); labels are positions mod sides.
    std::vector<PolygonDissection> out;
    for (const DiagSet& ds : dissect_arc(nu, 1, sides)) {
        PolygonDissection d{nu, j, sides, {}};
        d.diagonals.reserve(ds.size());
        for (auto [a, b] : ds) {
            int la = a % sides, lb = b % sides;
            d.diagonals.emplace_back(std::min(la, lb), std::max(la, lb));
        }
        std::sort(d.diagonals.begin(), d.diagonals.end());
        out.push_back(std::move(d));
    }
    return out;
}

bool diagonals_non_crossing(const PolygonDissection& d) {
    for (size_t i = 0; i < d.diagonals.size(); ++i)
        for (size_t k = i + 1; k < d.diagonals.size(); ++k) {
            auto [a, b] = d.diagonals[i];
            auto [c, e] = d.diagonals[k];
            if ((a < c && c < b && b < e) || (c < a && a < e && e < b)) return false;
        }
    return true;
}

namespace {

void split_faces(std::vector<int> poly, DiagSet diags, std::vector<int>& sizes) {
    if (diags.empty()) {
        sizes.push_back(static_cast<int>(poly.size()));
        return;
    }
    auto [a, b] = diags.back();
    diags.pop_back();
    auto ia = std::find(poly.begin(), poly.end(), a) - poly.begin();
    auto ib = std::find(poly.begin(), poly.end(), b) - poly.begin();
    if (ia == static_cast<long>(poly.size()) || ib == static_cast<long>(poly.size()))
        throw std::invalid_argument("face_sizes: crossing diagonals");
    if (ia > ib) std::swap(ia, ib);
    if (ib - ia < 2 || (ia == 0 && ib == static_cast<long>(poly.size()) - 1))
        throw std::invalid_argument("face_sizes: diagonal joins adjacent vertices");
    std::vector<int> p1(poly.begin() + ia, poly.begin() + ib + 1);
    std::vector<int> p2(poly.begin() + ib, poly.end());
    p2.insert(p2.end(), poly.begin(), poly.begin() + ia + 1);
    std::set<int> s1(p1.begin(), p1.end());
    std::set<int> s2(p2.begin(), p2.end());
    DiagSet d1, d2;
    for (auto& dg : diags) {
        bool in1 = s1.count(dg.first) && s1.count(dg.second);
        bool in2 = s2.count(dg.first) && s2.count(dg.second);
        if (in1 && in2) throw std::invalid_argument("face_sizes: duplicate diagonal");
        if (in1)
            d1.push_back(dg);
        else if (in2)
            d2.push_back(dg);
        else
            throw std::invalid_argument("face_sizes: crossing diagonals");
    }
    split_faces(std::move(p1), std::move(d1), sizes);
    split_faces(std::move(p2), std::move(d2), sizes);
}

}  // namespace

std::vector<int> face_sizes(const PolygonDissection& d) {
    if (d.sides < 3) throw std::invalid_argument("face_sizes: need at least 3 sides");
    std::vector<int> poly(static_cast<size_t>(d.sides));
    for (int v = 0; v < d.sides; ++v) poly[static_cast<size_t>(v)] = v;
    std::vector<int> sizes;
    split_faces(std::move(poly), d.diagonals, sizes);
    return sizes;
}

std::string path_str(const LatticePath& path) {
    std::string s;
    s.reserve(path.steps.size());
    for (Step st : path.steps) s.push_back(st == Step::Up ? 'U' : 'D');
    return s;
}

LatticePath parse_path(int nu, std::string_view text) {
    require_nu(nu);
    LatticePath p{nu, {}};
    p.steps.reserve(text.size());
    for (char c : text) {
        if (c == 'U')
            p.steps.push_back(Step::Up);
        else if (c == 'D')
            p.steps.push_back(Step::Down);
        else
            throw std::invalid_argument(std::string("parse_path: bad step character '") + c + "'");
    }
    return p;
}

std::string queue_str(const QueueArrangement& queue) {
    std::string s;
    for (size_t k = 0; k < queue.lines.size(); ++k) {
        if (k) s.push_back('|');
        for (Bill b : queue.lines[k]) s.push_back(b == Bill::One ? '1' : 'N');
    }
    return s;
}

QueueArrangement parse_queue(int nu, std::string_view text) {
    require_nu(nu);
    QueueArrangement q{nu, {QueueLine{}}};
    for (char c : text) {
        if (c == '|')
            q.lines.emplace_back();
        else if (c == '1')
            q.lines.back().push_back(Bill::One);
        else if (c == 'N')
            q.lines.back().push_back(Bill::Nu);
        else
            throw std::invalid_argument(std::string("parse_queue: bad bill character '") + c + "'");
    }
    return q;
}

std::string dissection_str(const PolygonDissection& d) {
    std::string s = "sides=" + std::to_string(d.sides) + " diagonals=";
    for (size_t k = 0; k < d.diagonals.size(); ++k) {
        if (k) s.push_back(',');
        s += "(" + std::to_string(d.diagonals[k].first) + "," +
             std::to_string(d.diagonals[k].second) + ")";
    }
    return s;
}

}  // namespace hicat
