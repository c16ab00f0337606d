#include "hicat/gluing.hpp"

#include <atomic>
#include <thread>

namespace hicat {

namespace {

void require_shape(int nu, int j) {
    if (nu < 2 || j < 1) throw std::invalid_argument("need nu >= 2 and j >= 1");
}

void check_guard(int nu, int j, int dart_guard) {
    require_shape(nu, j);
    long long darts = 2LL * nu * j;
    if (darts > dart_guard)
        throw GuardError("gluing enumeration over " + std::to_string(darts) +
                         " darts exceeds guard of " + std::to_string(dart_guard));
}

// Pair the lowest unpaired dart with every later unpaired dart in turn.
void matchings_rec(GluingDiagram& diagram, int lowest,
                   const std::function<void(const GluingDiagram&)>& visit) {
    const int n = diagram.dart_count();
    while (lowest < n && diagram.partner[static_cast<size_t>(lowest)] >= 0) ++lowest;
    if (lowest == n) {
        visit(diagram);
        return;
    }
    for (int d = lowest + 1; d < n; ++d) {
        if (diagram.partner[static_cast<size_t>(d)] >= 0) continue;
        diagram.partner[static_cast<size_t>(lowest)] = d;
        diagram.partner[static_cast<size_t>(d)] = lowest;
        matchings_rec(diagram, lowest + 1, visit);
        diagram.partner[static_cast<size_t>(lowest)] = -1;
        diagram.partner[static_cast<size_t>(d)] = -1;
    }
}

// Census of the subtree where dart 0 is paired with first_partner (or of the
// whole space when first_partner < 0).
GenusCountTable census_shard(int nu, int j, int first_partner) {
    GenusCountTable table;
    table.nu = nu;
    table.j = j;
    table.total_matchings = 0;
    table.disconnected = 0;
    GluingDiagram diagram{nu, j, std::vector<int>(static_cast<size_t>(2 * nu * j), -1)};
    auto tally = [&](const GluingDiagram& d) {
        ++table.total_matchings;
        if (!is_connected(d))
            ++table.disconnected;
        else
            ++table.counts[genus(d)];
    };
    if (first_partner >= 0) {
        diagram.partner[0] = first_partner;
        diagram.partner[static_cast<size_t>(first_partner)] = 0;
        matchings_rec(diagram, 1, tally);
    } else {
        matchings_rec(diagram, 0, tally);
    }
    return table;
}

}  // namespace

Integer GenusCountTable::connected_total() const {
    Integer sum = 0;
    for (const auto& [g, n] : counts) sum += n;
    return sum;
}

Integer count_matchings(int nu, int j) {
    require_shape(nu, j);
    return double_factorial(2LL * nu * j - 1);
}

void enumerate_matchings(int nu, int j, int dart_guard,
                         const std::function<void(const GluingDiagram&)>& visit) {
    check_guard(nu, j, dart_guard);
    GluingDiagram diagram{nu, j, std::vector<int>(static_cast<size_t>(2 * nu * j), -1)};
    matchings_rec(diagram, 0, visit);
}

bool is_connected(const GluingDiagram& diagram) {
    const int j = diagram.j;
    if (j <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(j), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    const int valence = 2 * diagram.nu;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int p = 0; p < valence; ++p) {
            int w = diagram.vertex_of(diagram.partner[static_cast<size_t>(v * valence + p)]);
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == j;
}

int count_faces(const GluingDiagram& diagram) {
    const int n = diagram.dart_count();
    const int valence = 2 * diagram.nu;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    int faces = 0;
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        ++faces;
        int d = start;
        while (!seen[static_cast<size_t>(d)]) {
            seen[static_cast<size_t>(d)] = 1;
            int a = diagram.partner[static_cast<size_t>(d)];
            d = (a / valence) * valence + (a % valence + 1) % valence;  // sigma(alpha(d))
        }
    }
    return faces;
}

int genus(const GluingDiagram& diagram) {
    if (!is_connected(diagram))
        throw std::invalid_argument("genus: diagram is disconnected");
    const int v = diagram.j;
    const int e = diagram.nu * diagram.j;
    const int f = count_faces(diagram);
    return (2 - v + e - f) / 2;
}

GenusCountTable count_maps_oracle(int nu, int j, int dart_guard, int threads) {
    check_guard(nu, j, dart_guard);
    const int n = 2 * nu * j;
    if (threads <= 1) return census_shard(nu, j, -1);

    // Shard by the partner of dart 0; workers pull shards off a shared counter.
    std::vector<GenusCountTable> parts(static_cast<size_t>(n - 1));
    std::atomic<int> next{1};
    auto worker = [&] {
        for (;;) {
            int p = next.fetch_add(1);
            if (p >= n) return;
            parts[static_cast<size_t>(p - 1)] = census_shard(nu, j, p);
        }
    };
    std::vector<std::thread> pool;
    int width = std::min(threads, n - 1);
    pool.reserve(static_cast<size_t>(width));
    for (int t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    GenusCountTable table;
    table.nu = nu;
    table.j = j;
    table.total_matchings = 0;
    table.disconnected = 0;
    for (const GenusCountTable& part : parts) {
        table.total_matchings += part.total_matchings;
        table.disconnected += part.disconnected;
        for (const auto& [g, c] : part.counts) table.counts[g] += c;
    }
    return table;
}

std::string genus_table_json(const GenusCountTable& table) {
    std::string s = "{\"nu\":" + std::to_string(table.nu) + ",\"j\":" + std::to_string(table.j) +
                    ",\"total\":\"" + to_decimal(table.total_matchings) +
                    "\",\"disconnected\":\"" + to_decimal(table.disconnected) + "\",\"counts\":{";
    bool first = true;
    for (const auto& [g, c] : table.counts) {
        if (!first) s.push_back(',');
        first = false;
        s += "\"" + std::to_string(g) + "\":\"" + to_decimal(c) + "\"";
    }
    s += "}}";
    return s;
}

}  // namespace hicat
