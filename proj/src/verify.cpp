#include "hicat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hicat/catalan.hpp"
#include "hicat/lattice.hpp"
#include "hicat/map_counts.hpp"
#include "hicat/series.hpp"

namespace hicat {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

std::string num(long long v) { return std::to_string(v); }

// Appends cases to one suite report, applying the requested mutation when the
// running global index hits it.
class Recorder {
  public:
    Recorder(SuiteReport& report, int& global_index, int mutate_index)
        : report_(report), global_index_(global_index), mutate_index_(mutate_index) {}

    void record(Inputs inputs, const Integer& expected, Integer actual) {
        if (take_mutation()) ++actual;
        push(std::move(inputs), to_decimal(expected), to_decimal(actual));
    }

    void record(Inputs inputs, const Rational& expected, Rational actual) {
        if (take_mutation()) actual += 1;
        push(std::move(inputs), to_decimal(expected), to_decimal(actual));
    }

    // Yes/no identity checks; the expected value is always "true".
    void record_flag(Inputs inputs, bool actual) {
        if (take_mutation()) actual = !actual;
        push(std::move(inputs), "true", actual ? "true" : "false");
    }

  private:
    bool take_mutation() { return global_index_++ == mutate_index_; }

    void push(Inputs inputs, std::string expected, std::string actual) {
        VerifyCase c;
        c.inputs = std::move(inputs);
        c.pass = expected == actual;
        c.expected = std::move(expected);
        c.actual = std::move(actual);
        if (c.pass) ++report_.passed;
        report_.cases.push_back(std::move(c));
    }

    SuiteReport& report_;
    int& global_index_;
    int mutate_index_;
};

// --- catalan: closed form vs recursion, series, paths, dissections ---------

void suite_catalan(Recorder& rec, const VerifyOptions&) {
    for (int nu = 2; nu <= 5; ++nu) {
        const int jmax = 30;
        std::vector<Integer> by_recursion = catalan_by_recursion(nu, jmax);
        Series z = solve_z(nu, jmax);
        for (int j = 0; j <= jmax; ++j) {
            Integer expected = higher_catalan(nu, j);
            rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "recursion"}}, expected,
                       by_recursion[static_cast<size_t>(j)]);
            rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "series"}}, Rational(expected),
                       z[j]);
        }
    }
    for (int nu = 2; nu <= 4; ++nu) {
        for (int j = 0; 2 * nu * j <= 16; ++j) {
            Integer expected = higher_catalan(nu, j);
            auto paths = enumerate_dyck_paths(nu, j, kDefaultPathStepGuard);
            rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "paths"}}, expected,
                       Integer(paths.size()));
            if (j >= 1) {
                auto dissections = enumerate_dissections(nu, j, kDefaultDissectionFaceGuard);
                rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "dissections"}}, expected,
                           Integer(dissections.size()));
            }
        }
    }
}

// --- star: the reflection identity behind the closed form -------------------

void suite_star(Recorder& rec, const VerifyOptions&) {
    for (int nu = 2; nu <= 6; ++nu)
        for (long long j = 1; j <= 40; ++j) {
            Integer lhs = binomial(nu * j, j) - Integer(nu - 1) * binomial(nu * j, j - 1);
            rec.record({{"nu", num(nu)}, {"j", num(j)}}, higher_catalan(nu, j), lhs);
        }
}

// --- eta: convolution powers of the Catalan sequence ------------------------

void suite_eta(Recorder& rec, const VerifyOptions&) {
    const int jmax = 20;
    for (int nu = 2; nu <= 5; ++nu) {
        Series zm1 = solve_z(nu, jmax) - Rational(1);
        // conv holds the i-fold convolution of (zeta_1, zeta_2, ...).
        std::vector<Integer> conv(static_cast<size_t>(jmax) + 1);
        conv[0] = 1;
        for (int i = 1; i <= 5; ++i) {
            std::vector<Integer> next(static_cast<size_t>(jmax) + 1);
            for (int a = 0; a <= jmax; ++a) {
                if (conv[static_cast<size_t>(a)] == 0) continue;
                for (int b = 1; a + b <= jmax; ++b)
                    next[static_cast<size_t>(a + b)] +=
                        conv[static_cast<size_t>(a)] * higher_catalan(nu, b);
            }
            conv = std::move(next);
            Series power = zm1.pow_int(static_cast<unsigned>(i));
            for (int j = 0; j <= jmax; ++j) {
                Integer expected = catalan_convolution(nu, i, j);
                rec.record(
                    {{"nu", num(nu)}, {"i", num(i)}, {"j", num(j)}, {"route", "convolution"}},
                    expected, conv[static_cast<size_t>(j)]);
                rec.record({{"nu", num(nu)}, {"i", num(i)}, {"j", num(j)}, {"route", "series"}},
                           Rational(expected), power[j]);
            }
        }
    }
    // Exhaustive multi-line queue counts for nu = 2.
    for (int j = 1; j <= 5; ++j)
        for (int i = 1; i <= j; ++i) {
            auto arrangements = enumerate_queue_arrangements(2, j, i, kDefaultPathStepGuard);
            rec.record({{"nu", "2"}, {"i", num(i)}, {"j", num(j)}, {"route", "queues"}},
                       catalan_convolution(2, i, j), Integer(arrangements.size()));
        }
}

// --- log: coefficients of log z ---------------------------------------------

void suite_log(Recorder& rec, const VerifyOptions&) {
    const int jmax = 30;
    for (int nu = 2; nu <= 5; ++nu) {
        Series lg = series_log(solve_z(nu, jmax));
        for (int j = 1; j <= jmax; ++j)
            rec.record({{"nu", num(nu)}, {"j", num(j)}}, log_coefficient(nu, j), lg[j]);
    }
}

// --- psg: coefficients of powers of z and the quotient display --------------

void suite_psg(Recorder& rec, const VerifyOptions&) {
    const int jmax = 20;
    for (int nu = 2; nu <= 5; ++nu) {
        Series z = solve_z(nu, jmax);
        for (long long alpha = 0; alpha <= 5; ++alpha) {
            Series zp = series_pow(z, Rational(alpha));
            for (int j = 0; j <= jmax; ++j) {
                if (alpha == 0 && j == 0) continue;  // formula is singular at alpha + nu*j = 0
                Rational expected = z_power_coefficient(nu, Rational(alpha), j);
                rec.record(
                    {{"nu", num(nu)}, {"alpha", num(alpha)}, {"j", num(j)}, {"route", "series"}},
                    expected, zp[j]);
                // z^alpha = (1 + (z-1))^alpha expanded by the binomial theorem.
                Integer sum = j == 0 ? 1 : 0;
                for (long long i = 1; i <= alpha; ++i)
                    sum += binomial(alpha, i) * catalan_convolution(nu, static_cast<int>(i), j);
                rec.record({{"nu", num(nu)},
                            {"alpha", num(alpha)},
                            {"j", num(j)},
                            {"route", "binomial-sum"}},
                           expected, Rational(sum));
            }
            rec.record_flag(
                {{"nu", num(nu)}, {"alpha", num(alpha)}, {"order", "25"}, {"route", "quotient"}},
                check_z_power_quotient(nu, alpha, 25));
        }
    }
}

// --- bijections: round-trips between the combinatorial models ---------------

void suite_bijections(Recorder& rec, const VerifyOptions&) {
    for (int nu = 2; nu <= 4; ++nu)
        for (int j = 0; nu * j <= 14; ++j) {
            auto paths = enumerate_dyck_paths(nu, j, kDefaultPathStepGuard);
            long long queue_trips = 0;
            long long block_trips = 0;
            for (const LatticePath& p : paths) {
                if (queue_to_path(path_to_queue(p)).steps == p.steps) ++queue_trips;
                if (j >= 1) {
                    auto parts = decompose_path(p);
                    bool ok = parts.size() == static_cast<size_t>(nu);
                    for (const LatticePath& part : parts) ok = ok && part.is_admissible();
                    if (ok && reassemble_path(nu, parts).steps == p.steps) ++block_trips;
                }
            }
            rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "path-queue"}},
                       Integer(paths.size()), Integer(queue_trips));
            if (j >= 1)
                rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "first-block"}},
                           Integer(paths.size()), Integer(block_trips));
        }

    for (int nu = 2; nu <= 3; ++nu)
        for (int j = 1; j <= (nu == 2 ? 5 : 4); ++j)
            for (int i = 1; i <= std::min(j, 3); ++i) {
                auto arrangements = enumerate_queue_arrangements(nu, j, i, kDefaultPathStepGuard);
                long long trips = 0;
                std::set<QueueLine> image;
                bool image_valid = true;
                for (const QueueArrangement& arr : arrangements) {
                    QueueLine merged = merge_queues(arr);
                    QueueArrangement back = split_queue(merged, nu, i);
                    if (back.lines == arr.lines) ++trips;
                    long long nus =
                        std::count(merged.begin(), merged.end(), Bill::Nu);
                    image_valid = image_valid && line_gives_exact_change(merged, nu) &&
                                  nus == j - i &&
                                  static_cast<long long>(merged.size()) - nus ==
                                      static_cast<long long>(nu - 1) * j + i - 1;
                    image.insert(std::move(merged));
                }
                rec.record({{"nu", num(nu)}, {"j", num(j)}, {"i", num(i)}, {"route", "merge-split"}},
                           Integer(arrangements.size()), Integer(trips));
                rec.record_flag(
                    {{"nu", num(nu)}, {"j", num(j)}, {"i", num(i)}, {"route", "merge-valid"}},
                    image_valid);
                // Surjectivity: every line with the image's bill counts that gives
                // exact change is hit exactly once.
                std::vector<int> pattern(static_cast<size_t>((nu - 1) * j + i - 1), 0);
                pattern.resize(pattern.size() + static_cast<size_t>(j - i), 1);
                std::sort(pattern.begin(), pattern.end());
                long long valid = 0;
                do {
                    QueueLine line;
                    line.reserve(pattern.size());
                    for (int b : pattern) line.push_back(b ? Bill::Nu : Bill::One);
                    if (line_gives_exact_change(line, nu)) ++valid;
                } while (std::next_permutation(pattern.begin(), pattern.end()));
                rec.record({{"nu", num(nu)}, {"j", num(j)}, {"i", num(i)}, {"route", "merge-image"}},
                           Integer(valid), Integer(image.size()));
            }
}

// --- maps: gluing oracle vs the closed forms --------------------------------

void suite_maps(Recorder& rec, const VerifyOptions& options) {
    for (int nu = 2; 2 * nu <= options.dart_guard; ++nu)
        for (int j = 1; 2 * nu * j <= options.dart_guard; ++j) {
            GenusCountTable table = count_maps_oracle(nu, j, options.dart_guard, options.threads);
            rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "total"}},
                       count_matchings(nu, j), table.total_matchings);
            auto oracle_count = [&](int g) {
                auto it = table.counts.find(g);
                return it == table.counts.end() ? Integer(0) : it->second;
            };
            rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "genus0"}}, oracle_count(0),
                       map_count_genus0(nu, j));
            rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "genus1"}}, oracle_count(1),
                       map_count_genus1(nu, j));
            rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "partition"}},
                       table.total_matchings, table.connected_total() + table.disconnected);
            bool bound = true;
            for (const auto& [g, c] : table.counts)
                if (c != 0 && 2 * g > (nu - 1) * j + 1) bound = false;
            rec.record_flag({{"nu", num(nu)}, {"j", num(j)}, {"route", "genus-bound"}}, bound);
        }
    // Exponential generating functions reproduce the closed forms.
    for (int nu = 2; nu <= 5; ++nu) {
        Series e0 = e0_series(nu, 12);
        Series e1 = e1_series(nu, 12);
        for (long long j = 1; j <= 12; ++j) {
            Rational scale(factorial(j));
            rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "e0-coefficient"}},
                       Rational(map_count_genus0(nu, j)), e0[static_cast<int>(j)] * scale);
            rec.record({{"nu", num(nu)}, {"j", num(j)}, {"route", "e1-coefficient"}},
                       Rational(map_count_genus1(nu, j)), e1[static_cast<int>(j)] * scale);
        }
    }
}

// --- zprime: the derivative identity and the two routes to e1' --------------

void suite_zprime(Recorder& rec, const VerifyOptions&) {
    for (int nu = 2; nu <= 5; ++nu) {
        rec.record_flag({{"nu", num(nu)}, {"order", "25"}, {"route", "z-derivative"}},
                        check_z_derivative_identity(nu, 25));
        Series direct = e1_series(nu, 12).derivative();
        Series closed = e1_derivative_series(nu, 12).truncated(11);
        rec.record_flag({{"nu", num(nu)}, {"order", "12"}, {"route", "e1-derivative"}},
                        direct == closed);
    }
}

// --- assembly: genus-0 closed form rebuilt from the coefficient families ----

void suite_assembly(Recorder& rec, const VerifyOptions&) {
    for (int nu = 2; nu <= 6; ++nu)
        for (long long j = 1; j <= 20; ++j)
            rec.record({{"nu", num(nu)}, {"j", num(j)}}, map_count_genus0(nu, j),
                       map_count_genus0_assembled(nu, j));
}

using SuiteFn = void (*)(Recorder&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> registry = {
        {"catalan", suite_catalan},      {"star", suite_star},
        {"eta", suite_eta},              {"log", suite_log},
        {"psg", suite_psg},              {"bijections", suite_bijections},
        {"maps", suite_maps},            {"zprime", suite_zprime},
        {"assembly", suite_assembly},
    };
    return registry;
}

}  // namespace

int VerifyResult::total() const {
    int n = 0;
    for (const SuiteReport& s : suites) n += s.total();
    return n;
}

int VerifyResult::passed() const {
    int n = 0;
    for (const SuiteReport& s : suites) n += s.passed;
    return n;
}

long long VerifyResult::elapsed_ms() const {
    long long ms = 0;
    for (const SuiteReport& s : suites) ms += s.elapsed_ms;
    return ms;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : suite_registry()) n.push_back(name);
        return n;
    }();
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

VerifyResult run_suites(const std::vector<std::string>& names, const VerifyOptions& options) {
    std::vector<std::string> expanded;
    for (const std::string& name : names) {
        if (name == "all") {
            expanded.insert(expanded.end(), suite_names().begin(), suite_names().end());
        } else if (is_suite_name(name)) {
            expanded.push_back(name);
        } else {
            throw std::invalid_argument("unknown suite: " + name);
        }
    }
    VerifyResult result;
    int global_index = 0;
    for (const std::string& name : expanded) {
        SuiteReport report;
        report.suite = name;
        Recorder rec(report, global_index, options.mutate_index);
        auto start = std::chrono::steady_clock::now();
        for (const auto& [reg_name, fn] : suite_registry())
            if (reg_name == name) fn(rec, options);
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        result.suites.push_back(std::move(report));
    }
    return result;
}

std::string report_json(const VerifyResult& result) {
    nlohmann::ordered_json doc;
    doc["schema"] = "hicat-verify/1";
    doc["suites"] = nlohmann::ordered_json::array();
    for (const SuiteReport& s : result.suites) {
        nlohmann::ordered_json sj;
        sj["suite"] = s.suite;
        sj["cases"] = nlohmann::ordered_json::array();
        for (const VerifyCase& c : s.cases) {
            nlohmann::ordered_json cj;
            cj["inputs"] = nlohmann::ordered_json::object();
            for (const auto& [key, value] : c.inputs) cj["inputs"][key] = value;
            cj["expected"] = c.expected;
            cj["actual"] = c.actual;
            cj["pass"] = c.pass;
            sj["cases"].push_back(std::move(cj));
        }
        sj["summary"] = {{"total", s.total()}, {"passed", s.passed}, {"elapsed_ms", s.elapsed_ms}};
        doc["suites"].push_back(std::move(sj));
    }
    doc["summary"] = {{"suites", result.suites.size()},
                      {"total", result.total()},
                      {"passed", result.passed()},
                      {"elapsed_ms", result.elapsed_ms()},
                      {"pass", result.all_passed()}};
    return doc.dump();
}

std::string report_table(const VerifyResult& result) {
    std::ostringstream out;
    out << "suite        total  passed  elapsed_ms\n";
    for (const SuiteReport& s : result.suites) {
        out << s.suite;
        for (size_t pad = s.suite.size(); pad < 13; ++pad) out << ' ';
        std::string total = std::to_string(s.total());
        std::string passed = std::to_string(s.passed);
        out << total;
        for (size_t pad = total.size(); pad < 7; ++pad) out << ' ';
        out << passed;
        for (size_t pad = passed.size(); pad < 8; ++pad) out << ' ';
        out << s.elapsed_ms << "\n";
    }
    out << (result.all_passed() ? "PASS" : "FAIL") << " " << result.passed() << "/"
        << result.total() << " cases\n";
    return out.str();
}

}  // namespace hicat
