#include "pfp/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pfp {

Text zimin(int k, int max_k) {
    if (k < 1)
        throw Error("zimin order must be positive, got " + std::to_string(k));
    if (k > max_k)
        throw ResourceLimitError("zimin order " + std::to_string(k) +
                                 " exceeds cap " + std::to_string(max_k));
    std::vector<Symbol> word{0};
    for (Symbol fresh = 1; fresh < k; ++fresh) {
        std::vector<Symbol> next = word;
        next.push_back(fresh);
        next.insert(next.end(), word.begin(), word.end());
        word = std::move(next);
    }
    return Text(std::move(word));
}

Text optimal_string(int k, int max_k) {
    if (k < 3)
        throw Error("optimal string is defined for k >= 3, got " + std::to_string(k));
    if (k > max_k)
        throw ResourceLimitError("k = " + std::to_string(k) + " exceeds cap " +
                                 std::to_string(max_k));
    Text core = zimin(k - 2, max_k);
    std::vector<Symbol> word;
    word.reserve(static_cast<size_t>(core.size()) + 2);
    word.push_back(0);
    for (Symbol s : core.symbols())
        word.push_back(s + 1); // keep the core disjoint from both ends
    word.push_back(k - 1);
    return canonicalize(Text(std::move(word)));
}

long long ipf(int k) {
    if (k < 1)
        throw Error("ipf is defined for k >= 1, got " + std::to_string(k));
    if (k == 1)
        return 1;
    if (k > 62)
        throw ResourceLimitError("ipf(" + std::to_string(k) + ") overflows");
    return (1LL << (k - 2)) + 1;
}

namespace {

// Largest clique a greedy pass finds, scanning by descending degree.
int greedy_clique_bound(const std::vector<std::vector<char>>& adj) {
    int v = static_cast<int>(adj.size());
    std::vector<int> order(static_cast<size_t>(v));
    for (int i = 0; i < v; ++i)
        order[static_cast<size_t>(i)] = i;
    std::vector<int> degree(static_cast<size_t>(v), 0);
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            degree[static_cast<size_t>(i)] += adj[static_cast<size_t>(i)][static_cast<size_t>(j)];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[static_cast<size_t>(a)] > degree[static_cast<size_t>(b)]; });
    std::vector<int> clique;
    for (int candidate : order) {
        bool fits = true;
        for (int member : clique)
            if (!adj[static_cast<size_t>(candidate)][static_cast<size_t>(member)])
                fits = false;
        if (fits)
            clique.push_back(candidate);
    }
    return static_cast<int>(clique.size());
}

bool colorable_with(const std::vector<std::vector<char>>& adj, int q) {
    int v = static_cast<int>(adj.size());
    std::vector<int> color(static_cast<size_t>(v), -1);
    // Depth-first assignment in index order; a vertex may open at most one
    // new color beyond those already in use, which removes color symmetry.
    std::function<bool(int, int)> assign = [&](int vertex, int used) {
        if (vertex == v)
            return true;
        int limit = std::min(q - 1, used);
        for (int c = 0; c <= limit; ++c) {
            bool clash = false;
            for (int u = 0; u < vertex && !clash; ++u)
                clash = adj[static_cast<size_t>(vertex)][static_cast<size_t>(u)] &&
                        color[static_cast<size_t>(u)] == c;
            if (clash)
                continue;
            color[static_cast<size_t>(vertex)] = c;
            if (assign(vertex + 1, std::max(used, c + 1)))
                return true;
            color[static_cast<size_t>(vertex)] = -1;
        }
        return false;
    };
    return assign(0, 0);
}

int greedy_color_count(const std::vector<std::vector<char>>& adj) {
    int v = static_cast<int>(adj.size());
    std::vector<int> color(static_cast<size_t>(v), -1);
    int used = 0;
    for (int i = 0; i < v; ++i) {
        std::vector<char> taken(static_cast<size_t>(v) + 1, 0);
        for (int u = 0; u < i; ++u)
            if (adj[static_cast<size_t>(i)][static_cast<size_t>(u)])
                taken[static_cast<size_t>(color[static_cast<size_t>(u)])] = 1;
        int c = 0;
        while (taken[static_cast<size_t>(c)])
            ++c;
        color[static_cast<size_t>(i)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

} // namespace

int chromatic_number_exact(const RestrictionGraph& g, int max_vertices) {
    if (g.self_loop)
        throw SelfLoopPresentError("chromatic number undefined: graph has a self-loop");
    int v = g.vertex_count();
    if (v > max_vertices)
        throw ResourceLimitError(std::to_string(v) + " vertices exceed cap " +
                                 std::to_string(max_vertices));
    if (v == 0)
        return 0;
    auto adj = g.adjacency_matrix();
    int upper = greedy_color_count(adj);
    int lower = greedy_clique_bound(adj);
    for (int q = lower; q < upper; ++q)
        if (colorable_with(adj, q))
            return q;
    return upper;
}

CanonicalStringEnumerator::CanonicalStringEnumerator(int n, int max_n) : n_(n) {
    if (n < 0)
        throw Error("negative length");
    if (n > max_n)
        throw ResourceLimitError("enumeration length " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(max_n));
    value_.assign(static_cast<size_t>(n), 0);
    limit_.assign(static_cast<size_t>(n), 0);
    for (int i = 1; i < n; ++i)
        limit_[static_cast<size_t>(i)] = 1; // all-zero prefix
}

bool CanonicalStringEnumerator::next(Text& out) {
    if (done_)
        return false;
    if (first_) {
        first_ = false;
        out = Text(value_);
        return true;
    }
    // Odometer step: bump the rightmost position below its growth limit,
    // zero the suffix, refresh limits.
    int i = n_ - 1;
    while (i >= 0 && value_[static_cast<size_t>(i)] >= limit_[static_cast<size_t>(i)])
        --i;
    if (i < 0) {
        done_ = true;
        return false;
    }
    ++value_[static_cast<size_t>(i)];
    for (int j = i + 1; j < n_; ++j) {
        value_[static_cast<size_t>(j)] = 0;
        limit_[static_cast<size_t>(j)] =
            std::max(limit_[static_cast<size_t>(j - 1)], value_[static_cast<size_t>(j - 1)] + 1);
    }
    out = Text(value_);
    return true;
}

void for_each_canonical_string(int n, const std::function<void(const Text&)>& fn,
                               int max_n) {
    CanonicalStringEnumerator it(n, max_n);
    Text t;
    while (it.next(t))
        fn(t);
}

std::vector<Fingerprint> enumerate_fingerprints(int n, int max_n) {
    std::set<Fingerprint> seen;
    for_each_canonical_string(
        n, [&](const Text& t) { seen.insert(fingerprint_of(t)); }, max_n);
    return std::vector<Fingerprint>(seen.begin(), seen.end());
}

int IpfReport::first_length_reaching(int k) const {
    for (const auto& row : rows)
        if (row.max_sigma >= k)
            return row.n;
    return 0;
}

bool IpfReport::matches_formula() const {
    if (rows.empty())
        return false;
    int n_max = rows.back().n;
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i].max_sigma < rows[i - 1].max_sigma)
            return false;
    int overall_max = rows.back().max_sigma;
    for (int k = 1; k <= overall_max + 1; ++k) {
        long long expected = ipf(k);
        int empirical = first_length_reaching(k);
        if (expected <= n_max) {
            if (empirical != expected)
                return false;
        } else if (empirical != 0) {
            return false;
        }
    }
    return true;
}

std::string IpfReport::table() const {
    std::ostringstream out;
    out << "  n  max_sigma  attained_by  attaining\n";
    for (const auto& row : rows) {
        out.width(3);
        out << row.n;
        out.width(11);
        out << row.max_sigma;
        out.width(13);
        out << row.attain_count;
        out << "  ";
        if (row.attain_count <= 2) {
            for (size_t i = 0; i < row.attaining.size(); ++i) {
                if (i)
                    out << " ";
                out << "{";
                const auto& pairs = row.attaining[i].pairs;
                for (size_t j = 0; j < pairs.size(); ++j) {
                    if (j)
                        out << ",";
                    out << to_string(pairs[j]);
                }
                out << "}";
            }
        } else {
            out << "...";
        }
        out << "\n";
    }
    return out.str();
}

std::string IpfReport::machine_lines() const {
    std::string out;
    for (const auto& row : rows)
        out += "n=" + std::to_string(row.n) + " max_sigma=" + std::to_string(row.max_sigma) +
               " attained_by=" + std::to_string(row.attain_count) + "\n";
    return out;
}

IpfReport verify_ipf(int n_max, int max_n) {
    if (n_max < 1)
        throw Error("n_max must be >= 1");
    if (n_max > max_n)
        throw ResourceLimitError("n_max " + std::to_string(n_max) + " exceeds cap " +
                                 std::to_string(max_n));
    IpfReport report;
    for (int n = 1; n <= n_max; ++n) {
        IpfRow row;
        row.n = n;
        for (const auto& f : enumerate_fingerprints(n, max_n)) {
            int s = sigma(f);
            if (s > row.max_sigma) {
                row.max_sigma = s;
                row.attaining.clear();
            }
            if (s == row.max_sigma)
                row.attaining.push_back(f);
        }
        row.attain_count = static_cast<int>(row.attaining.size());
        report.rows.push_back(std::move(row));
    }
    return report;
}

UniquenessResult verify_uniqueness(int k, int max_n) {
    if (k < 3)
        throw Error("uniqueness check is defined for k >= 3");
    long long n = ipf(k);
    if (n > max_n)
        throw ResourceLimitError("ipf(" + std::to_string(k) + ") = " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(max_n));
    UniquenessResult result;
    result.expected = fingerprint_of(optimal_string(k));
    for (const auto& f : enumerate_fingerprints(static_cast<int>(n), max_n))
        if (sigma(f) == k)
            result.attaining.push_back(f);
    result.ok = result.attaining.size() == 1 && result.attaining.front() == result.expected;
    return result;
}

CliqueResult verify_clique(int k, int max_k) {
    CliqueResult result;
    RestrictionGraph g = build_restriction_graph(fingerprint_of(optimal_string(k, max_k)));
    result.vertex_count = g.vertex_count();
    result.edge_count = static_cast<int>(g.edges.size());
    result.ok = !g.self_loop && result.vertex_count == k &&
                result.edge_count == k * (k - 1) / 2;
    return result;
}

LogBoundResult verify_log_bound(int n_max, int max_n) {
    if (n_max < 2)
        throw Error("log bound check needs n_max >= 2");
    if (n_max > max_n)
        throw ResourceLimitError("n_max exceeds cap");
    LogBoundResult result;
    result.ok = true;
    for (int n = 2; n <= n_max; ++n) {
        for (const auto& f : enumerate_fingerprints(n, max_n)) {
            int s = sigma(f);
            ++result.checked;
            // sigma <= log2(n-1) + 2, in exact integer form.
            bool holds = s <= 2 || (n - 1) >= (1LL << (s - 2));
            if (!holds) {
                result.ok = false;
                result.violations.push_back(f);
            }
        }
    }
    return result;
}

SelfLoopIffResult verify_selfloop_iff(int n_max, int max_n) {
    if (n_max < 2)
        throw Error("self-loop check needs n_max >= 2");
    if (n_max > max_n)
        throw ResourceLimitError("n_max " + std::to_string(n_max) + " exceeds cap " +
                                 std::to_string(max_n));
    SelfLoopIffResult result;
    result.ok = true;
    for (int n = 2; n <= n_max; ++n) {
        std::set<std::vector<PalDescriptor>> realizable;
        for_each_canonical_string(
            n, [&](const Text& t) { realizable.insert(fingerprint_of(t).pairs); }, max_n);

        // Pairs grouped by center; a candidate set picks at most one per center.
        std::map<int, std::vector<PalDescriptor>> by_center;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                by_center[i + j].push_back(PalDescriptor{i, j});
        std::vector<std::vector<PalDescriptor>> groups;
        for (auto& [key, pals] : by_center)
            groups.push_back(std::move(pals));

        std::vector<PalDescriptor> chosen;
        std::function<void(size_t)> walk = [&](size_t group) {
            if (group == groups.size()) {
                Fingerprint f = Fingerprint::make(n, chosen);
                ++result.checked;
                bool no_loop = !build_restriction_graph(f).self_loop;
                bool is_realizable = realizable.count(f.pairs) > 0;
                if (no_loop != is_realizable) {
                    result.ok = false;
                    result.disagreements.push_back(f);
                }
                return;
            }
            walk(group + 1);
            for (const auto& pal : groups[group]) {
                chosen.push_back(pal);
                walk(group + 1);
                chosen.pop_back();
            }
        };
        walk(0);
    }
    return result;
}

GreedyMinResult verify_greedy_min(int n_max, int max_n) {
    if (n_max < 1)
        throw Error("greedy minimality check needs n_max >= 1");
    GreedyMinResult result;
    result.ok = true;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& f : enumerate_fingerprints(n, max_n)) {
            ++result.checked;
            RestrictionGraph g = build_restriction_graph(f);
            if (sigma(f) != chromatic_number_exact(g)) {
                result.ok = false;
                result.mismatches.push_back(f);
            }
        }
    }
    return result;
}

} // namespace pfp
