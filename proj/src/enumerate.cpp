#include "aglab/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace aglab {

namespace {

constexpr int kUndef = -1;

/*
 * Incremental backtracking state. Cells are filled in row-major order;
 * after each assignment only the law instances that could have become
 * fully defined by that cell are rechecked, which keeps the invariant
 * that every fully-defined triple (a,b,d) satisfies (ab)d = (db)a.
 */
struct Search {
    int n;
    std::vector<int> t; // n*n, kUndef where unassigned
    bool need_li;
    std::vector<int> mismatch;  // per row: assigned cells breaking e*x = x
    int viable_rows;            // rows with mismatch == 0
    std::uint64_t visited = 0;

    explicit Search(int order, bool li)
        : n(order), t(order * order, kUndef), need_li(li),
          mismatch(order, 0), viable_rows(order) {}

    int get(int x, int y) const { return t[x * n + y]; }

    bool triple_ok(int a, int b, int d) const {
        int ab = get(a, b);
        if (ab == kUndef) return true;
        int l = get(ab, d);
        if (l == kUndef) return true;
        int db = get(d, b);
        if (db == kUndef) return true;
        int r = get(db, a);
        if (r == kUndef) return true;
        return l == r;
    }

    // All law instances that can close over cell (r,c): the cell serves
    // as (a,b), as (d,b), or as one of the two outer products.
    bool still_consistent(int r, int c) const {
        for (int d = 0; d < n; ++d)
            if (!triple_ok(r, c, d)) return false;
        for (int a = 0; a < n; ++a)
            if (!triple_ok(a, c, r)) return false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (get(a, b) != r) continue;
                if (!triple_ok(a, b, c)) return false;
                if (!triple_ok(c, b, a)) return false;
            }
        return true;
    }

    bool assign(int cell, int v) {
        int r = cell / n, c = cell % n;
        t[cell] = v;
        ++visited;
        if (need_li && v != c) {
            if (mismatch[r]++ == 0 && --viable_rows == 0) return false;
        }
        return still_consistent(r, c);
    }

    void unassign(int cell) {
        int r = cell / n, c = cell % n;
        if (need_li && t[cell] != c) {
            if (--mismatch[r] == 0) ++viable_rows;
        }
        t[cell] = kUndef;
    }
};

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

FiniteMagma to_magma(int n, const std::vector<int>& t) {
    std::vector<std::uint8_t> bytes(t.begin(), t.end());
    return FiniteMagma(n, std::move(bytes));
}

// DFS over cells [from, n*n); calls out on every completed table.
void dfs(Search& s, int from, const std::function<void(const std::vector<int>&)>& out) {
    int total = s.n * s.n;
    if (from == total) {
        out(s.t);
        return;
    }
    for (int v = 0; v < s.n; ++v) {
        if (s.assign(from, v)) dfs(s, from + 1, out);
        s.unassign(from);
    }
}

std::vector<std::vector<int>> first_row_prefixes(int n, bool need_li) {
    std::vector<std::vector<int>> out;
    Search s(n, need_li);
    // The prefix covers exactly the first row; for n = 1 that is the
    // whole table and the main DFS below becomes a no-op.
    std::function<void(int)> rec = [&](int cell) {
        if (cell == n) {
            out.emplace_back(s.t.begin(), s.t.begin() + n);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (s.assign(cell, v)) rec(cell + 1);
            s.unassign(cell);
        }
    };
    rec(0);
    return out;
}

} // namespace

FiniteMagma canonical_form(const FiniteMagma& m) {
    int n = m.n;
    std::vector<int> p(n), pinv(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::uint8_t> best = m.table;
    std::vector<std::uint8_t> cur(n * n);
    do {
        for (int i = 0; i < n; ++i) pinv[p[i]] = i;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                cur[x * n + y] = static_cast<std::uint8_t>(
                    p[m.at(pinv[x], pinv[y])]);
        if (cur < best) best = cur;
    } while (std::next_permutation(p.begin(), p.end()));
    return FiniteMagma(n, std::move(best));
}

std::uint64_t orbit_size(const FiniteMagma& m) {
    int n = m.n;
    std::vector<int> p(n), pinv(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t autos = 0;
    do {
        for (int i = 0; i < n; ++i) pinv[p[i]] = i;
        bool fixes = true;
        for (int x = 0; x < n && fixes; ++x)
            for (int y = 0; y < n && fixes; ++y)
                fixes = p[m.at(pinv[x], pinv[y])] == m.at(x, y);
        if (fixes) ++autos;
    } while (std::next_permutation(p.begin(), p.end()));
    return factorial(n) / autos;
}

void enumerate_ag_groupoids(const SearchConfig& cfg,
                            const std::function<void(const FiniteMagma&)>& sink,
                            EnumerationStats* stats) {
    if (cfg.order <= 0)
        throw std::invalid_argument("order must be positive");
    if (cfg.order > cfg.hard_cap)
        throw std::invalid_argument("order " + std::to_string(cfg.order) +
                                    " exceeds the cap " + std::to_string(cfg.hard_cap));
    auto t0 = std::chrono::steady_clock::now();
    int n = cfg.order;
    std::uint64_t visited = 0, emitted = 0;

    auto keep = [&](const FiniteMagma& m) {
        return !cfg.up_to_isomorphism || canonical_form(m) == m;
    };

    // Prefix validity was already established while listing, so the
    // re-assignment below never fails.
    auto run_prefix = [&](const std::vector<int>& pre,
                          const std::function<void(FiniteMagma)>& consume) -> std::uint64_t {
        Search s(n, cfg.require_left_identity);
        for (int c = 0; c < n; ++c) s.assign(c, pre[c]);
        dfs(s, n, [&](const std::vector<int>& t) {
            FiniteMagma m = to_magma(n, t);
            if (keep(m)) consume(std::move(m));
        });
        return s.visited;
    };

    auto prefixes = first_row_prefixes(n, cfg.require_left_identity);
    int workers = std::max(1, cfg.worker_count);

    if (workers == 1) {
        for (const auto& pre : prefixes)
            visited += run_prefix(pre, [&](FiniteMagma m) {
                ++emitted;
                sink(m);
            });
    } else {
        std::vector<std::vector<FiniteMagma>> buckets(prefixes.size());
        std::atomic<size_t> next{0};
        std::atomic<std::uint64_t> visited_acc{0};
        auto work = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= prefixes.size()) break;
                visited_acc.fetch_add(run_prefix(
                    prefixes[i], [&](FiniteMagma m) { buckets[i].push_back(std::move(m)); }));
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
        visited = visited_acc.load();
        for (auto& bucket : buckets)
            for (auto& m : bucket) {
                ++emitted;
                sink(m);
            }
    }

    if (stats) {
        stats->tables_visited = visited;
        stats->magmas_emitted = emitted;
        stats->elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count();
    }
}

std::uint64_t oracle_count(int order, bool require_left_identity) {
    if (order < 1 || order > 3)
        throw std::invalid_argument("oracle_count only scans orders 1 through 3");
    int n = order, cells = n * n;
    std::vector<int> t(cells, 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c)
                    ok = t[t[a * n + b] * n + c] == t[t[c * n + b] * n + a];
        if (ok && require_left_identity) {
            bool found = false;
            for (int e = 0; e < n && !found; ++e) {
                bool li = true;
                for (int x = 0; x < n && li; ++x) li = t[e * n + x] == x;
                found = li;
            }
            ok = found;
        }
        if (ok) ++count;
        int pos = cells - 1;
        while (pos >= 0 && t[pos] == n - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
    return count;
}

} // namespace aglab
