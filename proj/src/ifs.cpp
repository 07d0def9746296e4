#include "aglab/ifs.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace aglab {

IFS IFS::unchecked(std::vector<Rat> mu, std::vector<Rat> ga) {
    if (mu.size() != ga.size())
        throw std::invalid_argument("mu and gamma lengths differ");
    return IFS{std::move(mu), std::move(ga)};
}

IFS make_ifs(std::vector<Rat> mu, std::vector<Rat> ga) {
    if (mu.size() != ga.size())
        throw std::invalid_argument("mu and gamma lengths differ");
    for (size_t x = 0; x < mu.size(); ++x) {
        if (!mu[x].in_unit_interval() || !ga[x].in_unit_interval())
            throw std::invalid_argument("grade outside [0,1] at element " +
                                        std::to_string(x));
        if (Rat::one() < mu[x] + ga[x])
            throw std::invalid_argument("mu + gamma exceeds 1 at element " +
                                        std::to_string(x));
    }
    return IFS{std::move(mu), std::move(ga)};
}

IFS characteristic(SubsetMask a, int n) {
    IFS out;
    out.mu.reserve(n);
    out.ga.reserve(n);
    for (int x = 0; x < n; ++x) {
        bool in = a >> x & 1;
        out.mu.push_back(in ? Rat::one() : Rat::zero());
        out.ga.push_back(in ? Rat::zero() : Rat::one());
    }
    return out;
}

IFS delta(int n) { return characteristic(full_mask(n), n); }

namespace {

void require_same_order(const IFS& a, const IFS& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("IFS order mismatch");
}

} // namespace

IFS ifs_intersect(const IFS& a, const IFS& b) {
    require_same_order(a, b);
    IFS out;
    for (int x = 0; x < a.n(); ++x) {
        out.mu.push_back(rat_min(a.mu[x], b.mu[x]));
        out.ga.push_back(rat_max(a.ga[x], b.ga[x]));
    }
    return out;
}

IFS ifs_union(const IFS& a, const IFS& b) {
    require_same_order(a, b);
    IFS out;
    for (int x = 0; x < a.n(); ++x) {
        out.mu.push_back(rat_max(a.mu[x], b.mu[x]));
        out.ga.push_back(rat_min(a.ga[x], b.ga[x]));
    }
    return out;
}

bool ifs_leq(const IFS& a, const IFS& b) {
    require_same_order(a, b);
    for (int x = 0; x < a.n(); ++x)
        if (a.mu[x] > b.mu[x] || a.ga[x] < b.ga[x]) return false;
    return true;
}

IFS ifs_product(const FiniteMagma& m, const IFS& a, const IFS& b) {
    require_same_order(a, b);
    if (a.n() != m.n)
        throw std::invalid_argument("IFS order does not match magma order");
    IFS out;
    out.mu.assign(m.n, Rat::zero());
    out.ga.assign(m.n, Rat::one());
    for (int x = 0; x < m.n; ++x) {
        for (int y = 0; y < m.n; ++y) {
            int p = m.at(x, y);
            out.mu[p] = rat_max(out.mu[p], rat_min(a.mu[x], b.mu[y]));
            out.ga[p] = rat_min(out.ga[p], rat_max(a.ga[x], b.ga[y]));
        }
    }
    return out;
}

bool is_if_subgroupoid(const FiniteMagma& m, const IFS& a) {
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y) {
            int p = m.at(x, y);
            if (a.mu[p] < rat_min(a.mu[x], a.mu[y])) return false;
            if (a.ga[p] > rat_max(a.ga[x], a.ga[y])) return false;
        }
    return true;
}

std::optional<std::pair<int, int>> left_ideal_violation(const FiniteMagma& m,
                                                        const IFS& a) {
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y) {
            int p = m.at(x, y);
            if (a.mu[p] < a.mu[y] || a.ga[p] > a.ga[y]) return std::pair{x, y};
        }
    return std::nullopt;
}

std::optional<std::pair<int, int>> right_ideal_violation(const FiniteMagma& m,
                                                         const IFS& a) {
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y) {
            int p = m.at(x, y);
            if (a.mu[p] < a.mu[x] || a.ga[p] > a.ga[x]) return std::pair{x, y};
        }
    return std::nullopt;
}

bool is_if_left_ideal(const FiniteMagma& m, const IFS& a) {
    return !left_ideal_violation(m, a).has_value();
}

bool is_if_right_ideal(const FiniteMagma& m, const IFS& a) {
    return !right_ideal_violation(m, a).has_value();
}

bool is_if_two_sided(const FiniteMagma& m, const IFS& a) {
    return is_if_left_ideal(m, a) && is_if_right_ideal(m, a);
}

bool is_if_generalized_bi(const FiniteMagma& m, const IFS& a) {
    for (int x = 0; x < m.n; ++x)
        for (int w = 0; w < m.n; ++w)
            for (int y = 0; y < m.n; ++y) {
                int p = m.at(m.at(x, w), y);
                if (a.mu[p] < rat_min(a.mu[x], a.mu[y])) return false;
                if (a.ga[p] > rat_max(a.ga[x], a.ga[y])) return false;
            }
    return true;
}

bool is_if_bi(const FiniteMagma& m, const IFS& a) {
    return is_if_subgroupoid(m, a) && is_if_generalized_bi(m, a);
}

bool is_if_one_two(const FiniteMagma& m, const IFS& a) {
    if (!is_if_subgroupoid(m, a)) return false;
    for (int x = 0; x < m.n; ++x)
        for (int w = 0; w < m.n; ++w)
            for (int y = 0; y < m.n; ++y)
                for (int z = 0; z < m.n; ++z) {
                    int p = m.at(m.at(x, w), m.at(y, z));
                    if (a.mu[p] < rat_min(a.mu[x], rat_min(a.mu[y], a.mu[z])))
                        return false;
                    if (a.ga[p] > rat_max(a.ga[x], rat_max(a.ga[y], a.ga[z])))
                        return false;
                }
    return true;
}

std::optional<int> semiprime_violation(const FiniteMagma& m, const IFS& a) {
    for (int x = 0; x < m.n; ++x) {
        int sq = m.at(x, x);
        if (a.mu[x] < a.mu[sq] || a.ga[x] > a.ga[sq]) return x;
    }
    return std::nullopt;
}

bool is_if_semiprime(const FiniteMagma& m, const IFS& a) {
    return !semiprime_violation(m, a).has_value();
}

bool is_idempotent(const FiniteMagma& m, const IFS& a) {
    return ifs_product(m, a, a) == a;
}

std::pair<Rat, Rat> point_image(const IFS& a, int x) {
    return {a.mu[x], a.ga[x]};
}

ValueGrid::ValueGrid(std::vector<Rat> ls) : levels(std::move(ls)) {
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.empty() || levels.front() != Rat::zero() || levels.back() != Rat::one())
        throw std::invalid_argument("value grid must contain 0 and 1");
    for (const auto& l : levels)
        if (!l.in_unit_interval())
            throw std::invalid_argument("value grid level outside [0,1]");
}

std::vector<std::pair<Rat, Rat>> ValueGrid::admissible_pairs() const {
    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& m : levels)
        for (const auto& g : levels)
            if (!(Rat::one() < m + g)) out.emplace_back(m, g);
    return out;
}

std::string ValueGrid::str() const {
    std::string out;
    for (size_t i = 0; i < levels.size(); ++i) {
        if (i) out += ",";
        out += levels[i].str();
    }
    return out;
}

ValueGrid ValueGrid::parse(const std::string& text) {
    std::vector<Rat> ls;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (!tok.empty()) ls.push_back(Rat::parse(tok));
    }
    return ValueGrid(std::move(ls));
}

ValueGrid default_grid() {
    return ValueGrid({Rat::zero(), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat::one()});
}

void grid_enumerate(int n, const ValueGrid& grid,
                    const std::function<void(const IFS&)>& sink) {
    auto pairs = grid.admissible_pairs();
    int p = static_cast<int>(pairs.size());
    std::vector<int> idx(n, 0);
    IFS cur;
    cur.mu.assign(n, pairs[0].first);
    cur.ga.assign(n, pairs[0].second);
    for (;;) {
        sink(cur);
        int pos = n - 1;
        while (pos >= 0 && idx[pos] == p - 1) {
            idx[pos] = 0;
            cur.mu[pos] = pairs[0].first;
            cur.ga[pos] = pairs[0].second;
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
        cur.mu[pos] = pairs[idx[pos]].first;
        cur.ga[pos] = pairs[idx[pos]].second;
    }
}

std::uint64_t grid_count(int n, const ValueGrid& grid) {
    std::uint64_t p = grid.admissible_pairs().size();
    std::uint64_t out = 1;
    for (int i = 0; i < n; ++i) out *= p;
    return out;
}

std::string format_ifs(const IFS& a) {
    std::ostringstream os;
    os << "mu:";
    for (const auto& v : a.mu) os << " " << v.str();
    os << "\ngamma:";
    for (const auto& v : a.ga) os << " " << v.str();
    os << "\n";
    return os.str();
}

IFS parse_ifs(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<Rat> mu, ga;
    bool saw_mu = false, saw_ga = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        std::vector<Rat>* dst = nullptr;
        if (head == "mu:") {
            dst = &mu;
            saw_mu = true;
        } else if (head == "gamma:") {
            dst = &ga;
            saw_ga = true;
        } else {
            throw std::invalid_argument("expected 'mu:' or 'gamma:' line, got '" +
                                        head + "'");
        }
        std::string tok;
        while (ls >> tok) dst->push_back(Rat::parse(tok));
    }
    if (!saw_mu || !saw_ga)
        throw std::invalid_argument("IFS literal needs both mu: and gamma: lines");
    if (mu.size() != ga.size())
        throw std::invalid_argument("mu and gamma lengths differ");
    return IFS::unchecked(std::move(mu), std::move(ga));
}

} // namespace aglab
