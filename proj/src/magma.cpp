#include "aglab/magma.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace aglab {

FiniteMagma::FiniteMagma(int order, std::vector<std::uint8_t> t,
                         std::vector<std::string> names)
    : n(order), table(std::move(t)), labels(std::move(names)) {
    if (n <= 0)
        throw std::invalid_argument("magma order must be positive");
    if (table.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("table size does not match order");
    for (auto v : table)
        if (v >= n)
            throw std::invalid_argument("table entry out of range");
    if (!labels.empty()) {
        if (labels.size() != static_cast<size_t>(n))
            throw std::invalid_argument("label count does not match order");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (labels[i] == labels[j])
                    throw std::invalid_argument("duplicate label '" + labels[i] + "'");
    }
}

std::string FiniteMagma::label(int x) const {
    return labels.empty() ? std::to_string(x) : labels[x];
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

} // namespace

FiniteMagma parse_cayley_table(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> label_index;
    std::vector<std::uint8_t> table;
    int rows_read = 0;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;

        if (n < 0) {
            if (toks.size() != 2 || toks[0] != "order")
                parse_fail(lineno, "expected header 'order N'");
            try {
                n = std::stoi(toks[1]);
            } catch (const std::exception&) {
                parse_fail(lineno, "bad order '" + toks[1] + "'");
            }
            if (n <= 0 || n > 32)
                parse_fail(lineno, "order out of range: " + toks[1]);
            continue;
        }
        if (toks[0] == "labels" && labels.empty() && rows_read == 0) {
            toks.erase(toks.begin());
            if (toks.size() != static_cast<size_t>(n))
                parse_fail(lineno, "labels line needs exactly " + std::to_string(n) + " names");
            for (int i = 0; i < n; ++i) {
                if (!label_index.emplace(toks[i], i).second)
                    parse_fail(lineno, "duplicate label '" + toks[i] + "'");
            }
            labels = toks;
            continue;
        }
        if (rows_read == n)
            parse_fail(lineno, "unexpected extra row");
        if (toks.size() != static_cast<size_t>(n))
            parse_fail(lineno, "row " + std::to_string(rows_read) + " has " +
                                   std::to_string(toks.size()) + " entries, expected " +
                                   std::to_string(n));
        for (const auto& t : toks) {
            int v;
            if (!labels.empty()) {
                auto it = label_index.find(t);
                if (it == label_index.end())
                    parse_fail(lineno, "unknown label '" + t + "'");
                v = it->second;
            } else {
                try {
                    v = std::stoi(t);
                } catch (const std::exception&) {
                    parse_fail(lineno, "bad entry '" + t + "'");
                }
                if (v < 0 || v >= n)
                    parse_fail(lineno, "entry " + t + " out of range [0, " +
                                           std::to_string(n) + ")");
            }
            table.push_back(static_cast<std::uint8_t>(v));
        }
        ++rows_read;
    }
    if (n < 0)
        throw std::runtime_error("missing 'order N' header");
    if (rows_read != n)
        parse_fail(lineno, "expected " + std::to_string(n) + " rows, got " +
                               std::to_string(rows_read));
    return FiniteMagma(n, std::move(table), std::move(labels));
}

FiniteMagma parse_cayley_table_text(const std::string& text) {
    std::istringstream is(text);
    return parse_cayley_table(is);
}

std::string format_cayley_table(const FiniteMagma& m, bool with_labels) {
    std::ostringstream os;
    os << "order " << m.n << "\n";
    bool named = with_labels && !m.labels.empty();
    if (named) {
        os << "labels";
        for (const auto& l : m.labels) os << " " << l;
        os << "\n";
    }
    for (int x = 0; x < m.n; ++x) {
        for (int y = 0; y < m.n; ++y) {
            if (y) os << " ";
            os << (named ? m.labels[m.at(x, y)] : std::to_string(m.at(x, y)));
        }
        os << "\n";
    }
    return os.str();
}

std::optional<std::array<int, 3>> left_invertive_violation(const FiniteMagma& m) {
    for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
            for (int c = 0; c < m.n; ++c)
                if (m.at(m.at(a, b), c) != m.at(m.at(c, b), a))
                    return std::array<int, 3>{a, b, c};
    return std::nullopt;
}

bool is_left_invertive(const FiniteMagma& m) {
    return !left_invertive_violation(m).has_value();
}

bool is_medial(const FiniteMagma& m) {
    for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
            for (int c = 0; c < m.n; ++c)
                for (int d = 0; d < m.n; ++d)
                    if (m.at(m.at(a, b), m.at(c, d)) != m.at(m.at(a, c), m.at(b, d)))
                        return false;
    return true;
}

bool is_paramedial(const FiniteMagma& m) {
    for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
            for (int c = 0; c < m.n; ++c)
                for (int d = 0; d < m.n; ++d)
                    if (m.at(m.at(a, b), m.at(c, d)) != m.at(m.at(d, c), m.at(b, a)))
                        return false;
    return true;
}

bool satisfies_law4(const FiniteMagma& m) {
    for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
            for (int c = 0; c < m.n; ++c)
                if (m.at(a, m.at(b, c)) != m.at(b, m.at(a, c)))
                    return false;
    return true;
}

std::vector<int> left_identities(const FiniteMagma& m) {
    std::vector<int> out;
    for (int e = 0; e < m.n; ++e) {
        bool ok = true;
        for (int x = 0; x < m.n && ok; ++x) ok = m.at(e, x) == x;
        if (ok) out.push_back(e);
    }
    return out;
}

std::optional<Witness> regular_witness(const FiniteMagma& m, int a) {
    for (int x = 0; x < m.n; ++x)
        if (m.at(m.at(a, x), a) == a)
            return Witness{WitnessKind::Regular, a, x};
    return std::nullopt;
}

std::optional<Witness> intra_regular_witness(const FiniteMagma& m, int a) {
    int sq = m.at(a, a);
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            if (m.at(m.at(x, sq), y) == a)
                return Witness{WitnessKind::IntraRegular, a, x, y};
    return std::nullopt;
}

bool is_regular(const FiniteMagma& m) {
    for (int a = 0; a < m.n; ++a)
        if (!regular_witness(m, a)) return false;
    return true;
}

bool is_intra_regular(const FiniteMagma& m) {
    for (int a = 0; a < m.n; ++a)
        if (!intra_regular_witness(m, a)) return false;
    return true;
}

SubsetMask full_mask(int n) {
    return n >= 32 ? ~SubsetMask(0) : ((SubsetMask(1) << n) - 1);
}

std::string format_subset(const FiniteMagma& m, SubsetMask a) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < m.n; ++i) {
        if (!(a >> i & 1)) continue;
        if (!first) out += ",";
        out += m.label(i);
        first = false;
    }
    return out + "}";
}

SubsetMask subset_product(const FiniteMagma& m, SubsetMask a, SubsetMask b) {
    SubsetMask out = 0;
    for (int x = 0; x < m.n; ++x) {
        if (!(a >> x & 1)) continue;
        for (int y = 0; y < m.n; ++y)
            if (b >> y & 1) out |= SubsetMask(1) << m.at(x, y);
    }
    return out;
}

namespace {

bool subset_of(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

void require_nonempty(SubsetMask a) {
    if (a == 0)
        throw std::invalid_argument("ideal predicates require a non-empty subset");
}

} // namespace

bool is_ag_subgroupoid(const FiniteMagma& m, SubsetMask a) {
    require_nonempty(a);
    return subset_of(subset_product(m, a, a), a);
}

bool is_left_ideal(const FiniteMagma& m, SubsetMask a) {
    require_nonempty(a);
    return subset_of(subset_product(m, full_mask(m.n), a), a);
}

bool is_right_ideal(const FiniteMagma& m, SubsetMask a) {
    require_nonempty(a);
    return subset_of(subset_product(m, a, full_mask(m.n)), a);
}

bool is_two_sided_ideal(const FiniteMagma& m, SubsetMask a) {
    return is_left_ideal(m, a) && is_right_ideal(m, a);
}

bool is_generalized_bi_ideal(const FiniteMagma& m, SubsetMask a) {
    require_nonempty(a);
    SubsetMask as = subset_product(m, a, full_mask(m.n));
    return subset_of(subset_product(m, as, a), a);
}

bool is_bi_ideal(const FiniteMagma& m, SubsetMask a) {
    return is_ag_subgroupoid(m, a) && is_generalized_bi_ideal(m, a);
}

bool is_one_two_ideal(const FiniteMagma& m, SubsetMask a) {
    require_nonempty(a);
    if (!is_ag_subgroupoid(m, a)) return false;
    SubsetMask as = subset_product(m, a, full_mask(m.n));
    SubsetMask a2 = subset_product(m, a, a);
    return subset_of(subset_product(m, as, a2), a);
}

bool is_semiprime_subset(const FiniteMagma& m, SubsetMask a) {
    for (int x = 0; x < m.n; ++x)
        if ((a >> m.at(x, x) & 1) && !(a >> x & 1))
            return false;
    return true;
}

bool is_ag_band(const FiniteMagma& m) {
    for (int x = 0; x < m.n; ++x)
        if (m.at(x, x) != x) return false;
    return true;
}

bool is_left_duo(const FiniteMagma& m) {
    for (SubsetMask a : all_ideals(m, IdealKind::Left))
        if (!is_right_ideal(m, a)) return false;
    return true;
}

const char* ideal_kind_name(IdealKind k) {
    switch (k) {
        case IdealKind::Subgroupoid:   return "subgroupoid";
        case IdealKind::Left:          return "left";
        case IdealKind::Right:         return "right";
        case IdealKind::TwoSided:      return "two-sided";
        case IdealKind::GeneralizedBi: return "generalized-bi";
        case IdealKind::Bi:            return "bi";
        case IdealKind::OneTwo:        return "(1,2)";
    }
    return "?";
}

std::vector<SubsetMask> all_ideals(const FiniteMagma& m, IdealKind kind,
                                   int order_cap) {
    if (m.n > order_cap)
        throw std::invalid_argument("all_ideals: order " + std::to_string(m.n) +
                                    " exceeds cap " + std::to_string(order_cap));
    bool (*pred)(const FiniteMagma&, SubsetMask) = nullptr;
    switch (kind) {
        case IdealKind::Subgroupoid:   pred = is_ag_subgroupoid; break;
        case IdealKind::Left:          pred = is_left_ideal; break;
        case IdealKind::Right:         pred = is_right_ideal; break;
        case IdealKind::TwoSided:      pred = is_two_sided_ideal; break;
        case IdealKind::GeneralizedBi: pred = is_generalized_bi_ideal; break;
        case IdealKind::Bi:            pred = is_bi_ideal; break;
        case IdealKind::OneTwo:        pred = is_one_two_ideal; break;
    }
    std::vector<SubsetMask> out;
    SubsetMask top = full_mask(m.n);
    for (SubsetMask a = 1; a <= top; ++a)
        if (pred(m, a)) out.push_back(a);
    return out;
}

} // namespace aglab
