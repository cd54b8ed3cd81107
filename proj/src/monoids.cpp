#include "sdt/monoids.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace sdt {

namespace {

// A window rule as a pair of permutation patterns over the ordered symbols
// a, b, c, d (encoded 0..3): lhs/rhs give, per window position, which symbol
// sits there, and strict[] carries the <-vs-<= profile of a?b?c?d. A window
// matches one side when reading the symbols off it satisfies the profile;
// the move writes the other side.
struct Rule {
    std::array<int, 4> lhs;
    std::array<int, 4> rhs;
    std::array<bool, 3> strict;
    int arity;
};

constexpr std::array<Rule, 2> knuth_rules{{
    // acb ~ cab with a <= b < c
    {{0, 2, 1, -1}, {2, 0, 1, -1}, {false, true, false}, 3},
    // bac ~ bca with a < b <= c
    {{1, 0, 2, -1}, {1, 2, 0, -1}, {true, false, false}, 3},
}};

constexpr std::array<Rule, 8> shifted_rules{{
    // abdc ~ adbc with a <= b <= c < d
    {{0, 1, 3, 2}, {0, 3, 1, 2}, {false, false, true}, 4},
    // acdb ~ acbd with a <= b < c <= d
    {{0, 2, 3, 1}, {0, 2, 1, 3}, {false, true, false}, 4},
    // dacb ~ adcb with a <= b < c < d
    {{3, 0, 2, 1}, {0, 3, 2, 1}, {false, true, true}, 4},
    // badc ~ bdac with a < b <= c < d
    {{1, 0, 3, 2}, {1, 3, 0, 2}, {true, false, true}, 4},
    // cbda ~ cdba with a < b < c <= d
    {{2, 1, 3, 0}, {2, 3, 1, 0}, {true, true, false}, 4},
    // dbca ~ bdca with a < b <= c < d
    {{3, 1, 2, 0}, {1, 3, 2, 0}, {true, false, true}, 4},
    // bcda ~ bcad with a < b <= c <= d
    {{1, 2, 3, 0}, {1, 2, 0, 3}, {true, false, false}, 4},
    // cadb ~ cdab with a <= b < c <= d
    {{2, 0, 3, 1}, {2, 3, 0, 1}, {false, true, false}, 4},
}};

bool apply_rule(const Rule& rule, bool forward, const int* win, int* out) {
    const auto& from = forward ? rule.lhs : rule.rhs;
    const auto& to = forward ? rule.rhs : rule.lhs;
    std::array<int, 4> val{};
    for (int t = 0; t < rule.arity; ++t) val[from[t]] = win[t];
    for (int s = 0; s + 1 < rule.arity; ++s)
        if (rule.strict[s] ? !(val[s] < val[s + 1]) : !(val[s] <= val[s + 1])) return false;
    for (int t = 0; t < rule.arity; ++t) out[t] = val[to[t]];
    return true;
}

template <typename Rules, typename Patch>
void scan_windows(const Rules& rules, size_t positions, const Patch& patch) {
    for (size_t i = 0; i < positions; ++i)
        for (const Rule& rule : rules)
            for (bool forward : {true, false}) patch(i, rule, forward);
}

template <typename W>
void check_move(const W& before, const W& after, const char* what) {
    W a = before, b = after;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    internal_check(a == b && before.size() == after.size(),
                   std::string(what) + ": a move changed the letter multiset");
}

bool plain_system(RelationSystem system) {
    return system == RelationSystem::plactic || system == RelationSystem::shifted_plactic;
}

template <typename W>
std::set<W> closure_of(const W& w, RelationSystem system, int cap) {
    require(cap >= 0, "class_closure: negative cap");
    require(static_cast<int>(w.size()) <= cap,
            "class_closure: word of length " + std::to_string(w.size()) +
                " exceeds the cap of " + std::to_string(cap));
    std::set<W> seen{w};
    std::vector<W> frontier{w};
    while (!frontier.empty()) {
        std::vector<W> next;
        for (const W& u : frontier)
            for (const W& v : rewrite_neighbors(u, system))
                if (seen.insert(v).second) next.push_back(v);
        frontier = std::move(next);
    }
    return seen;
}

template <typename W>
bool equivalent_impl(const W& a, const W& b, RelationSystem system, int cap) {
    if (a.size() != b.size()) return false;
    W sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    if (a == b) return true;
    return class_closure(a, system, cap).count(b) > 0;
}

} // namespace

std::set<Word> rewrite_neighbors(const Word& w, RelationSystem system) {
    require(plain_system(system),
            "rewrite_neighbors: plain words take the plactic or shifted plactic system");
    std::set<Word> out;
    auto scan = [&](const auto& rules, size_t arity) {
        if (w.size() < arity) return;
        scan_windows(rules, w.size() - arity + 1, [&](size_t i, const Rule& rule, bool forward) {
            int buf[4];
            if (!apply_rule(rule, forward, w.data() + i, buf)) return;
            Word v = w;
            std::copy(buf, buf + rule.arity, v.begin() + i);
            if (v == w) return;
            check_move(w, v, "rewrite_neighbors");
            out.insert(std::move(v));
        });
    };
    if (system == RelationSystem::plactic)
        scan(knuth_rules, 3);
    else
        scan(shifted_rules, 4);
    return out;
}

std::set<SuperWord> rewrite_neighbors(const SuperWord& w, RelationSystem system) {
    require(!plain_system(system), "rewrite_neighbors: super words take a super system");
    const bool shifted = system == RelationSystem::super_shifted_plactic;
    const size_t arity = shifted ? 4 : 3;
    std::set<SuperWord> out;
    if (w.size() >= arity) {
        for (size_t i = 0; i + arity <= w.size(); ++i) {
            bool same_tag = true;
            for (size_t t = 1; t < arity; ++t)
                if (w[i + t].tag != w[i].tag) same_tag = false;
            if (!same_tag) continue;
            int win[4];
            for (size_t t = 0; t < arity; ++t) win[t] = w[i + t].index;
            auto emit = [&](const Rule& rule, bool forward) {
                int buf[4];
                if (!apply_rule(rule, forward, win, buf)) return;
                SuperWord v = w;
                for (size_t t = 0; t < arity; ++t) v[i + t].index = buf[t];
                if (v == w) return;
                check_move(w, v, "rewrite_neighbors");
                out.insert(std::move(v));
            };
            if (shifted)
                for (const Rule& rule : shifted_rules)
                    for (bool fwd : {true, false}) emit(rule, fwd);
            else
                for (const Rule& rule : knuth_rules)
                    for (bool fwd : {true, false}) emit(rule, fwd);
        }
    }
    for (size_t i = 0; i + 2 <= w.size(); ++i) {
        if (w[i].tag == w[i + 1].tag) continue;
        SuperWord v = w;
        std::swap(v[i], v[i + 1]);
        out.insert(std::move(v));
    }
    return out;
}

std::set<Word> class_closure(const Word& w, RelationSystem system, int cap) {
    return closure_of(w, system, cap);
}

std::set<SuperWord> class_closure(const SuperWord& w, RelationSystem system, int cap) {
    return closure_of(w, system, cap);
}

Word canonical_word(const Word& w, RelationSystem system, int cap) {
    return *class_closure(w, system, cap).begin();
}

bool equivalent(const Word& a, const Word& b, RelationSystem system, int cap) {
    return equivalent_impl(a, b, system, cap);
}

bool equivalent(const SuperWord& a, const SuperWord& b, RelationSystem system, int cap) {
    return equivalent_impl(a, b, system, cap);
}

YoungTableau schensted_tableau(const Word& w) {
    std::vector<std::vector<int>> rows;
    for (int x : w) {
        require(x >= 1, "schensted_tableau: letters are positive integers");
        int cur = x;
        for (size_t r = 0;; ++r) {
            if (r == rows.size()) {
                rows.push_back({cur});
                break;
            }
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), cur);
            if (it == rows[r].end()) {
                rows[r].push_back(cur);
                break;
            }
            std::swap(*it, cur); // bump the displaced letter one row up
        }
    }
    return young_from_ints(rows);
}

Word restrict_to(const SuperWord& w, int tag) {
    require(tag == 1 || tag == 2, "restrict_to: tag must be 1 or 2");
    Word out;
    for (const SuperLetter& l : w)
        if (l.tag == tag) out.push_back(l.index);
    return out;
}

bool super_equivalent_via_restriction(const SuperWord& a, const SuperWord& b, bool shifted,
                                      int cap) {
    RelationSystem per_tag =
        shifted ? RelationSystem::shifted_plactic : RelationSystem::plactic;
    return equivalent(restrict_to(a, 1), restrict_to(b, 1), per_tag, cap) &&
           equivalent(restrict_to(a, 2), restrict_to(b, 2), per_tag, cap);
}

std::pair<Word, Word> sshpc_canonical(const SuperWord& w, int cap) {
    return {canonical_word(restrict_to(w, 1), RelationSystem::shifted_plactic, cap),
            canonical_word(restrict_to(w, 2), RelationSystem::shifted_plactic, cap)};
}

std::string format_word(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

namespace {

int parse_positive(const std::string& tok, const char* what) {
    int value = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size() || value < 1)
        throw domain_error(std::string(what) + ": bad letter '" + tok + "'");
    return value;
}

} // namespace

Word parse_word(const std::string& s) {
    std::istringstream in(s);
    Word w;
    std::string tok;
    while (in >> tok) w.push_back(parse_positive(tok, "parse_word"));
    return w;
}

std::string format_super_word(const SuperWord& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i].index) + '^' + std::to_string(w[i].tag);
    }
    return out;
}

SuperWord parse_super_word(const std::string& s) {
    std::istringstream in(s);
    SuperWord w;
    std::string tok;
    while (in >> tok) {
        size_t caret = tok.find('^');
        if (caret == std::string::npos || caret == 0 || caret + 1 >= tok.size())
            throw domain_error("parse_super_word: bad letter '" + tok + "' (want index^tag)");
        int index = parse_positive(tok.substr(0, caret), "parse_super_word");
        int tag = parse_positive(tok.substr(caret + 1), "parse_super_word");
        if (tag != 1 && tag != 2)
            throw domain_error("parse_super_word: tag must be 1 or 2 in '" + tok + "'");
        w.push_back(SuperLetter{index, tag});
    }
    return w;
}

} // namespace sdt
