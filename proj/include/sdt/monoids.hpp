#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sdt/error.hpp"
#include "sdt/tableaux.hpp"

namespace sdt {

// A word over the positive integers; the alphabet order is the integer order.
using Word = std::vector<int>;

// A letter of one of two tagged copies of the positive integers. Letters of
// different tags never compare in any rewriting rule — they only commute —
// so operator< is merely the storage order for sets and canonical picks.
struct SuperLetter {
    int index = 1;
    int tag = 1;

    bool operator==(const SuperLetter& o) const { return index == o.index && tag == o.tag; }
    bool operator<(const SuperLetter& o) const {
        if (tag != o.tag) return tag < o.tag;
        return index < o.index;
    }
};

using SuperWord = std::vector<SuperLetter>;

// Which congruence generates the rewriting: three-letter windows (plactic),
// four-letter windows (shifted_plactic), or the two-alphabet variants that
// apply the same windows within each tag and let different tags commute.
enum class RelationSystem { plactic, shifted_plactic, super_plactic, super_shifted_plactic };

// Classes grow factorially with word length, so closures refuse longer words.
inline constexpr int default_closure_cap = 10;

// All words one congruence move away: every rule, both directions, at every
// contiguous position. Plain words take the plain systems, super words the
// super systems; a mismatch is a domain error.
std::set<Word> rewrite_neighbors(const Word& w, RelationSystem system);
std::set<SuperWord> rewrite_neighbors(const SuperWord& w, RelationSystem system);

// The full congruence class of w, by breadth-first closure. Throws once
// |w| exceeds cap. The moves preserve length and letter multiset, so the
// closure is finite; its lexicographically least member is the canonical
// class representative.
std::set<Word> class_closure(const Word& w, RelationSystem system,
                             int cap = default_closure_cap);
std::set<SuperWord> class_closure(const SuperWord& w, RelationSystem system,
                                  int cap = default_closure_cap);

Word canonical_word(const Word& w, RelationSystem system, int cap = default_closure_cap);

// Same congruence class? Words of different lengths (or letter multisets)
// are never equivalent and short-circuit to false before any closure runs.
bool equivalent(const Word& a, const Word& b, RelationSystem system,
                int cap = default_closure_cap);
bool equivalent(const SuperWord& a, const SuperWord& b, RelationSystem system,
                int cap = default_closure_cap);

// Row-insertion tableau of w; constant on plactic classes and distinct
// across them, making it the plactic canonical form.
YoungTableau schensted_tableau(const Word& w);

// The subword of letters carrying the given tag, as a plain word.
Word restrict_to(const SuperWord& w, int tag);

// Decides super (shifted) plactic equivalence through the two restrictions:
// a and b are equivalent iff their tag-1 and tag-2 restrictions are plactic
// (resp. shifted plactic) equivalent. Only the restrictions are closed over,
// so this reaches words whose direct closure would blow past the cap.
bool super_equivalent_via_restriction(const SuperWord& a, const SuperWord& b, bool shifted,
                                      int cap = default_closure_cap);

// Canonical pair of a super shifted plactic class: the lex-least members of
// the two restrictions' shifted plactic classes.
std::pair<Word, Word> sshpc_canonical(const SuperWord& w, int cap = default_closure_cap);

// Words print as space-separated letters ("5 4 2"), super words with the tag
// after a caret ("2^1 4^1 1^2").
std::string format_word(const Word& w);
Word parse_word(const std::string& s);
std::string format_super_word(const SuperWord& w);
SuperWord parse_super_word(const std::string& s);

} // namespace sdt
