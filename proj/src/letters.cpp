#include "sdt/letters.hpp"

#include <algorithm>
#include <cctype>

namespace sdt {

std::string to_string(const Letter& l) {
    if (l.is_x()) return "X";
    std::string s = std::to_string(l.value);
    if (l.primed) s += '\'';
    return s;
}

Letter parse_letter(const std::string& token) {
    require(!token.empty(), "empty letter token");
    if (token == "X") return Letter::x();
    std::string digits = token;
    bool primed = false;
    if (digits.back() == '\'') {
        primed = true;
        digits.pop_back();
    }
    require(!digits.empty() && std::all_of(digits.begin(), digits.end(),
                                           [](unsigned char c) { return std::isdigit(c); }),
            "bad letter token '" + token + "'");
    int v = std::stoi(digits);
    require(v >= 1, "letter value must be positive in '" + token + "'");
    return Letter{v, primed};
}

Evaluation evaluation_of(const std::vector<Letter>& letters) {
    Evaluation e;
    for (const Letter& l : letters) {
        if (l.is_x()) continue;
        if (static_cast<int>(e.size()) < l.value) e.resize(l.value, 0);
        ++e[l.value - 1];
    }
    return eval_stripped(std::move(e));
}

Evaluation eval_stripped(Evaluation e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    return e;
}

Evaluation eval_sum(const Evaluation& a, const Evaluation& b) {
    Evaluation e(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) e[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) e[i] += b[i];
    return eval_stripped(std::move(e));
}

std::string to_string(const Evaluation& e) {
    std::string s = "(";
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    s += ')';
    return s;
}

} // namespace sdt
