#include "sdt/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace sdt {

namespace {

using njson = nlohmann::ordered_json;

njson letters_json(const std::vector<Letter>& row) {
    njson out = njson::array();
    for (const Letter& l : row) out.push_back(to_string(l));
    return out;
}

njson grid_json(const Partition& shape, const std::vector<std::vector<Letter>>& rows) {
    njson out;
    out["shape"] = shape;
    out["rows"] = njson::array();
    for (const auto& row : rows) out["rows"].push_back(letters_json(row));
    return out;
}

std::string dump(const njson& j) { return j.dump() + '\n'; }

std::string grid_text(const std::vector<std::vector<Letter>>& rows, bool shifted_indent) {
    std::string out;
    for (size_t i = rows.size(); i-- > 0;) {
        std::string line;
        for (size_t d = 0; shifted_indent && d < i; ++d) line += ". ";
        for (size_t c = 0; c < rows[i].size(); ++c) {
            if (c) line += ' ';
            line += to_string(rows[i][c]);
        }
        out += line;
        out += '\n';
    }
    return out;
}

// Lines, top row first, tokenized on spaces; blank lines are skipped.
std::vector<std::vector<std::string>> tokenize_lines(const std::string& input) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(input);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (row >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

AnyTableau parse_tableau_text(const std::string& input) {
    auto lines = tokenize_lines(input);
    bool dotted = false, masked = false;
    for (const auto& line : lines)
        for (const std::string& tok : line) {
            dotted = dotted || tok == ".";
            masked = masked || tok == "X";
        }
    require(!(dotted && masked), "parse_tableau: grid mixes '.' indentation with X cells");

    // Bottom row first, as the containers store them.
    std::vector<std::vector<Letter>> rows;
    std::vector<int> indents;
    for (size_t i = lines.size(); i-- > 0;) {
        const auto& line = lines[i];
        size_t dots = 0;
        while (dots < line.size() && line[dots] == ".") ++dots;
        std::vector<Letter> row;
        for (size_t t = dots; t < line.size(); ++t) {
            require(line[t] != ".", "parse_tableau: '.' after the first letter of a row");
            row.push_back(parse_letter(line[t]));
        }
        require(!row.empty(), "parse_tableau: row of nothing but '.'");
        rows.push_back(std::move(row));
        indents.push_back(static_cast<int>(dots));
    }

    AnyTableau out;
    if (dotted) {
        for (size_t r = 0; r < rows.size(); ++r)
            require(indents[r] == static_cast<int>(r),
                    "parse_tableau: shifted row " + std::to_string(r) + " has " +
                        std::to_string(indents[r]) + " '.' tokens, expected " +
                        std::to_string(r));
        out.kind = TableauKind::shifted;
        out.shifted = shifted_from_rows(std::move(rows));
    } else if (masked) {
        out.kind = TableauKind::padded;
        out.padded = padded_from_rows(std::move(rows));
    } else {
        out.kind = TableauKind::young;
        out.young = young_from_rows(std::move(rows));
    }
    return out;
}

std::vector<std::vector<Letter>> rows_from_json(const njson& j) {
    std::vector<std::vector<Letter>> rows;
    for (const njson& jrow : j.at("rows")) {
        std::vector<Letter> row;
        for (const njson& cell : jrow) row.push_back(parse_letter(cell.get<std::string>()));
        rows.push_back(std::move(row));
    }
    return rows;
}

void check_declared_shape(const njson& j, const Partition& actual, const char* what) {
    Partition declared = j.at("shape").get<Partition>();
    require(declared == actual, std::string(what) + ": declared shape " +
                                    format_partition(declared) + " does not match the rows");
}

Paving paving_from_json(const njson& j) {
    Partition shape = j.at("shape").get<Partition>();
    std::vector<Domino> dominoes;
    for (const njson& jd : j.at("dominoes")) {
        const njson& cells = jd.at("cells");
        require(cells.size() == 2, "parse_paving: a domino has exactly two cells");
        Cell lo{cells[0].at(0).get<int>(), cells[0].at(1).get<int>()};
        Cell hi{cells[1].at(0).get<int>(), cells[1].at(1).get<int>()};
        bool vertical = hi.col == lo.col && hi.row == lo.row + 1;
        bool horizontal = hi.row == lo.row && hi.col == lo.col + 1;
        require(vertical || horizontal,
                "parse_paving: cells " + to_string(lo) + " " + to_string(hi) +
                    " are not adjacent in bottom/left-first order");
        dominoes.push_back(Domino{lo, vertical, parse_letter(jd.at("label").get<std::string>())});
    }
    return make_paving(std::move(shape), std::move(dominoes));
}

AnyTableau grid_from_json(const njson& j) {
    AnyTableau out;
    std::vector<std::vector<Letter>> rows = rows_from_json(j);
    bool masked = false;
    for (const auto& row : rows)
        for (const Letter& l : row) masked = masked || l.is_x();
    if (masked) {
        out.kind = TableauKind::padded;
        out.padded = padded_from_rows(std::move(rows));
        check_declared_shape(j, out.padded.shape, "parse_tableau");
    } else {
        out.kind = TableauKind::young;
        out.young = young_from_rows(std::move(rows));
        check_declared_shape(j, out.young.shape, "parse_tableau");
    }
    return out;
}

AnyTableau parse_tableau_json(const njson& j) {
    if (j.contains("dominoes")) {
        AnyTableau out;
        out.kind = TableauKind::paving;
        out.paving = paving_from_json(j);
        return out;
    }
    return grid_from_json(j);
}

bool looks_like_json(const std::string& input) {
    for (char c : input) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

njson domino_json(const Domino& d) {
    njson jd;
    jd["cells"] = njson::array(
        {njson::array({d.lo.col, d.lo.row}),
         njson::array({d.second().col, d.second().row})});
    jd["label"] = to_string(d.label);
    return jd;
}

} // namespace

std::string to_text(const YoungTableau& t) { return grid_text(t.rows, false); }
std::string to_text(const ShiftedYoungTableau& t) { return grid_text(t.rows, true); }
std::string to_text(const PaddedShiftedTableau& t) { return grid_text(t.rows, false); }

std::string to_json(const YoungTableau& t) { return dump(grid_json(t.shape, t.rows)); }
std::string to_json(const ShiftedYoungTableau& t) { return to_json(pad(t)); }
std::string to_json(const PaddedShiftedTableau& t) { return dump(grid_json(t.shape, t.rows)); }

std::string to_json(const Paving& p) {
    njson j;
    j["shape"] = p.shape;
    j["dominoes"] = njson::array();
    for (const Domino& d : p.dominoes) j["dominoes"].push_back(domino_json(d));
    return dump(j);
}

std::string to_json(const TableauPair& pair) {
    njson j;
    j["t1"] = grid_json(pair.t1.shape, pair.t1.rows);
    j["t2"] = grid_json(pair.t2.shape, pair.t2.rows);
    return dump(j);
}

std::string to_json(const ShiftedTableauPair& pair) {
    njson j;
    j["t1"] = grid_json(pair.t1.shape, pair.t1.rows);
    j["t2"] = grid_json(pair.t2.shape, pair.t2.rows);
    return dump(j);
}

std::string to_json(const SparsePolynomial& p) {
    njson j;
    j["n"] = p.n_vars;
    j["terms"] = njson::array();
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        njson term;
        term["e"] = it->first;
        const Coeff& c = it->second;
        if (c >= std::numeric_limits<long long>::min() &&
            c <= std::numeric_limits<long long>::max())
            term["c"] = c.convert_to<long long>();
        else
            term["c"] = c.str();
        j["terms"].push_back(term);
    }
    return dump(j);
}

std::string to_string(TableauKind kind) {
    switch (kind) {
    case TableauKind::young: return "young";
    case TableauKind::shifted: return "shifted";
    case TableauKind::padded: return "padded";
    case TableauKind::paving: return "paving";
    }
    throw internal_error("to_string: unknown tableau kind");
}

AnyTableau parse_tableau(const std::string& input) {
    if (!looks_like_json(input)) return parse_tableau_text(input);
    try {
        return parse_tableau_json(njson::parse(input));
    } catch (const njson::exception& e) {
        throw domain_error(std::string("parse_tableau: ") + e.what());
    }
}

Paving parse_paving(const std::string& input) {
    require(looks_like_json(input), "parse_paving: pavings are JSON objects");
    try {
        njson j = njson::parse(input);
        require(j.contains("dominoes"), "parse_paving: missing \"dominoes\"");
        return paving_from_json(j);
    } catch (const njson::exception& e) {
        throw domain_error(std::string("parse_paving: ") + e.what());
    }
}

PaddedShiftedTableau parse_padded(const std::string& input) {
    AnyTableau t = parse_tableau(input);
    switch (t.kind) {
    case TableauKind::padded: return t.padded;
    case TableauKind::shifted: return pad(t.shifted);
    case TableauKind::young: return padded_from_rows(t.young.rows);
    case TableauKind::paving: break;
    }
    throw domain_error("parse_padded: got a paving, expected a letter grid");
}

YoungTableau parse_young(const std::string& input) {
    AnyTableau t = parse_tableau(input);
    require(t.kind == TableauKind::young,
            "parse_young: got a " + to_string(t.kind) + " tableau");
    return t.young;
}

TableauPair parse_pair(const std::string& input) {
    try {
        njson j = njson::parse(input);
        TableauPair pair;
        AnyTableau t1 = parse_tableau_json(j.at("t1"));
        AnyTableau t2 = parse_tableau_json(j.at("t2"));
        require(t1.kind == TableauKind::young && t2.kind == TableauKind::young,
                "parse_pair: both halves must be plain grids");
        pair.t1 = std::move(t1.young);
        pair.t2 = std::move(t2.young);
        return pair;
    } catch (const njson::exception& e) {
        throw domain_error(std::string("parse_pair: ") + e.what());
    }
}

ShiftedTableauPair parse_shifted_pair(const std::string& input) {
    try {
        njson j = njson::parse(input);
        auto half = [&](const char* key) {
            std::vector<std::vector<Letter>> rows = rows_from_json(j.at(key));
            PaddedShiftedTableau t = padded_from_rows(std::move(rows));
            check_declared_shape(j.at(key), t.shape, "parse_shifted_pair");
            return t;
        };
        return ShiftedTableauPair{half("t1"), half("t2")};
    } catch (const njson::exception& e) {
        throw domain_error(std::string("parse_shifted_pair: ") + e.what());
    }
}

std::string kostka_csv(const Partition& shape, bool shifted, bool p_variant) {
    std::string out = "shape,evaluation,count\n";
    for (const Partition& theta : partitions_of(weight(shape) / 2)) {
        long long count = shifted ? kostka2_shifted(shape, theta, p_variant)
                                  : kostka2(shape, theta);
        out += '"' + format_partition(shape) + "\",\"" + format_partition(theta) + "\"," +
               std::to_string(count) + '\n';
    }
    return out;
}

} // namespace sdt
