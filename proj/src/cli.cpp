#include "sdt/cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "sdt/batch.hpp"
#include "sdt/bijection.hpp"
#include "sdt/io.hpp"
#include "sdt/monoids.hpp"

namespace sdt::cli {

namespace {

using njson = nlohmann::ordered_json;

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        require(file.good(), "cannot open " + path);
        buf << file.rdbuf();
    }
    return buf.str();
}

std::string trimmed(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    size_t b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

// key = value lines, one per line, '#' starts a comment; keys: n, cap.
std::map<std::string, int> load_config(const std::string& path) {
    std::ifstream file(path);
    require(file.good(), "config: cannot open " + path);
    std::map<std::string, int> cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        std::string where = "config: line " + std::to_string(lineno);
        line = trimmed(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        size_t eq = line.find('=');
        require(eq != std::string::npos, where + " is not key = value");
        std::string key = trimmed(line.substr(0, eq));
        std::string val = trimmed(line.substr(eq + 1));
        require(key == "n" || key == "cap", where + ": unknown key '" + key + "'");
        int parsed = 0;
        auto [end, ec] = std::from_chars(val.data(), val.data() + val.size(), parsed);
        require(ec == std::errc{} && end == val.data() + val.size() && parsed >= 0,
                where + ": bad value '" + val + "'");
        cfg[key] = parsed;
    }
    return cfg;
}

int resolve(int flag, const std::map<std::string, int>& cfg, const std::string& key,
            int fallback) {
    if (flag >= 0) return flag;
    auto it = cfg.find(key);
    return it == cfg.end() ? fallback : it->second;
}

njson letters_json(const std::vector<Letter>& word) {
    njson out = njson::array();
    for (const Letter& l : word) out.push_back(to_string(l));
    return out;
}

njson groups_json(const std::vector<std::vector<Letter>>& groups) {
    njson out = njson::array();
    for (const auto& g : groups) out.push_back(letters_json(g));
    return out;
}

std::string join_letters(const std::vector<Letter>& word) {
    std::string out;
    for (const Letter& l : word) {
        if (!out.empty()) out += ' ';
        out += to_string(l);
    }
    return out;
}

std::string join_groups(const std::vector<std::vector<Letter>>& groups) {
    std::string out;
    for (const auto& g : groups) {
        if (!out.empty()) out += " / ";
        out += join_letters(g);
    }
    return out;
}

njson poly_json(const SparsePolynomial& p) { return njson::parse(to_json(p)); }

njson report_json(const IdentityReport& r) {
    njson j;
    j["shape"] = r.shape;
    j["kind"] = to_string(r.kind);
    j["n"] = r.n;
    j["ok"] = r.ok;
    j["lhs"] = poly_json(r.lhs);
    j["rhs"] = poly_json(r.rhs);
    j["diff"] = poly_json(r.diff);
    return j;
}

RelationSystem parse_system(const std::string& name) {
    if (name == "plactic") return RelationSystem::plactic;
    if (name == "shifted") return RelationSystem::shifted_plactic;
    if (name == "super") return RelationSystem::super_plactic;
    if (name == "super-shifted") return RelationSystem::super_shifted_plactic;
    throw domain_error("equiv: unknown system '" + name + "'");
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"shifted domino tableaux toolkit", "sdt"};
    app.require_subcommand(1);

    struct {
        std::string config;
        std::string partition;
        std::string file = "-";
        std::string kind;
        std::string shape;
        std::string system;
        std::string w1, w2;
        int n = -1;
        int cap = -1;
        int max_weight = -1;
        bool json = false;
        bool p_variant = false;
        bool shifted = false;
        bool all = false;
    } o;

    app.add_option("--config", o.config, "key=value file with default n/cap");

    auto* core = app.add_subcommand("core", "2-core of a partition");
    core->add_option("partition", o.partition, "comma-separated parts, - for empty")
        ->required();
    core->add_flag("--json", o.json, "JSON output");

    auto* quotient = app.add_subcommand("quotient", "2-quotient pair of a partition");
    quotient->add_option("partition", o.partition, "comma-separated parts, - for empty")
        ->required();
    quotient->add_flag("--json", o.json, "JSON output");

    auto* gamma_cmd = app.add_subcommand("gamma", "split a domino tableau into its pair");
    gamma_cmd->add_option("file", o.file, "paving JSON, - for stdin");

    auto* ungamma = app.add_subcommand("ungamma", "rebuild a domino tableau from its pair");
    ungamma->add_option("file", o.file, "pair JSON, - for stdin");

    auto* split = app.add_subcommand("split", "split a shifted domino tableau into its pair");
    split->add_option("file", o.file, "paving JSON, - for stdin");

    auto* merge = app.add_subcommand("merge", "rebuild a shifted domino tableau from its pair");
    merge->add_option("file", o.file, "pair JSON, - for stdin");

    auto* enumerate = app.add_subcommand("enumerate", "stream fillings, one JSON line each");
    enumerate->add_option("--kind", o.kind, "what to enumerate")
        ->required()
        ->check(CLI::IsMember({"young", "shifted", "paving", "domino", "shdt"}));
    enumerate->add_option("--shape", o.shape, "shape to fill")->required();
    enumerate->add_option("--n", o.n, "largest letter (default 3)");
    enumerate->add_flag("--p-variant", o.p_variant, "P-variant prime rules");

    auto* gf = app.add_subcommand("gf", "generating function of a shape");
    gf->add_option("--kind", o.kind, "which generating function")
        ->required()
        ->check(CLI::IsMember({"schur", "qschur", "pschur", "domino", "shdt"}));
    gf->add_option("--shape", o.shape, "shape")->required();
    gf->add_option("--n", o.n, "number of variables (default 3)");
    gf->add_flag("--p-variant", o.p_variant, "P-variant labels (shdt only)");
    gf->add_flag("--json", o.json, "JSON output");

    auto* kostka = app.add_subcommand("kostka", "weight-multiplicity table of a shape");
    kostka->add_option("--shape", o.shape, "shape")->required();
    kostka->add_flag("--shifted", o.shifted, "count shifted domino tableaux");
    kostka->add_flag("--p-variant", o.p_variant, "P-variant labels (with --shifted)");
    kostka->add_flag("--json", o.json, "JSON lines instead of CSV");

    auto* equiv = app.add_subcommand("equiv", "decide equivalence of two words");
    equiv->add_option("--system", o.system, "relation system")
        ->required()
        ->check(CLI::IsMember({"plactic", "shifted", "super", "super-shifted"}));
    equiv->add_option("word1", o.w1, "first word, tokens space-separated")->required();
    equiv->add_option("word2", o.w2, "second word")->required();
    equiv->add_option("--cap", o.cap, "closure length cap (default 10)");
    equiv->add_flag("--json", o.json, "JSON output");

    auto* verify = app.add_subcommand("verify", "check a product identity by enumeration");
    verify->add_option("--kind", o.kind, "identity kind")
        ->required()
        ->check(CLI::IsMember({"schur", "qschur", "pschur"}));
    auto* verify_shape = verify->add_option("--shape", o.shape, "single shape to check");
    auto* verify_all_flag = verify->add_flag("--all", o.all, "sweep every admissible shape");
    verify->add_option("--max-weight", o.max_weight, "weight bound for --all")
        ->needs(verify_all_flag);
    verify_all_flag->excludes(verify_shape);
    verify->add_option("--n", o.n, "number of variables (default 3)");
    verify->add_flag("--json", o.json, "JSON output");

    auto* readings = app.add_subcommand("readings", "reading words and evaluation");
    readings->add_option("file", o.file, "tableau or paving, - for stdin");
    readings->add_flag("--json", o.json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::map<std::string, int> cfg;
        if (!o.config.empty()) cfg = load_config(o.config);
        int n = resolve(o.n, cfg, "n", 3);
        int cap = resolve(o.cap, cfg, "cap", default_closure_cap);

        if (core->parsed()) {
            Partition c = two_core(parse_partition(o.partition));
            if (o.json) {
                njson j;
                j["core"] = c;
                out << j.dump() << '\n';
            } else {
                out << format_partition(c) << '\n';
            }
            return 0;
        }

        if (quotient->parsed()) {
            QuotientPair q = two_quotient(parse_partition(o.partition));
            if (o.json) {
                njson j;
                j["mu"] = q.mu;
                j["nu"] = q.nu;
                out << j.dump() << '\n';
            } else {
                out << to_string(q) << '\n';
            }
            return 0;
        }

        if (gamma_cmd->parsed()) {
            out << to_json(gamma(parse_paving(slurp(o.file, in))));
            return 0;
        }
        if (ungamma->parsed()) {
            out << to_json(gamma_inverse(parse_pair(slurp(o.file, in))));
            return 0;
        }
        if (split->parsed()) {
            out << to_json(shifted_split(parse_paving(slurp(o.file, in))));
            return 0;
        }
        if (merge->parsed()) {
            out << to_json(shifted_merge(parse_shifted_pair(slurp(o.file, in))));
            return 0;
        }

        if (enumerate->parsed()) {
            Partition shape = parse_partition(o.shape);
            if (o.kind == "young") {
                enumerate_young(shape, n, [&](const YoungTableau& t) { out << to_json(t); });
            } else if (o.kind == "shifted") {
                enumerate_shifted(shape, n, o.p_variant,
                                  [&](const ShiftedYoungTableau& t) { out << to_json(t); });
            } else if (o.kind == "paving") {
                enumerate_pavings(shape, [&](const Paving& p) { out << to_json(p); });
            } else if (o.kind == "domino") {
                enumerate_domino_tableaux(shape, n,
                                          [&](const Paving& p) { out << to_json(p); });
            } else {
                enumerate_shdt(shape, n, o.p_variant,
                               [&](const Paving& p) { out << to_json(p); });
            }
            return 0;
        }

        if (gf->parsed()) {
            Partition shape = parse_partition(o.shape);
            SparsePolynomial g = o.kind == "schur"    ? schur(shape, n)
                                 : o.kind == "qschur" ? qschur(shape, n)
                                 : o.kind == "pschur" ? pschur(shape, n)
                                 : o.kind == "domino" ? domino_gf_batch(shape, n)
                                                      : shdt_gf_batch(shape, n, o.p_variant);
            if (o.json)
                out << to_json(g);
            else
                out << format_polynomial(g) << '\n';
            return 0;
        }

        if (kostka->parsed()) {
            Partition shape = parse_partition(o.shape);
            if (!o.json) {
                out << kostka_csv(shape, o.shifted, o.p_variant);
                return 0;
            }
            for (const Partition& theta : partitions_of(weight(shape) / 2)) {
                long long count = o.shifted ? kostka2_shifted(shape, theta, o.p_variant)
                                            : kostka2(shape, theta);
                njson j;
                j["shape"] = shape;
                j["evaluation"] = theta;
                j["count"] = count;
                out << j.dump() << '\n';
            }
            return 0;
        }

        if (equiv->parsed()) {
            RelationSystem system = parse_system(o.system);
            bool plain = system == RelationSystem::plactic ||
                         system == RelationSystem::shifted_plactic;
            bool eq = plain ? equivalent(parse_word(o.w1), parse_word(o.w2), system, cap)
                            : equivalent(parse_super_word(o.w1), parse_super_word(o.w2),
                                         system, cap);
            if (o.json) {
                njson j;
                j["equivalent"] = eq;
                out << j.dump() << '\n';
            } else {
                out << (eq ? "true" : "false") << '\n';
            }
            return 0;
        }

        if (verify->parsed()) {
            IdentityKind kind = parse_identity_kind(o.kind);
            if (o.all) {
                if (o.max_weight < 0) {
                    err << "verify --all needs --max-weight\n";
                    return 2;
                }
                bool all_ok = true;
                for (const IdentityReport& r : verify_all(kind, o.max_weight, n, true)) {
                    all_ok = all_ok && r.ok;
                    if (o.json)
                        out << report_json(r).dump() << '\n';
                    else
                        out << format_partition(r.shape) << (r.ok ? " OK" : " FAIL") << '\n';
                }
                return all_ok ? 0 : 1;
            }
            if (o.shape.empty() && verify_shape->count() == 0) {
                err << "verify needs --shape or --all\n";
                return 2;
            }
            IdentityReport r = verify_product_identity(parse_partition(o.shape), n, kind);
            if (o.json) {
                out << report_json(r).dump() << '\n';
            } else if (r.ok) {
                out << "OK\n";
            } else {
                out << "FAIL diff = " << format_polynomial(r.diff) << '\n';
            }
            return r.ok ? 0 : 1;
        }

        if (readings->parsed()) {
            AnyTableau t = parse_tableau(slurp(o.file, in));
            if (t.kind == TableauKind::paving) {
                auto columns = column_reading(t.paving);
                auto diagonals = diagonal_reading_dominoes(t.paving);
                Evaluation eval = evaluation(t.paving);
                if (o.json) {
                    njson j;
                    j["columns"] = letters_json(columns);
                    j["diagonals"] = groups_json(diagonals);
                    j["evaluation"] = eval;
                    out << j.dump() << '\n';
                } else {
                    out << "columns: " << join_letters(columns) << '\n';
                    out << "diagonals: " << join_groups(diagonals) << '\n';
                    out << "evaluation: " << to_string(eval) << '\n';
                }
                return 0;
            }
            CellCollection cells = t.kind == TableauKind::young ? to_collection(t.young)
                                   : t.kind == TableauKind::shifted
                                       ? to_collection(t.shifted)
                                       : to_collection(t.padded);
            auto reading = reading_word(cells);
            auto diagonals = diagonal_blocks(cells);
            Evaluation eval = evaluation(cells);
            if (o.json) {
                njson j;
                j["reading"] = letters_json(reading);
                j["diagonals"] = groups_json(diagonals);
                j["evaluation"] = eval;
                out << j.dump() << '\n';
            } else {
                out << "reading: " << join_letters(reading) << '\n';
                out << "diagonals: " << join_groups(diagonals) << '\n';
                out << "evaluation: " << to_string(eval) << '\n';
            }
            return 0;
        }

        throw internal_error("run: unhandled subcommand");
    } catch (const domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace sdt::cli
