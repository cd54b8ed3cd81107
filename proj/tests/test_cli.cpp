#include "sdt/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "sdt/bijection.hpp"
#include "sdt/io.hpp"

using namespace sdt;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    RunResult r;
    r.code = cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace

TEST_CASE("core and quotient print the worked examples") {
    RunResult r = run_cli({"core", "5,4,3,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "3,2,1\n");

    r = run_cli({"quotient", "14,10,8,4,4,2,1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "(5,2,1,1) | (7,4,2)\n");

    r = run_cli({"core", "5,4,3,1,1", "--json"});
    CHECK(r.out == "{\"core\":[3,2,1]}\n");
    r = run_cli({"quotient", "14,10,8,4,4,2,1,1", "--json"});
    CHECK(r.out == "{\"mu\":[5,2,1,1],\"nu\":[7,4,2]}\n");

    r = run_cli({"core", "-"});
    CHECK(r.out == "-\n");
}

TEST_CASE("gamma and ungamma run over stdin and files") {
    std::string paving = to_json(fx::dt_85555());
    RunResult r = run_cli({"gamma"}, paving);
    CHECK(r.code == 0);
    CHECK(r.out == to_json(TableauPair{fx::dt_85555_half1(), fx::dt_85555_half2()}));

    RunResult back = run_cli({"ungamma", "-"}, r.out);
    CHECK(back.code == 0);
    CHECK(back.out == paving);

    r = run_cli({"gamma"}, to_json(fx::shdt_85555()));
    CHECK(r.code == 1); // X labels are not a domino tableau
    CHECK(r.err.find("error:") == 0);

    r = run_cli({"gamma", "/no/such/file.json"});
    CHECK(r.code == 1);
}

TEST_CASE("split and merge handle the shifted worked example") {
    std::string paving = to_json(fx::shdt_85555());
    RunResult r = run_cli({"split"}, paving);
    CHECK(r.code == 0);
    CHECK(r.out == to_json(ShiftedTableauPair{fx::shdt_85555_half1(), fx::shdt_85555_half2()}));

    RunResult back = run_cli({"merge"}, r.out);
    CHECK(back.code == 0);
    CHECK(back.out == paving);

    // A pair outside F is a domain failure, not a crash.
    r = run_cli({"merge"}, to_json(fx::fpair_out()));
    CHECK(r.code == 1);
}

TEST_CASE("enumerate streams one JSON object per line") {
    RunResult r = run_cli({"enumerate", "--kind", "young", "--shape", "1,1", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"shape\":[1,1],\"rows\":[[\"1\"],[\"2\"]]}\n"
                   "{\"shape\":[1,1],\"rows\":[[\"1\"],[\"3\"]]}\n"
                   "{\"shape\":[1,1],\"rows\":[[\"2\"],[\"3\"]]}\n");

    r = run_cli({"enumerate", "--kind", "paving", "--shape", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"dominoes\"") != std::string::npos);

    // Shifted streams honour the p variant: no primes on the diagonal.
    RunResult q = run_cli({"enumerate", "--kind", "shifted", "--shape", "2", "--n", "2"});
    RunResult p = run_cli({"enumerate", "--kind", "shifted", "--shape", "2", "--n", "2",
                           "--p-variant"});
    CHECK(q.code == 0);
    CHECK(p.code == 0);
    CHECK(q.out.size() > p.out.size());

    r = run_cli({"enumerate", "--kind", "domino", "--shape", "2,1"});
    CHECK(r.code == 1); // not pavable

    r = run_cli({"enumerate", "--kind", "nope", "--shape", "2,2"});
    CHECK(r.code == 2);
}

TEST_CASE("gf prints polynomials in both formats") {
    RunResult r = run_cli({"gf", "--kind", "domino", "--shape", "2,2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 * x1^2 + 2 * x1 x2 + 1 * x2^2\n");

    r = run_cli({"gf", "--kind", "schur", "--shape", "1", "--n", "2", "--json"});
    CHECK(r.out == "{\"n\":2,\"terms\":[{\"e\":[1,0],\"c\":1},{\"e\":[0,1],\"c\":1}]}\n");

    r = run_cli({"gf", "--kind", "qschur", "--shape", "1", "--n", "2"});
    CHECK(r.out == "2 * x1 + 2 * x2\n");
    r = run_cli({"gf", "--kind", "pschur", "--shape", "1", "--n", "2"});
    CHECK(r.out == "1 * x1 + 1 * x2\n");

    RunResult q = run_cli({"gf", "--kind", "shdt", "--shape", "2,2", "--n", "2"});
    RunResult p = run_cli({"gf", "--kind", "shdt", "--shape", "2,2", "--n", "2", "--p-variant"});
    CHECK(q.out == "4 * x1^2 + 8 * x1 x2 + 4 * x2^2\n");
    CHECK(p.out == "1 * x1^2 + 2 * x1 x2 + 1 * x2^2\n");

    r = run_cli({"gf", "--kind", "qschur", "--shape", "2,2", "--n", "2"});
    CHECK(r.code == 1); // not a strict partition
}

TEST_CASE("kostka emits CSV or JSON lines") {
    RunResult r = run_cli({"kostka", "--shape", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "shape,evaluation,count\n\"2,2\",\"2\",1\n\"2,2\",\"1,1\",2\n");

    r = run_cli({"kostka", "--shape", "2,2", "--shifted", "--json"});
    CHECK(r.out == "{\"shape\":[2,2],\"evaluation\":[2],\"count\":4}\n"
                   "{\"shape\":[2,2],\"evaluation\":[1,1],\"count\":8}\n");

    r = run_cli({"kostka", "--shape", "2,1"});
    CHECK(r.code == 1);
}

TEST_CASE("equiv decides all four systems") {
    RunResult r = run_cli({"equiv", "--system", "plactic", "1 3 2", "3 1 2"});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");

    r = run_cli({"equiv", "--system", "shifted", "1 3 2", "3 1 2"});
    CHECK(r.out == "false\n");
    CHECK(r.code == 0); // "not equivalent" is an answer, not a failure

    r = run_cli({"equiv", "--system", "shifted", "1 2 4 3", "1 4 2 3", "--json"});
    CHECK(r.out == "{\"equivalent\":true}\n");

    r = run_cli({"equiv", "--system", "super", "2^1 1^2", "1^2 2^1"});
    CHECK(r.out == "true\n");
    r = run_cli({"equiv", "--system", "super-shifted", "1^1 1^1", "1^1 1^2"});
    CHECK(r.out == "false\n");

    // Words beyond the closure cap fail loudly; --cap lifts the limit.
    std::string w1 = "2 1 1 1 1 1 1 1 1 1 1", w2 = "1 2 1 1 1 1 1 1 1 1 1";
    r = run_cli({"equiv", "--system", "plactic", w1, w2});
    CHECK(r.code == 1);
    CHECK(r.err.find("cap") != std::string::npos);
    r = run_cli({"equiv", "--system", "plactic", "--cap", "11", w1, w2});
    CHECK(r.code == 0);
    CHECK(r.out == "true\n");

    r = run_cli({"equiv", "--system", "plactic", "1 x", "1 2"});
    CHECK(r.code == 1);
}

TEST_CASE("verify reports identities") {
    RunResult r = run_cli({"verify", "--kind", "qschur", "--shape", "2,2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "OK\n");

    r = run_cli({"verify", "--kind", "schur", "--shape", "2,2", "--n", "2", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ok\":true") != std::string::npos);
    CHECK(r.out.find("\"kind\":\"schur\"") != std::string::npos);

    r = run_cli({"verify", "--kind", "schur", "--all", "--max-weight", "4", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "- OK\n2 OK\n1,1 OK\n4 OK\n3,1 OK\n2,2 OK\n2,1,1 OK\n1,1,1,1 OK\n");

    r = run_cli({"verify", "--kind", "pschur", "--all", "--max-weight", "4", "--n", "2",
                 "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ok\":false") == std::string::npos);

    r = run_cli({"verify", "--kind", "qschur", "--shape", "2,1", "--n", "2"});
    CHECK(r.code == 1); // not ShPP-admissible

    r = run_cli({"verify", "--kind", "schur"});
    CHECK(r.code == 2);
    r = run_cli({"verify", "--kind", "schur", "--all"});
    CHECK(r.code == 2);
    r = run_cli({"verify", "--kind", "schur", "--all", "--shape", "2,2"});
    CHECK(r.code == 2);
}

TEST_CASE("readings covers grids and pavings") {
    RunResult r = run_cli({"readings"}, to_text(fx::young_4311()));
    CHECK(r.code == 0);
    CHECK(r.out ==
          "reading: 5 4 2 2 3 1 1 1 2\n"
          "diagonals: 5 / 4 / 2 / 1 2 / 1 3 / 1 / 2\n"
          "evaluation: (3,3,1,1,1)\n");

    r = run_cli({"readings"}, to_json(fx::dt_85544()));
    CHECK(r.out ==
          "columns: 5 3 1 3 1 6 4 3 2 4 5 2 3\n"
          "diagonals: 5 / 3 3 6 / 1 1 4 4 / 2 3 5 / 2 / 3\n"
          "evaluation: (2,2,4,2,2,1)\n");

    r = run_cli({"readings", "--json"}, to_json(fx::shdt_85555()));
    CHECK(r.out ==
          "{\"columns\":[\"1\",\"1\",\"4\",\"2'\",\"2'\",\"2'\",\"5\",\"5'\",\"2\",\"3\"],"
          "\"diagonals\":[[\"1\",\"1\",\"2'\",\"4\",\"5\"],[\"2'\",\"2'\",\"5'\"],[\"2\"],"
          "[\"3\"]],\"evaluation\":[2,4,1,1,2]}\n");

    // The shifted text form reads back and excludes nothing: same words as
    // the padded JSON form of the same tableau.
    RunResult a = run_cli({"readings"}, to_text(fx::shyt_7431()));
    RunResult b = run_cli({"readings"}, to_json(fx::shyt_7431()));
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("config file supplies default n and cap") {
    std::string path = "test_cli_config.tmp";
    {
        std::ofstream f(path);
        f << "# defaults for the toolkit\n n = 2 \ncap=11\n";
    }
    RunResult r = run_cli({"--config", path, "gf", "--kind", "schur", "--shape", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 * x1 + 1 * x2\n");

    r = run_cli({"--config", path, "equiv", "--system", "plactic",
                 "1 1 1 1 1 1 1 1 1 1 1", "1 1 1"});
    CHECK(r.code == 0); // cap 11 from the config

    // Explicit flags beat the config.
    r = run_cli({"--config", path, "gf", "--kind", "schur", "--shape", "1", "--n", "1"});
    CHECK(r.out == "1 * x1\n");

    {
        std::ofstream f(path);
        f << "colour = 3\n";
    }
    r = run_cli({"--config", path, "core", "2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("unknown key") != std::string::npos);

    {
        std::ofstream f(path);
        f << "n two\n";
    }
    r = run_cli({"--config", path, "core", "2"});
    CHECK(r.code == 1);

    r = run_cli({"--config", "/no/such/config", "core", "2"});
    CHECK(r.code == 1);
    std::remove(path.c_str());
}

TEST_CASE("usage errors exit 2 and help exits 0") {
    RunResult r = run_cli({});
    CHECK(r.code == 2);

    r = run_cli({"nonsense"});
    CHECK(r.code == 2);

    r = run_cli({"core"});
    CHECK(r.code == 2);

    r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);

    r = run_cli({"gf", "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--kind") != std::string::npos);
}
