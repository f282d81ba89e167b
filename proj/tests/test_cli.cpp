#include <unistd.h>

#include <string>

#include "doctest.h"
#include "run_tool.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kTool = FPCENSUS_CLI;

struct Dir {
    fs::path path;
    explicit Dir(const std::string& name) : path(tool::scratch(name)) {}
    ~Dir() { fs::remove_all(path); }
    std::string operator/(const std::string& f) const { return (path / f).string(); }
};

int run(const std::string& args) { return tool::run(kTool, args); }

}  // namespace

TEST_CASE("graphs writes a counted file and is deterministic") {
    Dir d("graphs");
    REQUIRE(run("graphs 3 -o " + d / "g3a") == 0);
    REQUIRE(run("graphs 3 > " + d / "g3b") == 0);
    const std::string text = tool::read(d / "g3a");
    CHECK(text == tool::read(d / "g3b"));
    const auto ls = tool::lines(text);
    REQUIRE(ls.size() == 5);
    CHECK(ls.back() == "count 4");
    REQUIRE(run("graphs 1 -o " + d / "g1") == 0);
    CHECK(tool::read(d / "g1") == "1: 0-0 0-0\ncount 1\n");
    CHECK(run("graphs 0 2> /dev/null") == 2);
    CHECK(run("graphs 14 2> /dev/null") == 2);
    CHECK(run("frobnicate 2> /dev/null") != 0);
}

TEST_CASE("filter reports and keeps") {
    Dir d("filter");
    REQUIRE(run("graphs 6 -o " + d / "g6") == 0);
    REQUIRE(run("filter " + d / "g6" + " -o " + d / "kept" + " -r " + d / "report.csv") == 0);
    const auto rows = tool::lines(tool::read(d / "report.csv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == "n,total,old,straybigon,square,mountains,new_union,all_union,kept");
    CHECK(rows[1] == "6,97,58,56,5,2,60,74,23");
    CHECK(tool::lines(tool::read(d / "kept")).back() == "count 23");

    tool::write(d / "empty", "");
    REQUIRE(run("filter " + d / "empty" + " -r " + d / "empty.csv") == 0);
    CHECK(tool::read(d / "empty.csv") == "n,total,old,straybigon,square,mountains,new_union,all_union,kept\n");

    tool::write(d / "bad", "1: 0-0 0-0\n2: 0-1 0-1 0-1 0-9\n");
    CHECK(run("filter " + d / "bad" + " 2> " + d / "err") == 3);
    CHECK(tool::read(d / "err").find("line 2") != std::string::npos);
    tool::write(d / "badcount", "1: 0-0 0-0\ncount 5\n");
    CHECK(run("filter " + d / "badcount" + " 2> /dev/null") == 3);
    CHECK(run("filter " + d / "missing" + " 2> /dev/null") == 1);
}

TEST_CASE("census output and parameter errors") {
    Dir d("census");
    CHECK(run("census 2 2> /dev/null") == 2);
    CHECK(run("census 3 --orientable --non-orientable 2> /dev/null") == 2);
    CHECK(run("census 3 --partition 3/3 2> /dev/null") == 2);
    CHECK(run("census 3 --partition x 2> /dev/null") == 2);
    CHECK(run("census 3 --jobs 0 2> /dev/null") == 2);
    CHECK(run("census 3 --track-links sideways 2> /dev/null") != 0);

    REQUIRE(run("census 2 --relaxed --no-graph-filter -o " + d / "r2") == 0);
    CHECK(tool::lines(tool::read(d / "r2")).back() == "count 17");

    REQUIRE(run("census 3 -o " + d / "a" + " --stats " + d / "a.tsv") == 0);
    REQUIRE(run("census 3 --no-graph-filter -o " + d / "b") == 0);
    REQUIRE(run("census 3 --jobs 3 --seed-order 9 -o " + d / "c") == 0);
    const std::string a = tool::read(d / "a");
    CHECK(a == tool::read(d / "b"));
    CHECK(a == tool::read(d / "c"));
    CHECK(tool::lines(a).back() == "count 7");

    const auto stats = tool::lines(tool::read(d / "a.tsv"));
    REQUIRE(stats.size() >= 3);
    CHECK(stats[0].rfind("graph\tnodes\t", 0) == 0);
    CHECK(stats[stats.size() - 2].rfind("total\t", 0) == 0);
}

TEST_CASE("stats and merge aggregate partitions") {
    Dir d("merge");
    REQUIRE(run("census 4 -o " + d / "all" + " --stats " + d / "all.tsv") == 0);
    REQUIRE(run("census 4 --partition 0/2 -o " + d / "p0" + " --stats " + d / "p0.tsv") == 0);
    REQUIRE(run("census 4 --partition 1/2 -o " + d / "p1" + " --stats " + d / "p1.tsv") == 0);
    REQUIRE(run("merge " + d / "p0" + " " + d / "p1" + " -o " + d / "merged") == 0);
    CHECK(tool::read(d / "merged") == tool::read(d / "all"));

    REQUIRE(run("stats " + d / "all.tsv" + " -o " + d / "one") == 0);
    REQUIRE(run("stats " + d / "p0.tsv" + " " + d / "p1.tsv" + " -o " + d / "two") == 0);
    auto total_row = [](const std::string& text) {
        for (const std::string& l : tool::lines(text))
            if (l.rfind("total\t", 0) == 0) return l;
        return std::string();
    };
    const std::string whole = total_row(tool::read(d / "one"));
    CHECK_FALSE(whole.empty());
    CHECK(whole == total_row(tool::read(d / "all.tsv")));
    CHECK(whole == total_row(tool::read(d / "two")));

    tool::write(d / "bad.tsv", "graph\tnodes\n");
    CHECK(run("stats " + d / "bad.tsv" + " 2> /dev/null") == 3);
    tool::write(d / "bad.sigs", "abc\ncount 4\n");
    CHECK(run("merge " + d / "bad.sigs" + " 2> /dev/null") == 3);
}

TEST_CASE("checkpoints resume and reject corruption") {
    Dir d("ckpt");
    REQUIRE(run("census 4 -o " + d / "ref") == 0);
    const std::string ck = d / "run.ckpt";
    CHECK(run("census 4 --checkpoint " + ck + " --stop-after 3 -o " + d / "out" + " 2> /dev/null") == 128 + 9);
    REQUIRE(run("census 4 --checkpoint " + ck + " -o " + d / "out") == 0);
    CHECK(tool::read(d / "out") == tool::read(d / "ref"));
    // A finished checkpoint replays without searching.
    REQUIRE(run("census 4 --checkpoint " + ck + " -o " + d / "again") == 0);
    CHECK(tool::read(d / "again") == tool::read(d / "ref"));

    // Different parameters against the same log.
    CHECK(run("census 4 --orientable --checkpoint " + ck + " -o " + d / "x" + " 2> /dev/null") == 4);

    std::string text = tool::read(ck);
    const auto pos = text.find("\nunit ");
    REQUIRE(pos != std::string::npos);
    text[pos + 8] = text[pos + 8] == '9' ? '8' : '9';
    tool::write(d / "corrupt.ckpt", text);
    CHECK(run("census 4 --checkpoint " + d / "corrupt.ckpt" + " -o " + d / "x" + " 2> /dev/null") == 4);
}
