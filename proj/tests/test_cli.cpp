#include "hdx/complex_io.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
    const char* p = std::getenv("HDX_CLI");
    return p ? p : "";
}

int run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("hdx_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string p(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("command-line interface") {
    if (cli_path().empty()) {
        MESSAGE("HDX_CLI not set; skipping CLI tests");
        return;
    }
    TempDir tmp;

    SUBCASE("gen-graph writes an 8-line cycle and K2") {
        REQUIRE(run("gen-graph --type cycle --n 8 -o " + tmp.p("c8.txt")) == 0);
        std::istringstream lines(slurp(tmp.p("c8.txt")));
        int count = 0;
        std::string line;
        while (std::getline(lines, line))
            if (!line.empty()) ++count;
        CHECK(count == 8);
        REQUIRE(run("gen-graph --type complete --n 2 -o " + tmp.p("k2.txt")) == 0);
        CHECK(slurp(tmp.p("k2.txt")) == "0 1\n");
    }

    SUBCASE("gen-graph random-regular is deterministic per seed") {
        REQUIRE(run("gen-graph --type random-regular --n 10 --d 3 --seed 7 -o " + tmp.p("a.txt")) == 0);
        REQUIRE(run("gen-graph --type random-regular --n 10 --d 3 --seed 7 -o " + tmp.p("b.txt")) == 0);
        CHECK(slurp(tmp.p("a.txt")) == slurp(tmp.p("b.txt")));
    }

    SUBCASE("build, spectrum, sweep, mix, compare pipeline") {
        REQUIRE(run("gen-graph --type cycle --n 4 -o " + tmp.p("c4.txt")) == 0);
        REQUIRE(run("build --graph " + tmp.p("c4.txt") + " --H 2 --s 4 --kind z -o " + tmp.p("z.json")) == 0);
        REQUIRE(run("build --graph " + tmp.p("c4.txt") + " --H 2 --s 4 --kind q -o " + tmp.p("q.json")) == 0);

        hdx::Complex z = hdx::load_complex(tmp.p("z.json"));
        hdx::Complex q = hdx::load_complex(tmp.p("q.json"));
        CHECK(z.level(2).size() < q.level(2).size());  // Z(H) is a strict subset of Q(H)

        REQUIRE(run("spectrum --complex " + tmp.p("z.json") + " --level 0 --walk updown -o " +
                    tmp.p("spec.csv")) == 0);
        std::string spec = slurp(tmp.p("spec.csv"));
        CHECK(spec.find("level,walk,i,eigenvalue") != std::string::npos);
        // first data row carries the leading eigenvalue 1
        auto at = spec.find("\n0,updown,0,");
        REQUIRE(at != std::string::npos);
        double omega1 = std::stod(spec.substr(at + 12));
        CHECK(std::fabs(omega1 - 1.0) <= 1e-9);

        REQUIRE(run("local-sweep --complex " + tmp.p("z.json") + " --level 0 -o " + tmp.p("sweep.json")) ==
                0);
        CHECK(slurp(tmp.p("sweep.json")).find("\"nu\"") != std::string::npos);

        REQUIRE(run("mix --complex " + tmp.p("z.json") + " --level 1 --steps 20 -o " + tmp.p("mix.csv")) ==
                0);
        std::string mix = slurp(tmp.p("mix.csv"));
        CHECK(mix.find("step,tv") != std::string::npos);

        REQUIRE(run("compare --graph " + tmp.p("c4.txt") + " --H 2 --s 4 -o " + tmp.p("cmp.csv")) == 0);
        std::string cmp = slurp(tmp.p("cmp.csv"));
        CHECK(cmp.find("k,nu2_updown_z,nu2_updown_q") != std::string::npos);
        // last row (k = H-1): gap(Z) exceeds gap(Q)
        std::istringstream rows(cmp);
        std::string row, last;
        while (std::getline(rows, row))
            if (!row.empty() && row[0] == '1') last = row;
        REQUIRE_FALSE(last.empty());
        std::replace(last.begin(), last.end(), ',', ' ');
        std::istringstream fields(last);
        int k;
        double gap_z, gap_q;
        fields >> k >> gap_z >> gap_q;
        CHECK(k == 1);
        CHECK(gap_z > gap_q);
    }

    SUBCASE("verify exits 0 on a passing instance and writes the report") {
        REQUIRE(run("gen-graph --type cycle --n 4 -o " + tmp.p("c4.txt")) == 0);
        CHECK(run("verify --graph " + tmp.p("c4.txt") + " --H 2 --s 4 -o " + tmp.p("report.json")) == 0);
        std::string report = slurp(tmp.p("report.json"));
        CHECK(report.find("\"all_pass\": true") != std::string::npos);
        CHECK(report.find("\"config\"") != std::string::npos);
    }

    SUBCASE("oversize build and bad inputs fail with nonzero exit") {
        REQUIRE(run("gen-graph --type cycle --n 4 -o " + tmp.p("c4.txt")) == 0);
        CHECK(run("build --graph " + tmp.p("c4.txt") +
                  " --H 2 --s 4 --max-top-faces 10 -o " + tmp.p("never.json")) != 0);
        CHECK(run("build --graph " + tmp.p("missing.txt") + " --H 2 --s 4 -o " + tmp.p("x.json")) != 0);
        CHECK(run("verify --graph " + tmp.p("c4.txt") + " --H 3 --s 5") != 0);  // hypotheses violated
    }
}
