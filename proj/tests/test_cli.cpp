#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

std::string cli_path() {
    const char* p = std::getenv("RKATO_CLI");
    REQUIRE(p != nullptr);
    return p;
}

int run(const std::string& args, const std::string& stdout_file = "/tmp/rkato_cli_out.txt") {
    std::string cmd = "\"" + cli_path() + "\" " + args + " > " + stdout_file +
                      " 2> /tmp/rkato_cli_err.txt";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run("") == 2);
    CHECK(run("constants --no-such-flag") == 2);
    CHECK(run("constants --format yaml") == 2);
    CHECK(run("fields --catalog /no/such/file.cat") == 2);
}

TEST_CASE("help exits cleanly") {
    CHECK(run("--help") == 0);
    CHECK(run("verify --help") == 0);
}

TEST_CASE("constants subcommand passes and writes reports") {
    const char* out = "/tmp/rkato_cli_constants.json";
    CHECK(run(std::string("constants --n-max 2 --n-max-complex 1 --samples 3 --out ") + out +
              " --format json --print md") == 0);
    std::string json = slurp(out);
    CHECK(json.front() == '{');
    CHECK(json.find("\"command\": \"constants\"") != std::string::npos);
    std::string md = slurp("/tmp/rkato_cli_out.txt");
    CHECK(md.find("| check |") != std::string::npos);
    std::remove(out);
}

TEST_CASE("quiet mode suppresses the stdout report") {
    CHECK(run("constants --n-max 1 --no-complex --samples 2 --quiet") == 0);
    CHECK(slurp("/tmp/rkato_cli_out.txt").empty());
}

TEST_CASE("identical invocations produce identical json") {
    const char* a = "/tmp/rkato_cli_a.json";
    const char* b = "/tmp/rkato_cli_b.json";
    std::string args = "verify --n-max 1 --no-complex --samples 3 --no-spot --quiet --format json";
    CHECK(run(args + " --out " + a) == 0);
    CHECK(run(args + " --out " + b) == 0);
    std::string ja = slurp(a), jb = slurp(b);
    CHECK(!ja.empty());
    CHECK(ja == jb);
    std::remove(a);
    std::remove(b);
}

TEST_CASE("a perturbed verify run exits with 1") {
    CHECK(run("verify --n-max 1 --no-complex --samples 2 --no-spot --perturb 1e-3 --quiet") == 1);
}

TEST_CASE("fields subcommand reads a catalog file") {
    const char* cat = "/tmp/rkato_cli_fields.cat";
    {
        std::ofstream f(cat);
        f << "cb | const_blade | n=2; blade=1 | parallel | box=1; pts=3\n";
    }
    CHECK(run(std::string("fields --catalog ") + cat + " --print csv") == 0);
    std::string csv = slurp("/tmp/rkato_cli_out.txt");
    CHECK(csv.find("parallel") != std::string::npos);
    std::remove(cat);
}
