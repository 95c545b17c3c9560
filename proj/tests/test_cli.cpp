#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

// End-to-end tests against the installed binary; QLAMBERT_CLI_PATH is
// injected by the build.

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "",
              bool merge_stderr = false) {
    std::string cmd;
    if (!env.empty())
        cmd += env + " ";
    cmd += QLAMBERT_CLI_PATH;
    if (!args.empty())
        cmd += " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";

    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    const int rc = pclose(p);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (const char ch : s)
        if (ch == '\n')
            ++n;
    return n;
}

} // namespace

TEST_CASE("cli: verify a single identity, json report") {
    const RunResult r =
        run("verify --id thm-base --order 128 --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("id") == "thm-base");
    REQUIRE(j.at("order") == 128);
    REQUIRE(j.at("pass") == true);
    REQUIRE(j.at("first_mismatch").is_null());
    REQUIRE(j.at("terms").get<std::uint64_t>() > 0);
    REQUIRE(j.at("elapsed_ms").is_number());
}

TEST_CASE("cli: verify output is reproducible byte for byte") {
    const std::string args = "verify --id cor-e2 --order 96 --format json";
    auto j1 = nlohmann::json::parse(run(args).out);
    auto j2 = nlohmann::json::parse(run(args).out);
    j1.erase("elapsed_ms");
    j2.erase("elapsed_ms");
    REQUIRE(j1.dump() == j2.dump());
}

TEST_CASE("cli: unknown identity id") {
    REQUIRE(run("verify --id not-a-thing --order 16").status == 2);
}

TEST_CASE("cli: order below 2 is a configuration error") {
    REQUIRE(run("verify --id thm-base --order 1").status == 2);
}

TEST_CASE("cli: planted defect flips the exit code and is localized") {
    const RunResult plain =
        run("verify --id thm-base --order 64 --corrupt 10");
    REQUIRE(plain.status == 1);
    REQUIRE(plain.out.find("FAIL") != std::string::npos);
    REQUIRE(plain.out.find("q^10") != std::string::npos);
    REQUIRE(plain.out.find("lhs=7 rhs=6") != std::string::npos);

    const RunResult js =
        run("verify --id thm-base --order 64 --corrupt 3 --format json");
    REQUIRE(js.status == 1);
    const auto j = nlohmann::json::parse(js.out);
    REQUIRE(j.at("pass") == false);
    REQUIRE(j.at("first_mismatch").at("e") == 3);
    REQUIRE(j.at("first_mismatch").at("lhs") == "1");
    REQUIRE(j.at("first_mismatch").at("rhs") == "0");
}

TEST_CASE("cli: verify all at a small order") {
    const RunResult r = run("verify --all --order 16 --format csv");
    REQUIRE(r.status == 0);
    REQUIRE(count_lines(r.out) == 201); // header + one row per identity
    REQUIRE(r.out.rfind("id,order,pass", 0) == 0);
    REQUIRE(r.out.find(",false,") == std::string::npos);

    const RunResult plain = run("verify --all --order 16");
    REQUIRE(plain.status == 0);
    REQUIRE(plain.out.find("200/200 identities pass") != std::string::npos);
}

TEST_CASE("cli: coeff extraction") {
    const RunResult r = run("coeff --series base-double --e 4");
    REQUIRE(r.status == 0);
    REQUIRE(r.out == "3\n");

    const RunResult f5 =
        run("coeff --series f-series --param a=2 --e 5 --order 64");
    REQUIRE(f5.status == 0);
    REQUIRE(f5.out == "1\n");

    const RunResult f3 =
        run("coeff --series f-series --param a=2 --e 3 --order 64");
    REQUIRE(f3.status == 0);
    REQUIRE(f3.out == "0\n");
}

TEST_CASE("cli: coeff beyond the truncation order is a precision error") {
    REQUIRE(run("coeff --series base-double --e 300 --order 256").status == 2);
}

TEST_CASE("cli: sigma tables") {
    const RunResult csv =
        run("table --series sigma1 --limit 12 --format csv");
    REQUIRE(csv.status == 0);
    REQUIRE(csv.out ==
            "n,sigma\n1,1\n2,3\n3,4\n4,7\n5,6\n6,12\n7,8\n8,15\n9,13\n"
            "10,18\n11,12\n12,28\n");

    const RunResult js = run("table --series sigma2 --limit 5 --format json");
    REQUIRE(js.status == 0);
    const auto j = nlohmann::json::parse(js.out);
    REQUIRE(j.size() == 5);
    REQUIRE(j[0].at("n") == 1);
    REQUIRE(j[0].at("c") == "1");
    REQUIRE(j[4].at("n") == 5);
    REQUIRE(j[4].at("c") == "26");

    const RunResult plain = run("table --series sigma0 --limit 4");
    REQUIRE(plain.status == 0);
    REQUIRE(plain.out.find("sigma_0(4) = 3") != std::string::npos);
}

TEST_CASE("cli: series tables") {
    const RunResult csv =
        run("table --series base-double --order 8 --format csv");
    REQUIRE(csv.status == 0);
    REQUIRE(csv.out ==
            "exponent,coefficient\n0,0\n1,0\n2,1\n3,0\n4,3\n5,0\n6,4\n7,0\n");

    const RunResult js =
        run("table --series e2 --order 6 --format json");
    REQUIRE(js.status == 0);
    const auto j = nlohmann::json::parse(js.out);
    REQUIRE(j.size() == 6);
    REQUIRE(j[0].at("c") == "1");
    REQUIRE(j[2].at("c") == "-24");

    REQUIRE(run("table --series not-a-series --order 8").status == 2);
}

TEST_CASE("cli: list") {
    const RunResult plain = run("list");
    REQUIRE(plain.status == 0);
    REQUIRE(plain.out.find("thm-base") != std::string::npos);
    REQUIRE(plain.out.find("telescope-r12s12") != std::string::npos);

    const RunResult js = run("list --format json");
    REQUIRE(js.status == 0);
    const auto j = nlohmann::json::parse(js.out);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 200);
    REQUIRE(j[0].contains("id"));
    REQUIRE(j[0].contains("mode"));
    REQUIRE(j[0].contains("statement"));

    const RunResult csv = run("list --format csv");
    REQUIRE(csv.status == 0);
    REQUIRE(count_lines(csv.out) == 201);
}

TEST_CASE("cli: scan tabulates without asserting") {
    const RunResult csv = run("scan --k 1 --order 100 --format csv");
    REQUIRE(csv.status == 0);
    std::istringstream in(csv.out);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(line == "n,e,sigma,candidate,diff");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        REQUIRE(line.substr(line.rfind(',') + 1) == "0"); // k=1 matches sigma
    }
    REQUIRE(rows == 49);

    const RunResult js = run("scan --k 2 --order 30 --format json");
    REQUIRE(js.status == 0);
    const auto j = nlohmann::json::parse(js.out);
    REQUIRE(j.size() == 14);
    REQUIRE(j[0].at("n") == 1);
    REQUIRE(j[0].at("e") == 2);
    REQUIRE(j[0].at("diff") == "0"); // sigma_2(1) = 1 = candidate

    const RunResult plain = run("scan --k 2 --order 20");
    REQUIRE(plain.status == 0);
    REQUIRE(plain.out.find("asserts nothing") != std::string::npos);
}

TEST_CASE("cli: parameter overrides") {
    REQUIRE(run("verify --id lem22-r2s3 --param s=4 --order 64").status == 0);
    REQUIRE(run("verify --id lem22-r2s3 --param z=4 --order 64").status == 2);
    REQUIRE(run("verify --id lem22-r2s3 --param s --order 64").status == 2);
    REQUIRE(run("verify --id lem22-r2s3 --param s=x --order 64").status == 2);
    REQUIRE(run("coeff --series lem22-lhs --param r=2 --param s=3 --e 9 "
                "--order 32")
                .out == "1\n");
}

TEST_CASE("cli: environment supplies the default order") {
    const RunResult r = run("verify --id thm-base --format json",
                            "QLAMBERT_ORDER=64");
    REQUIRE(r.status == 0);
    REQUIRE(nlohmann::json::parse(r.out).at("order") == 64);

    // explicit flag beats the environment
    const RunResult f = run("verify --id thm-base --order 32 --format json",
                            "QLAMBERT_ORDER=64");
    REQUIRE(nlohmann::json::parse(f.out).at("order") == 32);
}

TEST_CASE("cli: --output writes the report to a file") {
    const std::string path = "cli_out_test.txt";
    std::remove(path.c_str());
    const RunResult r =
        run("verify --id thm-base --order 32 --output " + path);
    REQUIRE(r.status == 0);
    REQUIRE(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    REQUIRE(ss.str().find("PASS") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli: dyadic builders warn when the order is out of range") {
    const RunResult r = run(
        "coeff --series dyadic-double --param a=5 --e 4 --order 16", "",
        /*merge_stderr=*/true);
    REQUIRE(r.status == 0);
    REQUIRE(r.out.find("warning") != std::string::npos);

    const RunResult v = run("verify --id thm-main-a5 --order 16", "",
                            /*merge_stderr=*/true);
    REQUIRE(v.status == 0); // nothing checkable below the first block
    REQUIRE(v.out.find("warning") != std::string::npos);
}

TEST_CASE("cli: usage errors") {
    REQUIRE(run("").status == 2);
    REQUIRE(run("verify").status == 2);         // no --id, no --all
    REQUIRE(run("frobnicate").status == 2);     // unknown subcommand
    REQUIRE(run("coeff --series base-double").status == 2); // missing --e
    REQUIRE(run("verify --id thm-base --format yaml").status == 2);
    REQUIRE(run("scan --k 0 --order 16").status == 2);
}
