// End-to-end checks against the built binaries: exit codes, report fragments,
// and the byte-identity of JSON documents under reparse + reserialize.
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& binary, const std::string& args) {
    std::string cmd = binary + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

RunResult cli(const std::string& args) { return run(CLI_BIN, args); }

std::string fix(const std::string& rel) { return std::string(FIXTURE_DIR) + "/" + rel; }

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("verdict reports the cylinder table with exit code 0") {
    RunResult r = cli("verdict --degree 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "no Ga-action"));
    CHECK(contains(r.out, "citation:"));

    RunResult r4 = cli("verdict --degree 4");
    CHECK(r4.code == 0);
    CHECK(contains(r4.out, "Ga-action on the affine cone (an anticanonical polar cylinder"));

    CHECK(cli("verdict --degree 12").code == 2);
    CHECK(cli("verdict --degree 0").code == 2);
}

TEST_CASE("lct prints the blow-up tree and the threshold") {
    RunResult r = cli("lct --germ \"y^2 - x^3\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "type: cusp"));
    CHECK(contains(r.out, "node   m   M    k"));
    CHECK(contains(r.out, "lct: 5/6"));

    RunResult tac = cli("lct --germ \"y^2 - x^4\"");
    CHECK(tac.code == 0);
    CHECK(contains(tac.out, "type: tacnode"));
    CHECK(contains(tac.out, "lct: 3/4"));

    RunResult weighted = cli("lct --germ \"y^2 - x^3\" --coeff 2");
    CHECK(contains(weighted.out, "threshold of 2 * germ: 5/12"));

    CHECK(cli("lct --germ \"y^2 - x^$\"").code == 2);
    CHECK(cli("lct --germ \"x + 1\"").code == 2);
}

TEST_CASE("classify identifies the Fermat Eckardt point") {
    RunResult r = cli("classify --surface " + fix("surfaces/fermat_zeta.surface") +
                      " --point \"1,-1,0,0\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "tangent section: case a"));
    CHECK(contains(r.out, "Eckardt point: yes"));
    CHECK(contains(r.out, "alpha at the point: 2/3"));
    CHECK(contains(r.out, "relative to this field"));
    CHECK(contains(r.out, "citation:"));
}

TEST_CASE("classify rejects a singular point with an input error") {
    CHECK(cli("classify --surface " + fix("surfaces/nodal_section.surface") +
              " --point \"0,0,1,0\"")
              .code == 0); // smooth point of the surface: fine
    CHECK(cli("classify --surface " + fix("surfaces/fermat_zeta.surface") +
              " --point \"1,1,1,1\"")
              .code == 2); // not on the surface
}

TEST_CASE("lines lists the field-rational lines") {
    RunResult r = cli("lines --surface " + fix("surfaces/fermat_zeta.surface") +
                      " --point \"1,-1,0,0\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "lines through (1 : -1 : 0 : 0): 3"));

    RunResult q = cli("lines --surface " + fix("surfaces/fermat_q.surface") +
                      " --point \"1,-1,0,0\"");
    CHECK(contains(q.out, "lines through (1 : -1 : 0 : 0): 1"));
}

TEST_CASE("alpha covers every route") {
    RunResult surf = cli("alpha --surface " + fix("surfaces/fermat_zeta.surface") +
                         " --point \"1,-1,0,0\"");
    CHECK(surf.code == 0);
    CHECK(contains(surf.out, "alpha: 2/3 [computed-profile]"));

    RunResult model = cli("alpha --model " + fix("models/dp4_tangency.model") +
                          " --point \"1/2, 1/2\"");
    CHECK(model.code == 0);
    CHECK(contains(model.out, "row: degree 4, on a (-1)-curve"));

    RunResult near = cli("alpha --model " + fix("models/dp4_tangency.model") +
                         " --base 0 --toward \"1, 1\"");
    CHECK(near.code == 0);
    CHECK(contains(near.out, "alpha:"));

    RunResult inv = cli("alpha --model " + fix("models/dp6.model") + " --invariant");
    CHECK(inv.code == 0);
    CHECK(contains(inv.out, "alpha invariant: 1/2 (exact"));

    RunResult quartic = cli("alpha --quartic " + fix("quartics/contact.surface") +
                            " --point \"0,0,1\"");
    CHECK(quartic.code == 0);
    CHECK(contains(quartic.out, "row: degree 2, contact 3"));

    RunResult declared = cli("alpha --degree 9");
    CHECK(declared.code == 0);
    CHECK(contains(declared.out, "alpha: 1/3 [declared-profile]"));

    CHECK(cli("alpha --degree 5 --eckardt").code == 2);
    CHECK(cli("alpha --degree 8").code == 2); // needs --dp8-model
    CHECK(cli("alpha").code == 2);
    CHECK(cli("alpha --surface x --model y").code == 2);
}

TEST_CASE("pair-check separates refuted from consistent claims by exit code") {
    std::string divisor = fix("divisors/remark_dp4_local.divisor");
    RunResult p = cli("pair-check --divisor " + divisor + " --point P --adjunction E1");
    CHECK(p.code == 0);
    CHECK(contains(p.out, "check [multiplicity]: consistent"));
    CHECK(contains(p.out, "check [adjunction]: consistent"));
    CHECK(contains(p.out, "components with coefficient > 1: Ct"));

    RunResult q = cli("pair-check --divisor " + divisor + " --point Q");
    CHECK(q.code == 1);
    CHECK(contains(q.out, "check [multiplicity]: REFUTED"));
    CHECK(contains(q.out, "result: the claim is refuted"));

    CHECK(cli("pair-check --divisor " + divisor + " --point P --adjunction Ct").code ==
          2); // coefficient 3/2 > 1: the inequality does not apply
    CHECK(cli("pair-check --divisor " + divisor + " --point P --adjunction NoSuch").code == 2);
}

TEST_CASE("descent run ends in a contradiction or a step limit") {
    RunResult seed = cli("descent run --state " + fix("descent/seed.state") + " --m-oracle " +
                         fix("descent/seed.oracle") + " --steps 8");
    CHECK(seed.code == 1);
    CHECK(contains(seed.out, "terminal: contradiction"));
    CHECK(contains(seed.out, "certificate:"));
    CHECK(contains(seed.out, "discreteness floor: 7/5"));

    RunResult limit = cli("descent run --state " + fix("descent/two_step.state") +
                          " --m-oracle " + fix("descent/two_step.oracle") + " --steps 2");
    CHECK(limit.code == 0);
    CHECK(contains(limit.out, "terminal: step-limit after 2 steps"));
}

TEST_CASE("fixtures replays the corpus with exit code 0") {
    RunResult r = cli("fixtures --dir " + std::string(FIXTURE_DIR) + " --json");
    CHECK(r.code == 0);
    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["schema"] == 1);
    CHECK(doc["total"] == doc["passed"]);
    CHECK(doc["total"].get<int>() >= 40);
}

TEST_CASE("JSON output is byte-identical under reparse and reserialize") {
    std::vector<std::string> invocations = {
        "classify --surface " + fix("surfaces/fermat_zeta.surface") + " --point \"1,-1,0,0\"",
        "alpha --model " + fix("models/dp4_tangency.model") + " --point \"1/2, 1/2\"",
        "alpha --degree 8 --dp8-model quadric",
        "lct --germ \"y^2 - x^3\" --coeff 2",
        "lines --surface " + fix("surfaces/fermat_q.surface") + " --point \"1,-1,0,0\"",
        "pair-check --divisor " + fix("divisors/remark_dp4_local.divisor") + " --point Q",
        "descent run --state " + fix("descent/seed.state") + " --m-oracle " +
            fix("descent/seed.oracle") + " --steps 8",
        "verdict --degree 3",
    };
    for (const auto& inv : invocations) {
        CAPTURE(inv);
        RunResult r = cli(inv + " --json");
        CHECK((r.code == 0 || r.code == 1));
        auto doc = nlohmann::ordered_json::parse(r.out);
        CHECK(doc["schema"] == 1);
        CHECK(doc.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("identical invocations produce identical bytes") {
    std::string inv = "classify --surface " + fix("surfaces/fermat_zeta.surface") +
                      " --point \"1,-1,0,0\" --json";
    RunResult a = cli(inv);
    RunResult b = cli(inv);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("witness scan reproduces the pinned census") {
    RunResult r = run(SCAN_BIN, "--surface " + fix("surfaces/fermat_zeta.surface") +
                                    " --height 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "census: a=6 e=3 f=36"));
    CHECK(contains(r.out, "rows printed: 45"));

    RunResult filtered = run(SCAN_BIN, "--surface " + fix("surfaces/nodal_section.surface") +
                                           " --height 2 --case b");
    CHECK(filtered.code == 0);
    CHECK(contains(filtered.out, "tacnode | 3/4 | 3/4"));
}
