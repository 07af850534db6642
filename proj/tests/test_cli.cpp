#include <doctest.h>

#include "frieze/json_io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(FRIEZE_CLI_PATH) + " " + args;
    cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer;
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

const char* kDisc14126 =
    "'{\"n\":5,\"arcs\":[{\"bridging\":5},{\"peripheral\":[5,5]},{\"peripheral\":[5,2]},"
    "{\"peripheral\":[2,5]},{\"peripheral\":[2,4]}]}'";

} // namespace

TEST_CASE("frieze gen renders the basic frieze") {
    RunResult r = run("frieze gen '[2]' --rows 6 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n1\n2\n3\n4\n5\n");

    RunResult ascii = run("frieze gen '[2]' --rows 4 --columns 3 --format ascii-diamond");
    CHECK(ascii.exit_code == 0);
    CHECK(ascii.out == "0  0  0\n  1  1  1\n    2  2  2\n      3  3  3\n");
}

TEST_CASE("frieze gen emits the expected second row") {
    RunResult r = run("frieze gen '[1,4,1,2,6]' --rows 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("3,3,1,11,5") != std::string::npos);
}

TEST_CASE("invalid quiddity input exits with code 2 and the violating index") {
    RunResult r = run("frieze gen '[1,1,1]' --rows 6", true);
    CHECK(r.exit_code == 2);
    frieze::json err = frieze::json::parse(r.out);
    CHECK(err.contains("i"));
    CHECK(err.contains("j"));
}

TEST_CASE("frieze entry") {
    RunResult r = run("frieze entry '[1,5,4,1,3]' -i 1 -j 5");
    CHECK(r.exit_code == 0);
    frieze::json j = frieze::json::parse(r.out);
    CHECK(j.at("value") == "18");
}

TEST_CASE("ops subcommands") {
    RunResult glue = run("ops nglue '[2,2,2]' -k 2");
    CHECK(glue.exit_code == 0);
    CHECK(frieze::json::parse(glue.out) == frieze::json::parse("[2,3,1,3]"));

    RunResult cut = run("ops ncut '[2,3,1,3]' -k 3");
    CHECK(frieze::json::parse(cut.out) == frieze::json::parse("[2,2,2]"));

    RunResult window = run("ops glue '{\"values\":[2,2,2,2],\"offset\":0}' -k 1");
    frieze::json w = frieze::json::parse(window.out);
    CHECK(w.at("values") == frieze::json::parse("[\"2\",\"3\",\"1\",\"3\",\"2\"]"));

    RunResult bad_cut = run("ops ncut '[2,3,1,3]' -k 1", true);
    CHECK(bad_cut.exit_code == 2);
}

TEST_CASE("tri quiddity and the byte-identical round trip") {
    RunResult quiddity = run(std::string("tri quiddity ") + kDisc14126);
    CHECK(quiddity.exit_code == 0);
    CHECK(frieze::json::parse(quiddity.out) == frieze::json::parse("[1,4,1,2,6]"));

    RunResult direct = run(std::string("tri frieze ") + kDisc14126 + " --rows 6");
    std::string trimmed = quiddity.out;
    trimmed.erase(trimmed.find_last_not_of('\n') + 1);
    RunResult via_quiddity = run("frieze gen '" + trimmed + "' --rows 6");
    CHECK(direct.exit_code == 0);
    CHECK(direct.out == via_quiddity.out);
}

TEST_CASE("malformed and invalid triangulations") {
    RunResult malformed = run("tri quiddity '{\"n\":5,\"arcs\":'", true);
    CHECK(malformed.exit_code == 2);

    // Crossing arcs: not a triangulation.
    RunResult invalid = run(
        "tri quiddity '{\"n\":4,\"arcs\":[{\"bridging\":1},{\"bridging\":2},"
        "{\"bridging\":3},{\"peripheral\":[2,4]}]}'",
        true);
    CHECK(invalid.exit_code == 3);
}

TEST_CASE("tri enum streams deterministic NDJSON") {
    RunResult r = run("tri enum 2");
    CHECK(r.exit_code == 0);
    std::vector<std::string> lines;
    size_t start = 0;
    while (start < r.out.size()) {
        size_t end = r.out.find('\n', start);
        lines.push_back(r.out.substr(start, end - start));
        start = end + 1;
    }
    CHECK(lines.size() == 3);
    int star = 0;
    for (const std::string& line : lines) {
        frieze::json j = frieze::json::parse(line);
        CHECK(j.at("n") == 2);
        if (j.at("quiddity") == frieze::json::parse("[2,2]")) ++star;
    }
    CHECK(star == 1);

    CHECK(run("tri enum 2").out == r.out);
    CHECK(run("tri enum 2 --jobs 3").out == r.out);

    RunResult too_big = run("tri enum 9", true);
    CHECK(too_big.exit_code == 4);
}

TEST_CASE("tri glue on the smallest star") {
    RunResult r = run("tri glue '{\"n\":1,\"arcs\":[{\"bridging\":1}]}' -i 1");
    CHECK(r.exit_code == 0);
    RunResult q = run("tri quiddity '" + [&] {
        std::string s = r.out;
        s.erase(s.find_last_not_of('\n') + 1);
        return s;
    }() + "'");
    CHECK(frieze::json::parse(q.out) == frieze::json::parse("[4,1]"));
}

TEST_CASE("strip phi, psi and domains") {
    RunResult strip = run(std::string("strip phi ") + kDisc14126);
    CHECK(strip.exit_code == 0);
    std::string strip_json = strip.out;
    strip_json.erase(strip_json.find_last_not_of('\n') + 1);

    RunResult back = run("strip psi '" + strip_json + "'");
    frieze::json disc14126 = frieze::json::parse(std::string(kDisc14126).substr(1, std::string(kDisc14126).size() - 2));
    CHECK(frieze::json::parse(back.out) == frieze::disc_to_json(frieze::disc_from_json(disc14126)));

    RunResult domains = run("strip domains '" + strip_json + "'");
    frieze::json d = frieze::json::parse(domains.out);
    CHECK(d.at("count") == 1);
}

TEST_CASE("match count against the reference table") {
    RunResult strip = run(
        "strip phi '{\"n\":5,\"arcs\":[{\"bridging\":1},{\"bridging\":2},"
        "{\"peripheral\":[3,5]},{\"peripheral\":[3,1]},{\"peripheral\":[2,1]}]}'");
    std::string strip_json = strip.out;
    strip_json.erase(strip_json.find_last_not_of('\n') + 1);

    RunResult c = run("match count '" + strip_json + "' --from 1:0 --to 3:0");
    CHECK(frieze::json::parse(c.out).at("count") == "29");

    RunResult c2 = run("match count '" + strip_json + "' --from 5:0 --to 3:1");
    CHECK(frieze::json::parse(c2.out).at("count") == "50");

    RunResult list = run("match list '" + strip_json + "' --from 4:0 --to 5:0");
    frieze::json l = frieze::json::parse(list.out);
    CHECK(l.at("count") == "1");
    CHECK(l.at("matchings").size() == 1);

    RunResult verify = run("match verify '" + strip_json + "' --depth 7");
    CHECK(verify.exit_code == 0);
    CHECK(frieze::json::parse(verify.out).at("status") == "pass");

    RunResult wide = run("match count '" + strip_json + "' --from 1:0 --to 1:4", true);
    CHECK(wide.exit_code == 4);
}

TEST_CASE("label subcommands") {
    RunResult strip = run(std::string("strip phi ") + kDisc14126);
    std::string strip_json = strip.out;
    strip_json.erase(strip_json.find_last_not_of('\n') + 1);

    RunResult labels = run("label run '" + strip_json + "' --start 2:0 --rows 8");
    frieze::json j = frieze::json::parse(labels.out);
    CHECK(j.at("upper") == "2");
    CHECK(j.at("right") == frieze::json::parse(
                               "[\"0\",\"1\",\"1\",\"1\",\"5\",\"4\",\"11\",\"7\",\"3\"]"));
    frieze::json left = j.at("left");
    CHECK(left[0] == "0");
    CHECK(left[4] == "9");

    RunResult e = run("label entry '" + strip_json + "' -i 3 -j 7");
    CHECK(frieze::json::parse(e.out).at("value") == "11");

    RunResult diffs = run("label diffs '" + strip_json + "'");
    frieze::json d = frieze::json::parse(diffs.out);
    CHECK(d.at("bridging") == 1);
    CHECK(d.at("puncture_labels") ==
          frieze::json::parse("[\"3\",\"2\",\"5\",\"3\",\"1\"]"));
}

TEST_CASE("environment window cap applies to enumeration") {
    RunResult strip = run(std::string("strip phi ") + kDisc14126);
    std::string strip_json = strip.out;
    strip_json.erase(strip_json.find_last_not_of('\n') + 1);

    std::string cmd = "FRIEZE_LIMIT_WINDOW=2 " + std::string(FRIEZE_CLI_PATH) + " match list '" +
                      strip_json + "' --from 1:0 --to 3:0 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buffer;
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 4);

    // Without the cap the same window enumerates fine.
    RunResult ok = run("match list '" + strip_json + "' --from 1:0 --to 3:0");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("labels from the puncture") {
    RunResult strip = run(std::string("strip phi ") + kDisc14126);
    std::string strip_json = strip.out;
    strip_json.erase(strip_json.find_last_not_of('\n') + 1);

    RunResult labels = run("label run '" + strip_json + "' --start 0:0 --rows 5");
    CHECK(labels.exit_code == 0);
    frieze::json j = frieze::json::parse(labels.out);
    CHECK(j.at("upper") == "0");
    // Right of position 1: the periodic puncture labels (3,2,5,3,1).
    CHECK(j.at("right") == frieze::json::parse("[\"3\",\"2\",\"5\",\"3\",\"1\",\"3\"]"));
}

TEST_CASE("consolidated verify") {
    RunResult all = run(std::string("frieze verify ") + kDisc14126 + " --depth 6");
    CHECK(all.exit_code == 0);
    frieze::json j = frieze::json::parse(all.out);
    for (const char* name : {"unimodular", "arithmetic", "matchings", "labels", "bijection"}) {
        CHECK(j.at("checks").at(name).at("status") == "pass");
    }

    RunResult skipped = run("frieze verify '[3]' --checks matchings --depth 6");
    CHECK(skipped.exit_code == 0);
    frieze::json s = frieze::json::parse(skipped.out);
    CHECK(s.at("checks").at("matchings").at("status") == "skipped");
    CHECK(s.at("checks").at("matchings").at("reason") ==
          "no disc triangulation realizes this quiddity");

    // Unimodularity itself still holds for the complete frieze, while the
    // arithmetic property fails: it is an annulus-type frieze.
    RunResult uni = run("frieze verify '[3]' --checks unimodular --depth 10");
    CHECK(uni.exit_code == 0);
    RunResult arith = run("frieze verify '[3]' --checks arithmetic --depth 10");
    CHECK(arith.exit_code == 1);
    CHECK(frieze::json::parse(arith.out).at("checks").at("arithmetic").at("status") == "fail");

    RunResult invalid = run(
        "frieze verify '{\"n\":4,\"arcs\":[{\"bridging\":1},{\"bridging\":2},"
        "{\"bridging\":3},{\"peripheral\":[2,4]}]}'",
        true);
    CHECK(invalid.exit_code == 3);
}
