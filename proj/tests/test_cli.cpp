// Drives the installed binary end to end: documents in, exit codes and
// stdout back. MOCONAD_CLI_PATH is injected by the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "moconad/json_io.hpp"
#include "moconad/wreath.hpp"

using namespace moconad;
using namespace tu;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

const fs::path& workDir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("moconad-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::string& args) {
    static int calls = 0;
    fs::path o = workDir() / ("stdout" + std::to_string(calls));
    fs::path e = workDir() / ("stderr" + std::to_string(calls));
    ++calls;
    std::string cmd = std::string(MOCONAD_CLI_PATH) + " " + args + " >" +
                      o.string() + " 2>" + e.string();
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(o), slurp(e)};
}

std::string writeDoc(const std::string& name, json doc) {
    fs::path p = workDir() / name;
    std::ofstream(p) << doc.dump(2) << "\n";
    return p.string();
}

json docOf(const Transduction& t) {
    json j = toJson(t);
    j["kind"] = "transduction";
    return j;
}

// prefix lists with a right-zero product reproduce their input
Transduction identityStage() {
    SemigroupTable rightZero{syms({"a", "b"}), {0, 1, 0, 1}};
    Transduction t;
    t.algebra = algebraFromSemigroup(listInstance(Functor::PrefixList), rightZero);
    t.inputAlphabet = syms({"a", "b"});
    t.outputAlphabet = syms({"a", "b"});
    t.h = {{S("a"), S("a")}, {S("b"), S("b")}};
    t.lambda = {{S("a"), S("a")}, {S("b"), S("b")}};
    return t;
}

Transduction xorPointedStage() {
    SemigroupTable xorT{ints({0, 1}), {0, 1, 1, 0}};
    Transduction t;
    t.algebra = pointedAlgebraFromSemigroup(xorT);
    t.inputAlphabet = ints({0, 1});
    t.outputAlphabet = ints({0, 1});
    t.h = {{I(0), I(0)}, {I(1), I(1)}};
    t.lambda = {{I(0), I(0)}, {I(1), I(1)}};
    return t;
}

}  // namespace

TEST_CASE("run prints transduction outputs") {
    std::string spec = writeDoc("first_a_to_c.json", docOf(firstAtoC()));
    CliResult r = cli("run --spec " + spec + " --input aab");
    CHECK(r.code == 0);
    CHECK(r.out == "cdd\n");
    CHECK(cli("run --spec " + spec + " --input bba").out == "ddc\n");

    CliResult asJson = cli("run --spec " + spec + " --input b --format json");
    CHECK(asJson.code == 0);
    json doc = json::parse(asJson.out);
    CHECK(doc["kind"] == "word");
    CHECK(doc["letters"] == json::array({json{{"sym", "d"}}}));
}

TEST_CASE("run echoes through the identity stage") {
    std::string spec = writeDoc("identity.json", docOf(identityStage()));
    CHECK(cli("run --spec " + spec + " --input abba").out == "abba\n");
    CHECK(cli("run --spec " + spec + " --input a").out == "a\n");
}

TEST_CASE("run rejects letters outside the alphabet") {
    std::string spec = writeDoc("first_a_to_c.json", docOf(firstAtoC()));
    CliResult r = cli("run --spec " + spec + " --input axb");
    CHECK(r.code == 3);
    CHECK(r.err.find("position 2") != std::string::npos);
}

TEST_CASE("run drives one-pass and unambiguous machines") {
    json mealy = toJson(firstAtoCMachine());
    mealy["kind"] = "mealy";
    std::string mealyPath = writeDoc("mealy.json", mealy);
    CHECK(cli("run --spec " + mealyPath + " --input aab").out == "cdd\n");

    UnambiguousMealy u = transductionToUnambiguous(firstLetterToLast());
    json uj = toJson(u);
    uj["kind"] = "unambiguous-mealy";
    std::string uPath = writeDoc("unambiguous.json", uj);
    CHECK(cli("run --spec " + uPath + " --input bba").out == "aba\n");

    u.transitions.push_back(u.transitions.front());
    u.transitions.back().output ^= 1;
    AmbiguityReport rep = checkUnambiguous(u);
    REQUIRE(rep.verdict == RunCount::MultipleRuns);
    std::string witness;
    for (const Elem& e : rep.witness) witness += e.symbol();
    json ambiguous = toJson(u);
    ambiguous["kind"] = "unambiguous-mealy";
    std::string aPath = writeDoc("ambiguous.json", ambiguous);
    CliResult r = cli("run --spec " + aPath + " --input " + witness);
    CHECK(r.code == 3);
    CHECK(r.err.find("multiple runs") != std::string::npos);
}

TEST_CASE("run accepts file and JSON inputs") {
    std::string spec = writeDoc("first_to_last.json", docOf(firstLetterToLast()));
    std::string word = writeDoc(
        "word.json", json{{"kind", "word"},
                          {"letters", json::array({json{{"sym", "a"}},
                                                   json{{"sym", "b"}}})}});
    CHECK(cli("run --spec " + spec + " --input " + word).out == "bb@1\n");

    CliResult pointed = cli(
        "run --spec " + spec + " --json-input --input "
        "'{\"kind\":\"pointed-word\",\"letters\":[{\"sym\":\"a\"},{\"sym\":\"b\"}],"
        "\"focus\":2}'");
    CHECK(pointed.code == 0);
    CHECK(pointed.out == "bb@2\n");

    Transduction parity = leavesToTreeParity();
    std::string treeSpec = writeDoc("tree_parity.json", docOf(parity));
    MVal in = makeTermValue(
        TreeNode::node("f", {TreeNode::leaf(I(1)),
                             TreeNode::node("g", {TreeNode::leaf(I(1))})}),
        {1});
    json treeDoc = toJson(in);
    treeDoc.erase("functor");
    treeDoc["kind"] = "term";
    std::string treePath = writeDoc("tree_input.json", treeDoc);
    CliResult r = cli("run --spec " + treeSpec + " --input " + treePath);
    CHECK(r.code == 0);
    CHECK(r.out == show(applyTransduction(parity, in)) + "\n");
}

TEST_CASE("run rejects unusable documents and arguments") {
    SemigroupTable xorT{ints({0, 1}), {0, 1, 1, 0}};
    json algebraDoc = toJson(algebraFromSemigroup(prefixInst(), xorT));
    std::string algebraPath = writeDoc("algebra.json", algebraDoc);
    CHECK(cli("run --spec " + algebraPath + " --input ab").code == 2);

    CHECK(cli("run --spec " + (workDir() / "missing.json").string() +
              " --input ab").code == 2);

    std::string broken = writeDoc("broken.json", json());
    {
        std::ofstream(workDir() / "broken.json") << "{not json";
    }
    CHECK(cli("run --spec " + broken + " --input ab").code == 2);

    std::string treeSpec = writeDoc("tree_parity.json", docOf(leavesToTreeParity()));
    CHECK(cli("run --spec " + treeSpec + " --input 01").code == 2);

    CHECK(cli("").code == 2);
    CHECK(cli("run --spec x --input y --format yaml").code == 2);
    CHECK(cli("frobnicate").code == 2);
}

TEST_CASE("compose writes a runnable composite") {
    std::string first = writeDoc("first_a_to_c.json", docOf(firstAtoC()));
    std::string second = writeDoc("alternate_ds.json", docOf(alternateDs()));
    std::string out = (workDir() / "composed.json").string();
    CliResult r = cli("compose --first " + first + " --second " + second +
                      " --out " + out + " --verify-upto 4");
    CHECK(r.code == 0);

    json doc = json::parse(slurp(out));
    CHECK(doc["kind"] == "transduction");
    CHECK(cli("run --spec " + out + " --input aab").out == "cde\n");

    // without --out the document lands on stdout
    CliResult piped = cli("compose --first " + first + " --second " + second);
    CHECK(piped.code == 0);
    CHECK(json::parse(piped.out) == doc);
}

TEST_CASE("compose agrees between the two methods") {
    std::string first = writeDoc("first_a_to_c.json", docOf(firstAtoC()));
    std::string second = writeDoc("alternate_ds.json", docOf(alternateDs()));
    std::string g = (workDir() / "composed_g.json").string();
    std::string c = (workDir() / "composed_c.json").string();
    CHECK(cli("compose --first " + first + " --second " + second + " --out " + g +
              " --method generalized").code == 0);
    CHECK(cli("compose --first " + first + " --second " + second + " --out " + c +
              " --method classical --verify-upto 4").code == 0);

    Transduction tg = transductionFromJson(json::parse(slurp(g)).patch(
        json::parse(R"([{"op":"remove","path":"/kind"}])")));
    Transduction tc = transductionFromJson(json::parse(slurp(c)).patch(
        json::parse(R"([{"op":"remove","path":"/kind"}])")));
    for (const MVal& v : enumerateValues(tg.algebra.inst, tg.inputAlphabet, 4))
        CHECK(applyTransduction(tg, v) == applyTransduction(tc, v));
}

TEST_CASE("compose rejects stages that do not chain") {
    std::string first = writeDoc("first_a_to_c.json", docOf(firstAtoC()));
    std::string second = writeDoc("every_to_last.json", docOf(everyLetterToLast()));
    CliResult r = cli("compose --first " + first + " --second " + second);
    CHECK(r.code == 2);
    CHECK(r.err.find("do not chain") != std::string::npos);

    // classical needs prefix lists on both sides
    CHECK(cli("compose --first " + second + " --second " + second +
              " --method classical").code == 2);
}

TEST_CASE("compose flags composites that fail verification") {
    json doc = docOf(xorPointedStage());
    std::string clean = writeDoc("xor_pointed.json", doc);
    CHECK(cli("compose --first " + clean + " --second " + clean +
              " --verify-upto 3").code == 0);

    // break the two-sided action; the composite no longer tracks the stages
    json& cell = doc["algebra"]["presentation"]["g"][0][0][0];
    cell = (cell.get<int>() + 1) % 2;
    std::string bent = writeDoc("xor_pointed_bent.json", doc);
    CliResult r = cli("compose --first " + bent + " --second " + bent +
                      " --verify-upto 3");
    CHECK(r.code == 4);
    CHECK(r.err.find("verification failed") != std::string::npos);
    CHECK(r.err.find("@") != std::string::npos);
}

TEST_CASE("check-laws reports one entry per law") {
    CliResult r = cli("check-laws --functor prefix-list --bound 2");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["allHold"] == true);
    CHECK(doc["functor"] == "prefix-list");
    CHECK(doc["results"].size() == 23);
    std::set<std::string> names;
    for (const json& entry : doc["results"]) {
        CHECK(entry["holds"] == true);
        CHECK(entry["casesChecked"].get<std::uint64_t>() > 0);
        names.insert(entry["law"].get<std::string>());
    }
    CHECK(names.size() == 23);

    std::string report = (workDir() / "report.json").string();
    CliResult withFile = cli("check-laws --functor suffix-list --bound 2 --report " +
                             report);
    CHECK(withFile.code == 0);
    CHECK(json::parse(slurp(report)) == json::parse(withFile.out));

    CHECK(cli("check-laws --functor ring").code == 2);
}

TEST_CASE("check-laws honours seeds and the environment") {
    CliResult r = cli("check-laws --functor pointed-list --bound 3 --samples 40 "
                      "--seed 11");
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["strategy"]["kind"] == "random");
    CHECK(doc["strategy"]["seed"] == 11);
    CHECK(doc["allHold"] == true);

    CliResult env = cli("check-laws --functor pointed-term --bound 4 --samples 10");
    json envDoc = json::parse(env.out);
    CHECK(envDoc["strategy"]["seed"] == 0);

    fs::path o = workDir() / "env_out";
    std::string cmd = "MOCONAD_SEED=9 " + std::string(MOCONAD_CLI_PATH) +
                      " check-laws --functor suffix-list --bound 2 --samples 5 >" +
                      o.string();
    REQUIRE(std::system(cmd.c_str()) == 0);
    CHECK(json::parse(slurp(o))["strategy"]["seed"] == 9);
}

TEST_CASE("convert round trips machines") {
    json mealy = toJson(firstAtoCMachine());
    mealy["kind"] = "mealy";
    std::string mealyPath = writeDoc("mealy.json", mealy);
    std::string asT = (workDir() / "as_transduction.json").string();
    CHECK(cli("convert --from mealy --to transduction --spec " + mealyPath +
              " --out " + asT + " --verify-upto 5").code == 0);
    CHECK(json::parse(slurp(asT))["kind"] == "transduction");

    std::string back = (workDir() / "back_to_mealy.json").string();
    CHECK(cli("convert --from transduction --to mealy --spec " + asT + " --out " +
              back + " --verify-upto 5").code == 0);
    CHECK(cli("run --spec " + back + " --input aab").out == "cdd\n");

    std::string pointed = writeDoc("first_to_last.json", docOf(firstLetterToLast()));
    std::string asU = (workDir() / "as_unambiguous.json").string();
    CHECK(cli("convert --from transduction --to unambiguous-mealy --spec " +
              pointed + " --out " + asU + " --verify-upto 4").code == 0);
    CHECK(cli("run --spec " + asU + " --input bba").out == "aba\n");
    CHECK(cli("convert --from unambiguous-mealy --to transduction --spec " + asU +
              " --verify-upto 4").code == 0);
}

TEST_CASE("convert rejects ambiguous machines with a witness") {
    UnambiguousMealy u = transductionToUnambiguous(firstLetterToLast());
    u.transitions.push_back(u.transitions.front());
    u.transitions.back().output ^= 1;
    json doc = toJson(u);
    doc["kind"] = "unambiguous-mealy";
    std::string path = writeDoc("ambiguous.json", doc);
    CliResult r = cli("convert --from unambiguous-mealy --to transduction --spec " +
                      path);
    CHECK(r.code == 3);
    CHECK(r.err.find("not unambiguous near word") != std::string::npos);
}

TEST_CASE("convert rejects unsupported directions") {
    json mealy = toJson(firstAtoCMachine());
    mealy["kind"] = "mealy";
    std::string mealyPath = writeDoc("mealy.json", mealy);
    CHECK(cli("convert --from mealy --to unambiguous-mealy --spec " + mealyPath)
              .code == 2);
    CHECK(cli("convert --from transduction --to mealy --spec " + mealyPath).code ==
          2);

    std::string tree = writeDoc("tree_parity.json", docOf(leavesToTreeParity()));
    CHECK(cli("convert --from transduction --to mealy --spec " + tree).code == 2);
}

TEST_CASE("documents come out byte-stable") {
    std::string first = writeDoc("first_a_to_c.json", docOf(firstAtoC()));
    std::string second = writeDoc("alternate_ds.json", docOf(alternateDs()));
    std::string a = (workDir() / "stable_a.json").string();
    std::string b = (workDir() / "stable_b.json").string();
    CHECK(cli("compose --first " + first + " --second " + second + " --out " + a)
              .code == 0);
    CHECK(cli("compose --first " + first + " --second " + second + " --out " + b)
              .code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK_FALSE(slurp(a).empty());
}
