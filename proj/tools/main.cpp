// moconad -- run, compose, convert and law-check transduction specs.
//
// Spec files are JSON documents carrying a "kind" field:
//   semigroup | pointed-presentation | term-automaton    algebras
//   transduction | mealy | unambiguous-mealy             machines
//   word | pointed-word | term                           inputs
// Inline inputs are plain strings over one-character alphabets ("aab");
// anything else goes through --json-input or a file.
//
// Exit codes: 0 ok, 2 usage or malformed document, 3 domain error
// (unmapped letter, ambiguity), 4 a requested verification failed.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "moconad/json_io.hpp"
#include "moconad/wreath.hpp"

using namespace moconad;
using nlohmann::json;

namespace {

// a verification requested via --verify-upto found a mismatch
struct VerifyFailure {
    std::string what;
};

json loadDocument(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void writeDocument(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write " + path);
    out << doc.dump(2) << "\n";
}

void emitDocument(const std::string& path, const json& doc) {
    if (path.empty())
        std::cout << doc.dump(2) << "\n";
    else
        writeDocument(path, doc);
}

std::string kindOf(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc.at("kind").is_string())
        throw SchemaError("document needs a \"kind\" field");
    return doc.at("kind").get<std::string>();
}

json stripKind(json doc) {
    doc.erase("kind");
    return doc;
}

json withKind(json doc, const char* kind) {
    doc["kind"] = kind;
    return doc;
}

Transduction transductionFromDocument(const json& doc) {
    if (kindOf(doc) != "transduction")
        throw SchemaError("expected a transduction document, got " + kindOf(doc));
    return transductionFromJson(stripKind(doc));
}

// ---------------------------------------------------------------- inputs --

// a value document before it is lifted into some machine's shape
struct InputDoc {
    enum class Kind { Word, PointedWord, Term } kind;
    std::vector<Elem> letters;
    std::size_t focus = 1;
    std::optional<MVal> term;
};

InputDoc inputFromJson(const json& doc) {
    InputDoc in;
    if (doc.is_array()) {
        in.kind = InputDoc::Kind::Word;
        for (const json& e : doc) in.letters.push_back(elemFromJson(e));
        return in;
    }
    std::string kind = kindOf(doc);
    if (kind == "word" || kind == "pointed-word") {
        const json& ls = doc.contains("letters") ? doc.at("letters") : json();
        if (!ls.is_array()) throw SchemaError("letters must be an array");
        for (const json& e : ls) in.letters.push_back(elemFromJson(e));
        if (kind == "word") {
            in.kind = InputDoc::Kind::Word;
            return in;
        }
        in.kind = InputDoc::Kind::PointedWord;
        if (!doc.contains("focus") || !doc.at("focus").is_number_integer())
            throw SchemaError("pointed words need an integer focus");
        auto f = doc.at("focus").get<std::int64_t>();
        if (f < 1 || std::size_t(f) > in.letters.size())
            throw SchemaError("focus out of range");
        in.focus = std::size_t(f);
        return in;
    }
    if (kind == "term") {
        in.kind = InputDoc::Kind::Term;
        json v = stripKind(doc);
        v["functor"] = functorName(Functor::PointedTerm);
        in.term = valueFromJson(v);
        return in;
    }
    throw SchemaError("unknown input kind: " + kind);
}

InputDoc parseInput(const std::string& text, bool jsonInput) {
    if (std::filesystem::exists(text)) return inputFromJson(loadDocument(text));
    if (jsonInput) {
        try {
            return inputFromJson(json::parse(text));
        } catch (const json::parse_error& e) {
            throw SchemaError(std::string("--input: ") + e.what());
        }
    }
    InputDoc in;
    in.kind = InputDoc::Kind::Word;
    for (char c : text) in.letters.push_back(Elem::sym(std::string(1, c)));
    return in;
}

MVal liftInput(const InputDoc& in, Functor f) {
    switch (in.kind) {
        case InputDoc::Kind::Word:
            if (f == Functor::PointedTerm)
                throw SchemaError("this machine needs a term input");
            if (f == Functor::PointedList) return underlineAt(in.letters, 1);
            return makeListValue(f, in.letters);
        case InputDoc::Kind::PointedWord:
            if (f != Functor::PointedList)
                throw SchemaError("pointed-word input fits pointed machines only");
            return makePointedValue(in.letters, in.focus);
        case InputDoc::Kind::Term:
            if (f != Functor::PointedTerm)
                throw SchemaError("term input fits term machines only");
            return *in.term;
    }
    throw Error("unreachable");
}

std::vector<Elem> wordOfInput(const InputDoc& in, const char* who) {
    if (in.kind != InputDoc::Kind::Word)
        throw SchemaError(std::string(who) + " runs on plain words");
    return in.letters;
}

// --------------------------------------------------------------- outputs --

bool oneCharSymbols(const std::vector<Elem>& word) {
    for (const Elem& e : word)
        if (e.tag() != Elem::Tag::Symbol || e.symbol().size() != 1) return false;
    return !word.empty();
}

std::string plainWord(const std::vector<Elem>& word) {
    if (!oneCharSymbols(word)) return show(Elem::seq(word));
    std::string out;
    for (const Elem& e : word) out += e.symbol();
    return out;
}

std::string plainValue(const MVal& v) {
    switch (v.functor) {
        case Functor::PrefixList:
        case Functor::SuffixList:
            return plainWord(v.items);
        case Functor::PointedList:
            return plainWord(v.items) + "@" + std::to_string(v.focus);
        case Functor::PointedTerm:
            return show(v);
    }
    throw Error("unreachable");
}

json wordDocument(const std::vector<Elem>& word) {
    json letters = json::array();
    for (const Elem& e : word) letters.push_back(toJson(e));
    return json{{"kind", "word"}, {"letters", letters}};
}

json valueDocument(const MVal& v) {
    json j = toJson(v);
    j.erase("functor");
    switch (v.functor) {
        case Functor::PrefixList:
        case Functor::SuffixList:
            j["letters"] = j.at("items");
            j.erase("items");
            return withKind(std::move(j), "word");
        case Functor::PointedList:
            j["letters"] = j.at("items");
            j.erase("items");
            return withKind(std::move(j), "pointed-word");
        case Functor::PointedTerm:
            return withKind(std::move(j), "term");
    }
    throw Error("unreachable");
}

// ------------------------------------------------------------- commands --

struct RunArgs {
    std::string specPath;
    std::string input;
    std::string format = "plain";
    bool jsonInput = false;
};

int cmdRun(const RunArgs& args) {
    json doc = loadDocument(args.specPath);
    std::string kind = kindOf(doc);
    InputDoc in = parseInput(args.input, args.jsonInput);
    bool asJson = args.format == "json";

    if (kind == "transduction") {
        Transduction t = transductionFromJson(stripKind(doc));
        MVal out = applyTransduction(t, liftInput(in, t.algebra.inst.functor));
        std::cout << (asJson ? valueDocument(out).dump(2) : plainValue(out)) << "\n";
        return 0;
    }
    if (kind == "mealy") {
        MealyMachine m = mealyFromJson(stripKind(doc));
        auto out = runMealy(m, wordOfInput(in, "a one-pass machine"));
        std::cout << (asJson ? wordDocument(out).dump(2) : plainWord(out)) << "\n";
        return 0;
    }
    if (kind == "unambiguous-mealy") {
        UnambiguousMealy m = unambiguousFromJson(stripKind(doc));
        auto out = runUnambiguous(m, wordOfInput(in, "an unambiguous machine"));
        std::cout << (asJson ? wordDocument(out).dump(2) : plainWord(out)) << "\n";
        return 0;
    }
    throw SchemaError("run expects a transduction, mealy or unambiguous-mealy "
                      "document, got " +
                      kind);
}

struct ComposeArgs {
    std::string firstPath;
    std::string secondPath;
    std::string outPath;
    int verifyUpto = 0;
    std::string method = "generalized";
};

int cmdCompose(const ComposeArgs& args) {
    Transduction first = transductionFromDocument(loadDocument(args.firstPath));
    Transduction second = transductionFromDocument(loadDocument(args.secondPath));

    for (const Elem& a : first.outputAlphabet)
        if (!second.h.count(a))
            throw SchemaError("the stages do not chain: " + show(a) +
                              " is not a second-stage input letter");
    if (args.method == "classical" &&
        first.algebra.inst.functor != Functor::PrefixList)
        throw SchemaError("--method classical applies to prefix-list stages only");

    Transduction composed = args.method == "classical"
                                ? classicalWreathCompose(second, first)
                                : composeTransductions(second, first);

    if (args.verifyUpto > 0)
        for (const MVal& v : enumerateValues(first.algebra.inst, first.inputAlphabet,
                                             args.verifyUpto))
            if (applyTransduction(composed, v) != oracleCompose(second, first, v))
                throw VerifyFailure{"composite disagrees with running the stages "
                                    "in sequence on " +
                                    show(v)};

    emitDocument(args.outPath, withKind(toJson(composed), "transduction"));
    return 0;
}

struct CheckLawsArgs {
    std::string functor;
    int bound = 0;
    int domainSize = 2;
    int samples = 0;
    std::uint64_t seed = 0;
    bool seedSet = false;
    std::string alphabet;
    std::string reportPath;
};

int cmdCheckLaws(const CheckLawsArgs& args) {
    auto f = functorFromName(args.functor);
    if (!f) throw SchemaError("unknown functor: " + args.functor);
    MoconadInstance inst = [&] {
        if (*f != Functor::PointedTerm) return listInstance(*f);
        json alpha = json{{"f", 2}, {"g", 1}, {"c", 0}};
        if (!args.alphabet.empty()) {
            try {
                alpha = json::parse(args.alphabet);
            } catch (const json::parse_error& e) {
                throw SchemaError(std::string("--alphabet: ") + e.what());
            }
        }
        return instanceFromJson(
            json{{"functor", functorName(*f)}, {"alphabet", alpha}});
    }();

    std::uint64_t seed = args.seed;
    if (!args.seedSet)
        if (const char* env = std::getenv("MOCONAD_SEED")) seed = std::strtoull(env, nullptr, 10);

    Strategy strategy = ExhaustiveStrategy{args.bound, args.domainSize};
    json strategyDoc{{"kind", "exhaustive"},
                     {"bound", args.bound ? args.bound : defaultBound(inst)},
                     {"domainSize", args.domainSize}};
    if (args.samples > 0) {
        strategy = RandomStrategy{seed, args.samples, args.bound, args.domainSize};
        strategyDoc = json{{"kind", "random"},
                           {"bound", args.bound ? args.bound : defaultBound(inst)},
                           {"domainSize", args.domainSize},
                           {"samples", args.samples},
                           {"seed", seed}};
    }

    std::vector<LawReport> reports = checkAllLaws(inst, Ops::standard(), strategy);
    bool allHold = true;
    json results = json::array();
    for (const LawReport& r : reports) {
        allHold = allHold && r.holds;
        results.push_back(toJson(r));
    }
    json doc{{"functor", functorName(*f)},
             {"strategy", strategyDoc},
             {"results", results},
             {"allHold", allHold}};
    std::cout << doc.dump(2) << "\n";
    if (!args.reportPath.empty()) writeDocument(args.reportPath, doc);
    if (!allHold) {
        for (const LawReport& r : reports)
            if (!r.holds)
                std::cerr << "law " << lawName(r.law) << " fails\n";
        return 4;
    }
    return 0;
}

struct ConvertArgs {
    std::string from;
    std::string to;
    std::string specPath;
    std::string outPath;
    int verifyUpto = 0;
};

void verifyWordAgreement(const Transduction& t, const MealyMachine& m, int upto) {
    for (const auto& w : enumerateWords(m.inputAlphabet, upto))
        if (applyAsWordFunction(t, w) != runMealy(m, w))
            throw VerifyFailure{"machine and transduction disagree on " +
                                show(Elem::seq(w))};
}

void verifyWordAgreement(const Transduction& t, const UnambiguousMealy& m, int upto) {
    for (const auto& w : enumerateWords(m.inputAlphabet, upto))
        if (applyAsWordFunction(t, w) != runUnambiguous(m, w))
            throw VerifyFailure{"machine and transduction disagree on " +
                                show(Elem::seq(w))};
}

int cmdConvert(const ConvertArgs& args) {
    json doc = loadDocument(args.specPath);
    if (kindOf(doc) != args.from)
        throw SchemaError("document kind " + kindOf(doc) + " does not match --from " +
                          args.from);

    if (args.from == "mealy" && args.to == "transduction") {
        MealyMachine m = mealyFromJson(stripKind(doc));
        Transduction t = mealyToTransduction(m);
        verifyWordAgreement(t, m, args.verifyUpto);
        emitDocument(args.outPath, withKind(toJson(t), "transduction"));
        return 0;
    }
    if (args.from == "transduction" && args.to == "mealy") {
        Transduction t = transductionFromJson(stripKind(doc));
        Functor f = t.algebra.inst.functor;
        if (f != Functor::PrefixList && f != Functor::SuffixList)
            throw SchemaError("--to mealy needs a prefix-list or suffix-list "
                              "transduction");
        MealyMachine m = transductionToMealy(t);
        verifyWordAgreement(t, m, args.verifyUpto);
        emitDocument(args.outPath, withKind(toJson(m), "mealy"));
        return 0;
    }
    if (args.from == "unambiguous-mealy" && args.to == "transduction") {
        UnambiguousMealy m = unambiguousFromJson(stripKind(doc));
        Transduction t = unambiguousToTransduction(m);
        verifyWordAgreement(t, m, args.verifyUpto);
        emitDocument(args.outPath, withKind(toJson(t), "transduction"));
        return 0;
    }
    if (args.from == "transduction" && args.to == "unambiguous-mealy") {
        Transduction t = transductionFromJson(stripKind(doc));
        if (t.algebra.inst.functor != Functor::PointedList)
            throw SchemaError("--to unambiguous-mealy needs a pointed-list "
                              "transduction");
        UnambiguousMealy m = transductionToUnambiguous(t);
        verifyWordAgreement(t, m, args.verifyUpto);
        emitDocument(args.outPath, withKind(toJson(m), "unambiguous-mealy"));
        return 0;
    }
    throw SchemaError("unsupported conversion: " + args.from + " -> " + args.to);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognizable transductions over monad-comonad functors"};
    app.require_subcommand(1);

    RunArgs runArgs;
    CLI::App* run = app.add_subcommand("run", "apply a machine to one input");
    run->add_option("--spec", runArgs.specPath, "machine document")->required();
    run->add_option("--input", runArgs.input, "inline word, JSON, or a file")
        ->required();
    run->add_option("--format", runArgs.format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
    run->add_flag("--json-input", runArgs.jsonInput,
                  "parse the inline input as JSON");

    ComposeArgs composeArgs;
    CLI::App* compose =
        app.add_subcommand("compose", "chain two transductions into one");
    compose->add_option("--first", composeArgs.firstPath, "stage that runs first")
        ->required();
    compose->add_option("--second", composeArgs.secondPath, "stage that runs second")
        ->required();
    compose->add_option("--out", composeArgs.outPath, "output file (stdout if absent)");
    compose->add_option("--verify-upto", composeArgs.verifyUpto,
                        "cross-check against running the stages in sequence");
    compose->add_option("--method", composeArgs.method, "generalized or classical")
        ->check(CLI::IsMember({"generalized", "classical"}));

    CheckLawsArgs lawArgs;
    CLI::App* laws = app.add_subcommand("check-laws", "run the axiom suite");
    laws->add_option("--functor", lawArgs.functor, "instance to check")->required();
    laws->add_option("--bound", lawArgs.bound, "size bound (0 = instance default)");
    laws->add_option("--domain-size", lawArgs.domainSize, "payload letters");
    laws->add_option("--samples", lawArgs.samples,
                     "random cases per law (0 = exhaustive)");
    CLI::Option* seedOpt = laws->add_option("--seed", lawArgs.seed, "random seed");
    laws->add_option("--alphabet", lawArgs.alphabet,
                     "ranked alphabet for pointed-term, JSON object");
    laws->add_option("--report", lawArgs.reportPath, "also write the report here");

    ConvertArgs convertArgs;
    CLI::App* convert = app.add_subcommand("convert", "translate between machines");
    convert->add_option("--from", convertArgs.from, "source kind")->required();
    convert->add_option("--to", convertArgs.to, "target kind")->required();
    convert->add_option("--spec", convertArgs.specPath, "source document")->required();
    convert->add_option("--out", convertArgs.outPath, "output file (stdout if absent)");
    convert->add_option("--verify-upto", convertArgs.verifyUpto,
                        "check both behave alike on words up to this length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    lawArgs.seedSet = seedOpt->count() > 0;

    try {
        if (run->parsed()) return cmdRun(runArgs);
        if (compose->parsed()) return cmdCompose(composeArgs);
        if (laws->parsed()) return cmdCheckLaws(lawArgs);
        return cmdConvert(convertArgs);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const VerifyFailure& e) {
        std::cerr << "verification failed: " << e.what << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
