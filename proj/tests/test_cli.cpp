#include <sstream>

#include "doctest.h"
#include "nilclean/nilclean.hpp"

using namespace nilclean;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "nilclean");
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify Z/5 --json") {
    const Run r = run({"classify", "Z/5", "--json"});
    const Json j = Json::parse(r.out);
    for (CharacterizationId id : kZncClass) CHECK(j["predicates"][to_string(id)]["holds"] == true);
    CHECK(j["predicates"]["S2NC-SQ-4E"]["holds"] == true);
    CHECK(j["separations"]["S2NC-SQ-4E"] == true);
    CHECK(j["classes"]["S2NC"] == false);
    CHECK(j["predicates"]["S2NC-A3"]["witness"] == 2);
    // the exit code follows the verdicts in the report
    const bool consistent = j["equivalences"]["S2NC"] == "consistent" && j["equivalences"]["ZNC"] == "consistent";
    CHECK(r.code == (consistent ? kExitOk : kExitInconsistent));
}

TEST_CASE("classify @example3.6") {
    const Run r = run({"classify", "@example3.6"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("Zhou nil-clean: no") != std::string::npos);
    CHECK(r.out.find("ZNC-A5          false   witness 1") != std::string::npos);
    CHECK(r.out.find("separations: ZNC-SQ-5P") != std::string::npos);
}

TEST_CASE("classify Z/1") {
    const Run r = run({"classify", "Z/1", "--json"});
    CHECK(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    for (const auto& [name, value] : j["predicates"].items()) CHECK(value["holds"] == true);
}

TEST_CASE("classify reads ring JSON from stdin") {
    const std::string ring = ring_to_json(make_zn(12)).dump();
    const Run r = run({"classify", "-", "--json"}, ring);
    CHECK(r.code == kExitOk);
    CHECK(Json::parse(r.out)["classes"]["S2NC"] == true);

    CHECK(run({"classify", "-"}, "{not json").code == kExitInputError);
    CHECK(run({"classify", "-"}, R"({"order":1})").code == kExitInputError);
}

TEST_CASE("decompose") {
    const Run four = run({"decompose", "Z/5", "4", "--shape", "e,e,e,e"});
    CHECK(four.code == kExitOk);
    CHECK(four.out.rfind("[1,1,1,1] + nil 0", 0) == 0);

    const Run none = run({"decompose", "Z/5", "4", "--shape", "e,e,e"});
    CHECK(none.code == kExitOk);
    CHECK(none.out == "none\n");

    const Run seven = run({"decompose", "Z/12", "7", "--shape", "t"});
    CHECK(seven.code == kExitOk);
    CHECK(seven.out.rfind("[7] + nil 0", 0) == 0);

    const Run json = run({"decompose", "Z/12", "7", "--shape", "t", "--json"});
    CHECK(Json::parse(json.out)["witness"]["parts"][0]["element"] == 7);

    CHECK(run({"decompose", "Z/5", "5", "--shape", "e"}).code == kExitInputError);
    CHECK(run({"decompose", "Z/5", "1", "--shape", "q"}).code == kExitInputError);
    CHECK(run({"decompose", "Z/5", "1"}).code == kExitInputError);
}

TEST_CASE("survey") {
    const Run r = run({"survey", "12", "--threads", "2"});
    CHECK(r.out.find("Z/12") != std::string::npos);
    bool z12_true = false;
    std::istringstream lines(r.out);
    for (std::string line; std::getline(lines, line);)
        if (line.rfind("Z/12 ", 0) == 0) z12_true = line.find("12     true") != std::string::npos;
    CHECK(z12_true);
    const bool all_ok = r.out.find("all consistent") != std::string::npos;
    CHECK(r.code == (all_ok ? kExitOk : kExitInconsistent));

    const Run j = run({"survey", "12", "--json"});
    const Json arr = Json::parse(j.out);
    CHECK(arr.is_array());
    CHECK(arr.size() == survey_set(12).size());
    CHECK(j.code == r.code);

    const Json a30 = Json::parse(run({"survey", "30", "--json"}).out);
    bool found = false;
    for (const Json& row : a30)
        if (row["name"] == "Z/30") {
            found = true;
            CHECK(row["classes"]["ZNC"] == true);
        }
    CHECK(found);

    CHECK(run({"survey", "1"}).code == kExitInputError);
    CHECK(run({"survey", "300"}).code == kExitInputError);
}

TEST_CASE("input errors and the order cap") {
    const Run bad = run({"classify", "Z/"});
    CHECK(bad.code == kExitInputError);
    CHECK(bad.err.find("offset 2") != std::string::npos);
    CHECK(run({"classify", "@nope"}).code == kExitInputError);
    CHECK(run({"classify", "M2(Z/5)"}).code == kExitInputError);
    CHECK(run({"classify", "Z/288", "--max-order-cap", "100"}).code == kExitInputError);
    CHECK(run({"--max-order-cap", "300", "classify", "Z/288", "--json"}).code == kExitOk);
    CHECK(run({"classify", "Z/288", "--max-order-cap", "300"}).code == kExitOk);
    CHECK(run({}).code == kExitInputError);
    CHECK(run({"frobnicate"}).code == kExitInputError);
    CHECK(run({"--help"}).code == kExitOk);
}
