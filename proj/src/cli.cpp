#include "nilclean/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nilclean/catalog.hpp"
#include "nilclean/classifier.hpp"
#include "nilclean/decomposer.hpp"
#include "nilclean/expr.hpp"
#include "nilclean/io.hpp"

namespace nilclean {

namespace {

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

RingTable load_ring(const std::string& text, std::istream& in, const BuildOptions& opts) {
    if (text == "-") {
        Json j;
        try {
            j = Json::parse(in);
        } catch (const Json::exception& e) {
            throw InputError(std::string("stdin is not valid JSON: ") + e.what());
        }
        return ring_from_json(j, opts);
    }
    return build_ring(*parse_ring_expr(text), Catalog::standard(), opts);
}

void print_witness(std::ostream& out, const Shape& shape, const std::optional<DecompositionWitness>& w) {
    if (!w) {
        out << "none\n";
        return;
    }
    out << '[';
    for (std::size_t i = 0; i < w->parts.size(); ++i) out << (i ? "," : "") << w->parts[i].index;
    out << "] + nil " << w->nilpotent.index;
    if (!shape.parts.empty()) out << "  (" << to_string(shape) << ")";
    out << '\n';
}

void print_survey_table(std::ostream& out, const std::vector<SurveyRow>& rows) {
    std::size_t width = 4;
    for (const auto& row : rows) width = std::max(width, row.name.size());
    out << std::left << std::setw(static_cast<int>(width)) << "ring" << "  order  S2NC   ZNC    verdict       separations\n";
    for (const auto& row : rows) {
        const auto& rep = row.report;
        out << std::left << std::setw(static_cast<int>(width)) << row.name << "  " << std::setw(5)
            << rep.order << "  " << std::setw(5) << (rep.strongly_2_nil_clean ? "true" : "false")
            << "  " << std::setw(5) << (rep.zhou_nil_clean ? "true" : "false") << "  "
            << std::setw(12) << (rep.consistent() ? "consistent" : "INCONSISTENT") << "  ";
        bool any = false;
        for (const auto& [name, strict] : rep.separations)
            if (strict) {
                out << (any ? "," : "") << name;
                any = true;
            }
        if (!any) out << '-';
        for (const auto& m : row.mismatches) out << "  expected-mismatch:" << m;
        out << '\n';
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Finite-ring laboratory for nil-clean decompositions", "nilclean"};
    app.require_subcommand(1);

    std::size_t order_cap = kDefaultOrderCap;
    bool json = false;
    app.add_option("--max-order-cap", order_cap, "Largest ring order any constructor may build")
        ->check(CLI::PositiveNumber);

    std::string expr_text;
    auto* classify_cmd = app.add_subcommand("classify", "Evaluate every characterization on one ring");
    classify_cmd->add_option("expr", expr_text, "Ring expression, or - to read ring JSON from stdin")
        ->required();
    classify_cmd->add_flag("--json", json, "Emit JSON");

    std::size_t element = 0;
    std::string shape_text;
    auto* decompose_cmd = app.add_subcommand("decompose", "Find a commuting decomposition of one element");
    decompose_cmd->add_option("expr", expr_text, "Ring expression, or - for stdin JSON")->required();
    decompose_cmd->add_option("element", element, "Element index")->required();
    decompose_cmd->add_option("--shape", shape_text, "Comma list of e, t, p5, v (nilpotent implicit)")
        ->required();
    decompose_cmd->add_flag("--json", json, "Emit JSON");

    std::size_t max_order = 0;
    unsigned threads = 0;
    auto* survey_cmd = app.add_subcommand("survey", "Cross-check every ring of the survey corpus");
    survey_cmd->add_option("max_order", max_order, "Largest ring order in the corpus")->required();
    survey_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    survey_cmd->add_flag("--json", json, "Emit JSON");

    for (auto* sub : {classify_cmd, decompose_cmd, survey_cmd})
        sub->add_option("--max-order-cap", order_cap, "Largest ring order any constructor may build")
            ->check(CLI::PositiveNumber);

    std::vector<std::string> argv_storage = args.empty() ? std::vector<std::string>{"nilclean"} : args;
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    const BuildOptions opts{order_cap};
    try {
        if (classify_cmd->parsed()) {
            const RingTable ring = load_ring(expr_text, in, opts);
            const CharacterizationReport rep = cross_check(ring);
            if (json) {
                out << report_to_json(rep).dump(2) << '\n';
            } else {
                print_report(out, rep);
            }
            return rep.consistent() ? kExitOk : kExitInconsistent;
        }

        if (decompose_cmd->parsed()) {
            const RingTable ring = load_ring(expr_text, in, opts);
            Shape shape;
            try {
                shape = parse_shape(shape_text);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
            if (element >= ring.order())
                throw InputError("element index " + std::to_string(element) + " out of range for order " +
                                 std::to_string(ring.order()));
            const ElementId a = ring.element(element);
            const auto witness = find_decomposition(ring, a, shape);
            if (json) {
                out << witness_to_json(ring, a, shape, witness).dump(2) << '\n';
            } else {
                print_witness(out, shape, witness);
            }
            return kExitOk;
        }

        if (survey_cmd->parsed()) {
            if (max_order < 2) throw InputError("survey needs max_order >= 2");
            if (max_order > order_cap)
                throw InputError("max_order " + std::to_string(max_order) + " exceeds the order cap " +
                                 std::to_string(order_cap));
            const std::vector<SurveyRow> rows = run_survey(survey_set(max_order, opts), threads);
            bool all_ok = true;
            for (const auto& row : rows) all_ok = all_ok && row.ok();
            if (json) {
                Json arr = Json::array();
                for (const auto& row : rows) {
                    Json j = report_to_json(row.report);
                    j["name"] = row.name;
                    j["expected_mismatches"] = row.mismatches;
                    arr.push_back(std::move(j));
                }
                out << arr.dump(2) << '\n';
            } else {
                print_survey_table(out, rows);
                std::size_t failed = 0;
                for (const auto& row : rows) failed += row.ok() ? 0 : 1;
                if (all_ok) {
                    out << "survey: " << rows.size() << " rings, all consistent\n";
                } else {
                    out << "survey: FAILED on " << failed << " of " << rows.size() << " rings\n";
                }
            }
            return all_ok ? kExitOk : kExitInconsistent;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace nilclean
