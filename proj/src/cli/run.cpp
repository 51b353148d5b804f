#include "evolalg/cli/run.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "evolalg/cli/document.hpp"
#include "evolalg/cli/dot.hpp"
#include "evolalg/cli/report.hpp"
#include "evolalg/error.hpp"
#include "evolalg/graph/associated_graph.hpp"
#include "evolalg/ideals/quotient.hpp"

namespace evolalg::cli {

namespace {

struct Options {
    std::string input;
    std::string field;
    std::uint64_t p = 0;
    bool json = false;
    std::string dot;
    std::string vector;
    std::string ideal_basis;
    std::size_t budget = oracle::EnumerationBudget{}.max_vectors;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os || !(os << text)) throw ValidationError("cannot write file '" + path + "'");
}

std::optional<linalg::Field> field_override(const Options& o) {
    if (o.field.empty()) {
        if (o.p != 0) return linalg::Field::prime(o.p);
        return std::nullopt;
    }
    if (o.field == "rational") {
        if (o.p != 0) throw ValidationError("--p only applies to prime fields");
        return linalg::Field::rational();
    }
    if (o.p == 0) throw ValidationError("--field prime needs --p");
    return linalg::Field::prime(o.p);
}

void emit(const Json& report, const Options& o, std::ostream& out) {
    if (o.json) out << report.dump(2) << '\n';
    else out << render_table(report);
}

int dispatch(const std::string& command, const Options& o, std::ostream& out) {
    const auto a = parse_document(read_file(o.input), field_override(o));
    if (command == "analyze") {
        emit(analyze_report(a), o, out);
    } else if (command == "decompose") {
        emit(decompose_report(a), o, out);
    } else if (command == "simple") {
        emit(simple_report(a), o, out);
    } else if (command == "radical") {
        emit(radical_report(a), o, out);
    } else if (command == "ideal") {
        emit(ideal_report(a, parse_vector_arg(o.vector, a.field(), a.dim())), o, out);
    } else if (command == "graph") {
        if (!o.dot.empty()) write_file(o.dot, export_dot(graph::AssociatedGraph(a)));
        emit(graph_report(a), o, out);
    } else if (command == "quotient") {
        const auto vectors = parse_vector_list(read_file(o.ideal_basis), a.field(), a.dim());
        auto carrier = linalg::Subspace::from_vectors(a.field(), a.dim(), vectors);
        if (!ideals::is_ideal(a, carrier)) throw ValidationError("the given basis does not span an ideal");
        const auto ideal = ideals::Ideal::from_subspace(a, std::move(carrier));
        emit(quotient_report(a, ideals::quotient(a, ideal)), o, out);
    } else if (command == "oracle") {
        oracle::EnumerationBudget budget;
        budget.max_vectors = o.budget;
        const auto report = oracle_report(a, budget);
        emit(report, o, out);
        if (!report["consistent"].get<bool>()) throw InternalError("brute-force results disagree with the library");
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Analyze finite-dimensional evolution algebras given by their structure matrices", "evolalg"};
    app.require_subcommand(1);
    Options o;

    auto common = [&o](CLI::App* sub) {
        sub->add_option("-i,--input", o.input, "Algebra document")->required();
        sub->add_option("--field", o.field, "Override the document field")
            ->check(CLI::IsMember({"rational", "prime"}));
        sub->add_option("--p", o.p, "Prime modulus for --field prime");
        sub->add_flag("--json", o.json, "Machine-readable JSON output");
    };
    common(app.add_subcommand("analyze", "Full report"));
    common(app.add_subcommand("decompose", "Canonical decomposition and optimal direct sum"));
    common(app.add_subcommand("simple", "Simplicity and irreducibility"));
    common(app.add_subcommand("radical", "Annihilator and absorption radical"));
    auto* ideal = app.add_subcommand("ideal", "Ideal generated by an element");
    common(ideal);
    ideal->add_option("--vector", o.vector, "Coordinates, comma separated")->required();
    auto* graph = app.add_subcommand("graph", "Associated graph");
    common(graph);
    graph->add_option("--dot", o.dot, "Write the graph in DOT format to FILE");
    auto* quotient = app.add_subcommand("quotient", "Quotient by an ideal");
    common(quotient);
    quotient->add_option("--ideal-basis", o.ideal_basis, "File with one ideal generator per line")->required();
    auto* brute = app.add_subcommand("oracle", "Brute-force cross-checks over a prime field");
    common(brute);
    brute->add_option("--budget", o.budget, "Largest p^n to enumerate");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, o, out);
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace evolalg::cli
