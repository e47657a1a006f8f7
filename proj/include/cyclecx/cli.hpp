/**
 * Command-line surface: input parsing, report serialization and the
 * subcommand dispatcher used by the cyclecx executable.
 *
 * Needs vendor/json.hpp and vendor/CLI11.hpp on the include path.
 */

#ifndef CYCLECX_CLI_HPP
#define CYCLECX_CLI_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>
#include "CLI11.hpp"
#include "json.hpp"
#include "audit.hpp"
#include "borrow.hpp"
#include "cellpoly.hpp"
#include "genus2.hpp"
#include "minimize.hpp"
#include "multicurve.hpp"

namespace cyclecx::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int
{
    ok = 0,
    validationError = 1,
    infeasibleClass = 2,
    propertyViolation = 3
};

/** Malformed input or failed invariants; `diagnostics` has one line each. */
class SpecError : public std::invalid_argument
{
    public:
        std::vector<std::string> diagnostics;

        explicit SpecError(std::vector<std::string> lines)
            : std::invalid_argument(lines.empty() ? "invalid input" : lines.front()), diagnostics(std::move(lines)) {}
};

/**
 * A parsed input file. `type` is present for the multicurve schema and
 * absent for the relation-presentation schema.
 */
struct Spec
{
    std::optional<MulticurveType> type;
    RelationPresentation presentation;
    std::optional<Cycle> start;
};

namespace detail {

inline std::size_t lineAt(const std::string& text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

/** Line of the first occurrence of "needle" as a JSON string, or 0. */
inline std::size_t lineOfString(const std::string& text, const std::string& needle)
{
    const auto at = text.find("\"" + needle + "\"");
    return at == std::string::npos ? 0 : lineAt(text, at);
}

inline Json parseJson(const std::string& text)
{
    try
    {
        return Json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        const std::size_t line = lineAt(text, e.byte == 0 ? 0 : e.byte - 1);
        throw SpecError({"line " + std::to_string(line) + ": malformed JSON: " + e.what()});
    }
}

[[noreturn]] inline void schemaError(const std::string& where, const std::string& what)
{
    throw SpecError({where + ": " + what});
}

inline const Json& member(const Json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        schemaError(where, "missing \"" + key + "\"");
    return j.at(key);
}

inline std::string asString(const Json& j, const std::string& where)
{
    if (!j.is_string())
        schemaError(where, "expected a string");
    return j.get<std::string>();
}

inline Integer asInteger(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
    if (j.is_string())
    {
        const Rational q = [&] {
            try
            {
                return parseRational(j.get<std::string>());
            }
            catch (const std::invalid_argument& e)
            {
                schemaError(where, e.what());
            }
        }();
        if (denominator(q) == 1)
            return numerator(q);
    }
    schemaError(where, "expected an integer");
}

inline Rational asRational(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Rational(asInteger(j, where));
    if (!j.is_string())
        schemaError(where, "expected a rational as \"p/q\" or an integer");
    try
    {
        return parseRational(j.get<std::string>());
    }
    catch (const std::invalid_argument& e)
    {
        schemaError(where, e.what());
    }
}

inline const Json& arrayMember(const Json& j, const std::string& key, const std::string& where)
{
    const Json& a = member(j, key, where);
    if (!a.is_array())
        schemaError(where + "/" + key, "expected an array");
    return a;
}

inline MulticurveType parseType(const Json& j)
{
    MulticurveType m;
    const Json& g = member(j, "surface_genus", "");
    if (!g.is_number_integer())
        schemaError("/surface_genus", "expected an integer");
    m.surfaceGenus = g.get<int>();
    const Json& comps = arrayMember(j, "components", "");
    for (std::size_t i = 0; i < comps.size(); ++i)
    {
        const std::string at = "/components/" + std::to_string(i);
        const Json& genus = member(comps[i], "genus", at);
        if (!genus.is_number_integer())
            schemaError(at + "/genus", "expected an integer");
        m.components.push_back({asString(member(comps[i], "id", at), at + "/id"), genus.get<int>()});
    }
    const Json& curves = arrayMember(j, "curves", "");
    for (std::size_t i = 0; i < curves.size(); ++i)
    {
        const std::string at = "/curves/" + std::to_string(i);
        m.curves.push_back({asString(member(curves[i], "id", at), at + "/id"),
                            asString(member(curves[i], "tail", at), at + "/tail"),
                            asString(member(curves[i], "head", at), at + "/head")});
    }
    return m;
}

/** Attach a source line to each failed validation check when one can be found. */
inline std::vector<std::string> validationDiagnostics(const ValidationReport& report, const MulticurveType& m,
                                                      const std::string& text)
{
    std::vector<std::string> out;
    for (const auto& c : report.checks)
    {
        if (c.passed)
            continue;
        std::size_t line = 0;
        if (c.name == "total_euler" || c.name == "genus")
            line = lineOfString(text, "surface_genus");
        if (line == 0)
            for (const auto& comp : m.components)
                if (c.detail.find("\"" + comp.id + "\"") != std::string::npos)
                    line = lineOfString(text, comp.id);
        if (line == 0)
            for (const auto& curve : m.curves)
                if (c.detail.find("\"" + curve.id + "\"") != std::string::npos)
                    line = lineOfString(text, curve.id);
        out.push_back((line ? "line " + std::to_string(line) + ": " : std::string()) + c.name + ": " + c.detail);
    }
    return out;
}

inline Cycle parseCycle(const Json& j, const std::vector<std::string>& curves, const std::string& where)
{
    if (!j.is_object())
        schemaError(where, "expected an object {curve: coefficient}");
    RationalVector k(curves.size(), Rational(0));
    for (const auto& [id, v] : j.items())
    {
        const auto it = std::find(curves.begin(), curves.end(), id);
        if (it == curves.end())
            schemaError(where, "unknown curve \"" + id + "\"");
        k[static_cast<std::size_t>(it - curves.begin())] = asRational(v, where + "/" + id);
    }
    return Cycle{curves, k};
}

}   // namespace detail

/**
 * Parse either input schema. Throws SpecError with diagnostics on malformed
 * JSON, schema mismatches and failed multicurve invariants.
 */
inline Spec parseSpec(const std::string& text)
{
    using namespace detail;
    const Json j = parseJson(text);
    if (!j.is_object())
        schemaError("", "expected a JSON object");
    Spec spec;
    try
    {
        if (j.contains("relations"))
        {
            RelationPresentation& p = spec.presentation;
            const Json& curves = arrayMember(j, "curves", "");
            for (std::size_t i = 0; i < curves.size(); ++i)
            {
                const std::string at = "/curves/" + std::to_string(i);
                p.curves.push_back(curves[i].is_object() ? asString(member(curves[i], "id", at), at + "/id")
                                                         : asString(curves[i], at));
            }
            const Json& rel = arrayMember(j, "relations", "");
            p.relations = IntMatrix(rel.size(), p.curves.size());
            for (std::size_t r = 0; r < rel.size(); ++r)
            {
                const std::string at = "/relations/" + std::to_string(r);
                if (!rel[r].is_array() || rel[r].size() != p.curves.size())
                    schemaError(at, "expected an array of " + std::to_string(p.curves.size()) + " integers");
                for (std::size_t c = 0; c < p.curves.size(); ++c)
                    p.relations(r, c) = asInteger(rel[r][c], at + "/" + std::to_string(c));
            }
            const Json& x = arrayMember(j, "x", "");
            for (std::size_t i = 0; i < x.size(); ++i)
                p.reference.push_back(asInteger(x[i], "/x/" + std::to_string(i)));
            p.check();
        }
        else
        {
            MulticurveType m = parseType(j);
            const ValidationReport report = validate(m);
            if (!report.ok())
                throw SpecError(validationDiagnostics(report, m, text));
            std::map<std::string, Integer> x;
            const Json& xj = member(j, "x", "");
            if (!xj.is_object())
                schemaError("/x", "expected an object {curve: integer}");
            for (const auto& [id, v] : xj.items())
                x[id] = asInteger(v, "/x/" + id);
            spec.presentation = presentation(m, x);
            spec.type = std::move(m);
        }
        if (j.contains("start"))
            spec.start = parseCycle(j.at("start"), spec.presentation.curves, "/start");
    }
    catch (const SpecError&)
    {
        throw;
    }
    catch (const std::invalid_argument& e)
    {
        throw SpecError({e.what()});
    }
    return spec;
}

/** Lengths file: {"lengths": {curve: "p/q"}}. */
inline LengthAssignment parseLengths(const std::string& text)
{
    using namespace detail;
    const Json j = parseJson(text);
    const Json& l = member(j, "lengths", "");
    if (!l.is_object())
        schemaError("/lengths", "expected an object {curve: \"p/q\"}");
    std::map<std::string, Rational> values;
    for (const auto& [id, v] : l.items())
        values[id] = asRational(v, "/lengths/" + id);
    try
    {
        return LengthAssignment(values);
    }
    catch (const InvalidLengths& e)
    {
        throw SpecError({e.what()});
    }
}

// Reports

inline Json rationalJson(const Rational& q)
{
    return formatRational(q);
}

inline Json cycleJson(const Cycle& c)
{
    Json out = Json::object();
    for (std::size_t i = 0; i < c.curves.size(); ++i)
        if (c.coefficients[i] != 0)
            out[c.curves[i]] = rationalJson(c.coefficients[i]);
    return out;
}

inline Json edgesJson(const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    Json out = Json::array();
    for (const auto& [a, b] : edges)
        out.push_back(Json::array({a, b}));
    return out;
}

inline Json presentationJson(const RelationPresentation& p)
{
    Json out;
    out["curves"] = p.curves;
    Json x = Json::object();
    for (std::size_t i = 0; i < p.curves.size(); ++i)
        if (p.reference[i] != 0)
            x[p.curves[i]] = p.reference[i].str();
    out["x"] = x;
    return out;
}

inline Json cellJson(const CellPolytope& cell)
{
    Json out = presentationJson(cell.ambient);
    out["dimension"] = cell.dimension;
    out["bounded"] = cell.bounded;
    out["vertices"] = Json::array();
    out["labels"] = Json::array();
    for (const auto& v : cell.vertices)
    {
        out["vertices"].push_back(cycleJson(v));
        out["labels"].push_back(v.label());
    }
    out["edges"] = edgesJson(cell.edges);
    return out;
}

inline Json faceJson(const CellPolytope& cell, const MinimizingFace& face, const LengthAssignment& lengths)
{
    Json out = presentationJson(cell.ambient);
    out["value"] = rationalJson(face.value);
    out["dimension"] = face.dimension;
    out["vertices"] = Json::array();
    out["labels"] = Json::array();
    for (const auto& v : face.vertices)
    {
        out["vertices"].push_back(cycleJson(v));
        out["labels"].push_back(v.label());
    }
    out["edges"] = edgesJson(face.edges);
    out["cell_vertices"] = face.vertexIndices;
    out["multicurve"] = face.multicurve;
    const BalanceReport b = lengthBalance(cell, lengths);
    out["relations_balanced"] = b.relationsBalanced;
    out["positive_cycles_equal"] = b.positiveCyclesEqual();
    return out;
}

inline Json borrowJson(const RelationPresentation& p, const Cycle& start, const LengthAssignment& lengths)
{
    const Reduction r = reduceToBasicTraced(p, start, lengths);
    Json out = presentationJson(p);
    out["start"] = cycleJson(start);
    out["start_length"] = rationalJson(cycleLength(start, lengths));
    out["moves"] = Json::array();
    Cycle c = start;
    for (const auto& move : r.moves)
    {
        const LengthEffect e = lengthEffect(p, c, move, lengths);
        const Cycle next = applyBorrow(p, c, move);
        Json m;
        Json relation = Json::array();
        for (const auto& v : move.relation)
            relation.push_back(v.str());
        m["relation"] = relation;
        m["delta"] = rationalJson(move.delta);
        m["L1"] = rationalJson(e.increasingSide);
        m["L2"] = rationalJson(e.decreasingSide);
        m["change"] = toString(e.change);
        m["length"] = rationalJson(e.after);
        Json zeroed = Json::array();
        for (std::size_t i = 0; i < c.coefficients.size(); ++i)
            if (c.coefficients[i] != 0 && next.coefficients[i] == 0)
                zeroed.push_back(p.curves[i]);
        m["zeroed"] = zeroed;
        m["cycle"] = cycleJson(next);
        out["moves"].push_back(m);
        c = next;
    }
    out["result"] = cycleJson(r.cycle);
    out["result_label"] = r.cycle.label();
    out["result_length"] = rationalJson(cycleLength(r.cycle, lengths));
    return out;
}

inline Json treeNodeJson(const QuotientTreeNode& n)
{
    Json out;
    out["weight"] = n.weight().str();
    if (n.kind == QuotientTreeNode::Kind::distinguished)
    {
        out["kind"] = "distinguished";
        return out;
    }
    out["kind"] = "pair";
    out["classes"] = Json::array({Json::array({n.first[0].str(), n.first[1].str()}),
                                  Json::array({n.second[0].str(), n.second[1].str()})});
    out["weights"] = Json::array({n.firstWeight.str(), n.secondWeight.str()});
    return out;
}

inline Json treeJson(const PlaneTree& t)
{
    Json out;
    out["x"] = Json::array({t.x[0].str(), t.x[1].str()});
    out["weight_bound"] = t.weightBound.str();
    out["coord_bound"] = t.coordBound.str();
    out["nodes"] = Json::array();
    for (const auto& n : t.nodes)
        out["nodes"].push_back(treeNodeJson(n));
    out["edges"] = edgesJson(t.edges);
    return out;
}

inline Json fullQuotientJson(const FullQuotient& q)
{
    Json out;
    out["plane_bound"] = q.planeBound.str();
    out["weight_bound"] = q.weightBound.str();
    out["coord_bound"] = q.coordBound.str();
    out["vertices"] = q.vertexCount();
    out["planes"] = Json::array();
    for (std::size_t p = 0; p < q.planes.size(); ++p)
    {
        Json plane = treeJson(q.trees[p]);
        Json v = Json::array();
        for (const auto& c : q.planes[p])
            v.push_back(c.str());
        plane["generator"] = v;
        out["planes"].push_back(plane);
    }
    return out;
}

inline Json splittingsJson(const SplittingLine& line)
{
    Json out;
    out["splittings"] = Json::array();
    for (const auto& k : line.indices)
    {
        const Splitting s = splittingFromIndex(k);
        auto vec = [](const SymplecticVector& v) {
            Json a = Json::array();
            for (const auto& c : v)
                a.push_back(c.str());
            return a;
        };
        Json j;
        j["index"] = k.str();
        j["V1"] = Json::array({vec(s.first[0]), vec(s.first[1])});
        j["V2"] = Json::array({vec(s.second[0]), vec(s.second[1])});
        out["splittings"].push_back(j);
    }
    out["edges"] = Json::array();
    for (const auto& e : line.edges)
        out["edges"].push_back(Json{{"from", e.from.str()}, {"to", e.to.str()}, {"certificate", e.certificate.str()}});
    return out;
}

// Dispatcher

struct Options
{
    std::string subcommand;
    std::string input;
    std::string format;
    std::string lengths;
    std::string out;
    int genus = 2;
    std::size_t maxCurves = 0;
    long weightBound = 6;
    long coordBound = 3;
    long indexBound = 5;
    long planeBound = 0;
    bool farey = false;
};

namespace detail {

inline std::string readFile(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SpecError({"cannot read \"" + path + "\""});
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline void requireFormat(const Options& o, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (o.format == f)
            return;
    throw SpecError({"format \"" + o.format + "\" is not available for " + o.subcommand});
}

inline Spec loadSpec(const Options& o)
{
    if (o.input.empty())
        throw SpecError({o.subcommand + " needs --input"});
    return parseSpec(readFile(o.input));
}

inline LengthAssignment loadLengths(const Options& o)
{
    if (o.lengths.empty())
        throw SpecError({o.subcommand + " needs --lengths"});
    return parseLengths(readFile(o.lengths));
}

inline std::string dumpJson(const Json& j)
{
    return j.dump(2) + "\n";
}

/** Produce the artifact for one subcommand; returns the exit code. */
inline int produce(const Options& o, std::string& artifact)
{
    if (o.subcommand == "cell")
    {
        requireFormat(o, {"json"});
        artifact = dumpJson(cellJson(cellPolytope(loadSpec(o).presentation)));
        return ok;
    }
    if (o.subcommand == "minimize")
    {
        requireFormat(o, {"json"});
        const Spec spec = loadSpec(o);
        const LengthAssignment lengths = loadLengths(o);
        const CellPolytope cell = cellPolytope(spec.presentation);
        artifact = dumpJson(faceJson(cell, minimalFace(cell, lengths), lengths));
        return ok;
    }
    if (o.subcommand == "borrow")
    {
        requireFormat(o, {"json"});
        const Spec spec = loadSpec(o);
        const LengthAssignment lengths = loadLengths(o);
        const Cycle start = spec.start ? *spec.start : Cycle::fromIntegers(spec.presentation.curves, spec.presentation.reference);
        artifact = dumpJson(borrowJson(spec.presentation, start, lengths));
        return ok;
    }
    if (o.subcommand == "audit")
    {
        requireFormat(o, {"csv", "json"});
        const std::size_t maxCurves = o.maxCurves ? o.maxCurves : static_cast<std::size_t>(3 * o.genus - 3);
        const AuditReport r = verifyInequalities(o.genus, maxCurves);
        if (o.format == "csv")
            artifact = auditCsv(r);
        else
        {
            Json j;
            j["genus"] = r.genus;
            j["max_curves"] = r.maxCurves;
            j["types_checked"] = r.typesChecked;
            j["excluded"] = r.excluded;
            j["equality_cases"] = r.equalityCases;
            j["violations"] = Json::array();
            for (const auto& v : r.violations)
                j["violations"].push_back(Json{{"type", v.type}, {"check", v.check}, {"detail", v.detail}});
            j["rows"] = Json::array();
            for (const auto& l : r.ledgers)
                j["rows"].push_back(auditCsvRow(l));
            artifact = dumpJson(j);
        }
        return r.ok() ? ok : propertyViolation;
    }
    if (o.subcommand == "tree")
    {
        requireFormat(o, {"dot", "json"});
        if (o.planeBound > 0)
        {
            const FullQuotient q = assembleFullQuotient(o.planeBound, o.weightBound, o.coordBound);
            artifact = o.format == "dot" ? toDot(q, o.farey) : dumpJson(fullQuotientJson(q));
        }
        else
        {
            const PlaneTree t = planeQuotientTree({1, 0}, o.weightBound, o.coordBound);
            artifact = o.format == "dot" ? toDot(t, o.farey) : dumpJson(treeJson(t));
        }
        return ok;
    }
    if (o.subcommand == "splittings")
    {
        requireFormat(o, {"dot", "json"});
        const SplittingLine line = splittingLine(o.indexBound);
        artifact = o.format == "dot" ? toDot(line) : dumpJson(splittingsJson(line));
        return ok;
    }
    throw SpecError({"unknown subcommand \"" + o.subcommand + "\""});
}

}   // namespace detail

/**
 * Run one command. `args` excludes the program name. The artifact goes to
 * `out` unless --out names a file; diagnostics go to `err`.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact cycle complexes of multicurves", "cyclecx"};
    app.require_subcommand(1);
    Options o;
    const std::vector<std::pair<const char*, const char*>> commands{
        {"cell", "Cell of a multicurve type or relation presentation (json)"},
        {"minimize", "Length-minimizing face of a cell (json)"},
        {"borrow", "Trace of the borrowing reduction to a basic cycle (json)"},
        {"audit", "Dimension ledger of every type of a genus (csv, json)"},
        {"tree", "Genus-2 plane quotient tree or glued quotient (dot, json)"},
        {"splittings", "Genus-2 splittings through x and their adjacency (dot, json)"}};
    for (const auto& [name, help] : commands)
    {
        CLI::App* sub = app.add_subcommand(name, help);
        const std::string n = name;
        sub->add_option("--format", o.format, "Output format");
        sub->add_option("--out", o.out, "Write the artifact to this path");
        if (n == "cell" || n == "minimize" || n == "borrow")
            sub->add_option("--input", o.input, "Input JSON")->required();
        if (n == "minimize" || n == "borrow")
            sub->add_option("--lengths", o.lengths, "Lengths JSON")->required();
        if (n == "audit")
        {
            sub->add_option("--genus", o.genus, "Surface genus")->check(CLI::Range(2, 64));
            sub->add_option("--max-curves", o.maxCurves, "Largest multicurve size (default 3g-3)")->check(CLI::PositiveNumber);
        }
        if (n == "tree")
        {
            sub->add_option("--weight-bound,--W", o.weightBound, "Weight bound W")->check(CLI::PositiveNumber);
            sub->add_option("--coord-bound,--C", o.coordBound, "Coordinate bound C")->check(CLI::PositiveNumber);
            sub->add_option("--planes", o.planeBound, "Glue the planes <[a], s[b]+t[b']> with |s|,|t| up to this bound")
                ->check(CLI::PositiveNumber);
            sub->add_flag("--farey", o.farey, "Overlay the Farey edges among node classes");
        }
        if (n == "splittings")
            sub->add_option("--index-bound,--K", o.indexBound, "Index bound K")->check(CLI::NonNegativeNumber);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : validationError;
    }
    o.subcommand = app.get_subcommands().front()->get_name();
    if (o.format.empty())
        o.format = o.subcommand == "audit" ? "csv" : (o.subcommand == "tree" || o.subcommand == "splittings") ? "dot" : "json";

    std::string artifact;
    int code = ok;
    try
    {
        code = detail::produce(o, artifact);
    }
    catch (const SpecError& e)
    {
        for (const auto& d : e.diagnostics)
            err << "error: " << d << "\n";
        return validationError;
    }
    catch (const InfeasibleClass& e)
    {
        err << "infeasible: " << e.what() << "\n";
        return infeasibleClass;
    }
    catch (const std::invalid_argument& e)
    {
        err << "error: " << e.what() << "\n";
        return validationError;
    }
    catch (const NotAdmissible& e)
    {
        err << "error: " << e.what() << "\n";
        return validationError;
    }
    catch (const std::exception& e)
    {
        err << "internal error: " << e.what() << "\n";
        return validationError;
    }

    if (o.out.empty())
        out << artifact;
    else
    {
        std::ofstream file(o.out, std::ios::binary);
        file << artifact;
        if (!file)
        {
            err << "error: cannot write \"" << o.out << "\"\n";
            return validationError;
        }
    }
    if (code == propertyViolation)
        err << "audit found property violations\n";
    return code;
}

}   // namespace cyclecx::cli

#endif
