/**
 * Oriented multicurves on a closed surface, modelled by their decorated
 * dual graphs: one vertex per component of the cut surface (with its
 * genus) and one directed edge per curve.
 *
 * The homology classes of the curves are the images of the unit vectors
 * under the quotient of Z^|M| by the subsurface relations, one relation
 * per component of the cut surface.
 */

#ifndef CYCLECX_MULTICURVE_HPP
#define CYCLECX_MULTICURVE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>
#include "exactlinalg.hpp"

namespace cyclecx {

class InvalidMulticurve : public std::invalid_argument
{
    public:
        explicit InvalidMulticurve(const std::string& what) : std::invalid_argument(what) {}
};

class InvalidReference : public std::invalid_argument
{
    public:
        explicit InvalidReference(const std::string& what) : std::invalid_argument(what) {}
};

struct Component
{
    std::string id;
    int genus = 0;

    friend bool operator==(const Component&, const Component&) = default;
};

struct Curve
{
    std::string id;
    std::string tail;
    std::string head;

    friend bool operator==(const Curve&, const Curve&) = default;
};

/**
 * Topological type of an oriented multicurve in the closed surface of
 * genus `surfaceGenus`.
 */
struct MulticurveType
{
    int surfaceGenus = 0;
    std::vector<Component> components;
    std::vector<Curve> curves;

    friend bool operator==(const MulticurveType&, const MulticurveType&) = default;

    std::size_t componentIndex(const std::string& id) const
    {
        for (std::size_t i = 0; i < components.size(); ++i)
            if (components[i].id == id)
                return i;
        throw InvalidMulticurve("unknown component \"" + id + "\"");
    }

    std::size_t curveIndex(const std::string& id) const
    {
        for (std::size_t i = 0; i < curves.size(); ++i)
            if (curves[i].id == id)
                return i;
        throw InvalidMulticurve("unknown curve \"" + id + "\"");
    }

    std::vector<std::string> curveIds() const
    {
        std::vector<std::string> ids;
        for (const auto& c : curves)
            ids.push_back(c.id);
        return ids;
    }

    /** Number of curve ends on each component (a loop counts twice). */
    std::vector<int> degrees() const
    {
        std::vector<int> deg(components.size(), 0);
        for (const auto& c : curves)
        {
            ++deg[componentIndex(c.tail)];
            ++deg[componentIndex(c.head)];
        }
        return deg;
    }
};

enum class CurveMode
{
    nonseparating,
    allowSeparating
};

struct ValidationReport
{
    struct Check
    {
        std::string name;
        bool passed = true;
        std::string detail;
    };

    std::vector<Check> checks;

    bool ok() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    const Check* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }

    std::string summary() const
    {
        std::string out;
        for (const auto& c : checks)
            if (!c.passed)
                out += (out.empty() ? "" : "; ") + c.name + ": " + c.detail;
        return out.empty() ? "ok" : out;
    }
};

namespace detail {

/** Bridges of the dual multigraph (loops and parallel edges are never bridges). */
inline std::vector<std::size_t> bridges(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    std::vector<std::size_t> out;
    for (std::size_t skip = 0; skip < edges.size(); ++skip)
    {
        if (edges[skip].first == edges[skip].second)
            continue;
        std::vector<std::size_t> parent(vertices);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (e != skip)
                parent[find(edges[e].first)] = find(edges[e].second);
        if (find(edges[skip].first) != find(edges[skip].second))
            out.push_back(skip);
    }
    return out;
}

inline bool connected(std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
{
    if (vertices == 0)
        return false;
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : edges)
        parent[find(a)] = find(b);
    for (std::size_t v = 1; v < vertices; ++v)
        if (find(v) != find(0))
            return false;
    return true;
}

}   // namespace detail

/**
 * Check every structural invariant of a multicurve type. Failures are
 * reported in the returned report, never thrown.
 */
inline ValidationReport validate(const MulticurveType& m, CurveMode mode = CurveMode::nonseparating)
{
    ValidationReport report;
    auto add = [&](std::string name, bool passed, std::string detail) {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    // Identifiers
    std::string idProblem;
    std::map<std::string, int> seen;
    for (const auto& c : m.components)
        if (seen[c.id]++ == 1)
            idProblem = "duplicate component id \"" + c.id + "\"";
    std::map<std::string, int> seenCurves;
    for (const auto& c : m.curves)
    {
        if (seenCurves[c.id]++ == 1)
            idProblem = "duplicate curve id \"" + c.id + "\"";
        if (!seen.contains(c.tail) || !seen.contains(c.head))
            idProblem = "curve \"" + c.id + "\" references an unknown component";
    }
    if (m.curves.empty())
        idProblem = "a multicurve needs at least one curve";
    if (m.components.empty())
        idProblem = "no components";
    add("ids", idProblem.empty(), idProblem);
    if (!idProblem.empty())
        return report;

    std::string genusProblem;
    if (m.surfaceGenus < 0)
        genusProblem = "surface genus is negative";
    for (const auto& c : m.components)
        if (c.genus < 0)
            genusProblem = "component \"" + c.id + "\" has negative genus";
    add("genus", genusProblem.empty(), genusProblem);

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& c : m.curves)
        edges.emplace_back(m.componentIndex(c.tail), m.componentIndex(c.head));
    const bool conn = detail::connected(m.components.size(), edges);
    add("connected", conn, conn ? "" : "dual graph is disconnected");

    const auto deg = m.degrees();
    std::string eulerProblem;
    long total = 0;
    for (std::size_t i = 0; i < m.components.size(); ++i)
    {
        const long chi = 2 - 2L * m.components[i].genus - deg[i];
        total += chi;
        if (chi >= 0 && eulerProblem.empty())
            eulerProblem = "component \"" + m.components[i].id + "\" (genus " + std::to_string(m.components[i].genus) + ", " +
                           std::to_string(deg[i]) + " boundary curves) has Euler characteristic " + std::to_string(chi) + " >= 0";
    }
    add("component_euler", eulerProblem.empty(), eulerProblem);
    const long expected = 2 - 2L * m.surfaceGenus;
    add("total_euler", total == expected,
        total == expected ? "" : "Euler characteristics sum to " + std::to_string(total) + ", expected 2-2g = " + std::to_string(expected));

    if (mode == CurveMode::nonseparating)
    {
        const auto br = detail::bridges(m.components.size(), edges);
        std::string detail;
        for (auto e : br)
            detail += (detail.empty() ? "separating curve(s): " : ", ") + m.curves[e].id;
        add("nonseparating", br.empty(), detail);
    }
    return report;
}

/**
 * Subsurface relations: row v has, for curve e, (#head ends of e at v) -
 * (#tail ends of e at v). Loops contribute zero and the rows sum to zero.
 */
inline IntMatrix relationMatrix(const MulticurveType& m, CurveMode mode = CurveMode::nonseparating)
{
    const auto report = validate(m, mode);
    if (!report.ok())
        throw InvalidMulticurve(report.summary());
    IntMatrix r(m.components.size(), m.curves.size());
    for (std::size_t e = 0; e < m.curves.size(); ++e)
    {
        r(m.componentIndex(m.curves[e].head), e) += 1;
        r(m.componentIndex(m.curves[e].tail), e) -= 1;
    }
    return r;
}

/**
 * Curves, a relation matrix whose columns are indexed by the curves, and an
 * integer reference cycle representing the class x. The reference may have
 * negative entries; x need not have a positive representative.
 */
struct RelationPresentation
{
    std::vector<std::string> curves;
    IntMatrix relations;
    IntVector reference;

    std::size_t curveIndex(const std::string& id) const
    {
        for (std::size_t i = 0; i < curves.size(); ++i)
            if (curves[i] == id)
                return i;
        throw InvalidReference("unknown curve \"" + id + "\"");
    }

    void check() const
    {
        if (curves.empty())
            throw InvalidMulticurve("presentation has no curves");
        if (relations.cols() != curves.size())
            throw InvalidMulticurve("relation matrix has " + std::to_string(relations.cols()) + " columns for " +
                                    std::to_string(curves.size()) + " curves");
        if (reference.size() != curves.size())
            throw InvalidReference("reference cycle has " + std::to_string(reference.size()) + " entries for " +
                                   std::to_string(curves.size()) + " curves");
        std::map<std::string, int> seen;
        for (const auto& c : curves)
            if (seen[c]++)
                throw InvalidMulticurve("duplicate curve id \"" + c + "\"");
    }
};

inline RelationPresentation presentation(const MulticurveType& m, const IntVector& reference, CurveMode mode = CurveMode::nonseparating)
{
    RelationPresentation p{m.curveIds(), relationMatrix(m, mode), reference};
    p.check();
    return p;
}

inline RelationPresentation presentation(const MulticurveType& m, const std::map<std::string, Integer>& x,
                                         CurveMode mode = CurveMode::nonseparating)
{
    IntVector ref(m.curves.size(), Integer(0));
    for (const auto& [id, k] : x)
        ref[m.curveIndex(id)] = k;
    return presentation(m, ref, mode);
}

/**
 * The quotient of the curve lattice by the relation lattice: the map
 * curve -> [c_i] in a coordinate system of dimension D.
 */
class HomologyQuotient
{
    private:
        IntMatrix relations_;
        IntMatrix classMap_;       // D x |M|; kernel equals the rational relation span
        std::size_t rank_ = 0;
        SmithForm smith_;

    public:
        explicit HomologyQuotient(const IntMatrix& relations)
            : relations_(relations)
        {
            rank_ = rationalRank(relations);
            const auto kernel = kernelBasis(relations);
            classMap_ = IntMatrix(kernel.size(), relations.cols());
            for (std::size_t i = 0; i < kernel.size(); ++i)
                for (std::size_t j = 0; j < relations.cols(); ++j)
                    classMap_(i, j) = boost::multiprecision::numerator(kernel[i][j]);
            smith_ = smithNormalForm(relations);
        }

        const IntMatrix& relations() const { return relations_; }
        const IntMatrix& classMap() const { return classMap_; }
        const SmithForm& smith() const { return smith_; }

        std::size_t curveCount() const { return relations_.cols(); }
        std::size_t relationRank() const { return rank_; }
        /** Dimension of the span of the curves in homology. */
        std::size_t spanDimension() const { return curveCount() - rank_; }

        template <typename U>
        RationalVector classOf(std::span<const U> k) const { return apply(classMap_, k); }

        RationalVector classOfCurve(std::size_t i) const
        {
            IntVector e(curveCount(), Integer(0));
            e[i] = 1;
            return classOf(std::span<const Integer>(e));
        }

        /** Does the integer vector lie in the integral span of the relations? */
        bool inRelationLattice(std::span<const Integer> v) const
        {
            return latticeMember(v, rowsOf(relations_));
        }

        template <typename U>
        bool inRelationSpan(std::span<const U> v) const { return inRowSpan(relations_, v); }

        /** [c_i] = +-[c_j], tested in the integral relation lattice. */
        bool homologousUpToSign(std::size_t i, std::size_t j) const
        {
            IntVector diff(curveCount(), Integer(0)), sum(curveCount(), Integer(0));
            diff[i] += 1;
            diff[j] -= 1;
            sum[i] += 1;
            sum[j] += 1;
            return inRelationLattice(diff) || inRelationLattice(sum);
        }

        /**
         * Partition of the curves into classes up to sign, in order of first
         * appearance.
         */
        std::vector<std::vector<std::size_t>> homologyClasses() const
        {
            std::vector<std::vector<std::size_t>> classes;
            for (std::size_t i = 0; i < curveCount(); ++i)
            {
                bool placed = false;
                for (auto& cls : classes)
                    if (homologousUpToSign(cls.front(), i))
                    {
                        cls.push_back(i);
                        placed = true;
                        break;
                    }
                if (!placed)
                    classes.push_back({i});
            }
            return classes;
        }
};

/**
 * Homology statistics of a multicurve. N, P and Z are only available for
 * inputs given by a dual graph.
 */
struct MulticurveStats
{
    std::size_t curves = 0;     // |M|
    std::size_t span = 0;       // D
    std::size_t classes = 0;    // C
    std::size_t boundingPairs = 0;  // BP = |M| - C
    std::size_t cellDimension = 0;  // B = |M| - D
    std::optional<std::size_t> components;          // N
    std::optional<std::size_t> positiveGenus;       // P
    std::optional<std::size_t> genusZero;           // Z
};

inline MulticurveStats stats(const HomologyQuotient& q)
{
    MulticurveStats s;
    s.curves = q.curveCount();
    s.span = q.spanDimension();
    s.cellDimension = s.curves - s.span;
    s.classes = q.homologyClasses().size();
    s.boundingPairs = s.curves - s.classes;
    return s;
}

inline MulticurveStats stats(const RelationPresentation& p)
{
    p.check();
    return stats(HomologyQuotient(p.relations));
}

inline MulticurveStats stats(const MulticurveType& m, CurveMode mode = CurveMode::nonseparating)
{
    MulticurveStats s = stats(HomologyQuotient(relationMatrix(m, mode)));
    s.components = m.components.size();
    s.positiveGenus = static_cast<std::size_t>(
        std::count_if(m.components.begin(), m.components.end(), [](const Component& c) { return c.genus > 0; }));
    s.genusZero = *s.components - *s.positiveGenus;
    return s;
}

}   // namespace cyclecx

#endif
