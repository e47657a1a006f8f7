/**
 * Exhaustive enumeration of multicurve types in small genus and the
 * dimension ledger of each type: stabilizer bounds for the Torelli group and
 * the Johnson kernel, the bounding-pair inequality BP + 2 <= D + P, and the
 * structural identities they rest on.
 *
 * Types are decorated multigraphs: components are vertices with a genus,
 * curves are edges. Enumeration covers every connected bridgeless graph with
 * each component of negative Euler characteristic, up to isomorphism. This
 * is a superset of the types that occur for some class x.
 */

#ifndef CYCLECX_AUDIT_HPP
#define CYCLECX_AUDIT_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>
#include "cellpoly.hpp"
#include "multicurve.hpp"

namespace cyclecx {

/**
 * Exact dimension bookkeeping for one multicurve type.
 */
struct DimensionLedger
{
    int genus = 0;                  // g
    std::size_t curves = 0;         // |M|
    std::size_t span = 0;           // D
    std::size_t components = 0;     // N
    std::size_t positiveGenus = 0;  // P
    std::size_t genusZero = 0;      // Z
    std::size_t classes = 0;        // C
    std::size_t boundingPairs = 0;  // BP
    std::size_t cellDimension = 0;  // B
    long torelliComponentBound = 0; // sum (3g_i+p_i-4) + sum (p_i-3) + BP
    long torelliBound = 0;          // 3g-3-P-|M|+BP
    long johnsonComponentBound = 0; // sum (2g_i+p_i-3)
    long johnsonBound = 0;          // 2g-3+D-|M|
    long genusSum = 0;              // sum g_i
    long degreeSum = 0;             // sum p_i

    long torelliBudget() const { return torelliBound + static_cast<long>(cellDimension); }
    long johnsonBudget() const { return johnsonBound + static_cast<long>(cellDimension); }

    /** cd(I(S_g)) = 3g-5 */
    long torelliDimension() const { return 3L * genus - 5; }
    /** cd(K(S_g)) = 2g-3, also the maximal rank of an abelian subgroup */
    long johnsonDimension() const { return 2L * genus - 3; }

    bool bpdpOk() const { return boundingPairs + 2 <= span + positiveGenus; }
    bool bpdpEquality() const { return boundingPairs + 2 == span + positiveGenus; }
    bool torelliBudgetOk() const { return torelliBudget() <= torelliDimension(); }
    bool johnsonBudgetOk() const { return johnsonBudget() == johnsonDimension(); }
};

/**
 * Ledger of a valid nonseparating type in genus at least 2.
 */
inline DimensionLedger ledger(const MulticurveType& m)
{
    const auto report = validate(m);
    if (!report.ok())
        throw InvalidMulticurve(report.summary());
    if (m.surfaceGenus < 2)
        throw InvalidMulticurve("ledger needs surface genus at least 2");
    const MulticurveStats s = stats(m);
    DimensionLedger l;
    l.genus = m.surfaceGenus;
    l.curves = s.curves;
    l.span = s.span;
    l.components = *s.components;
    l.positiveGenus = *s.positiveGenus;
    l.genusZero = *s.genusZero;
    l.classes = s.classes;
    l.boundingPairs = s.boundingPairs;
    l.cellDimension = s.cellDimension;

    const long g = m.surfaceGenus;
    const long bp = static_cast<long>(l.boundingPairs);
    const long curves = static_cast<long>(l.curves);
    const auto deg = m.degrees();
    for (std::size_t i = 0; i < m.components.size(); ++i)
    {
        const long gi = m.components[i].genus, pi = deg[i];
        l.torelliComponentBound += gi > 0 ? 3 * gi + pi - 4 : pi - 3;
        l.johnsonComponentBound += 2 * gi + pi - 3;
        l.genusSum += gi;
        l.degreeSum += pi;
    }
    l.torelliComponentBound += bp;
    l.torelliBound = 3 * g - 3 - static_cast<long>(l.positiveGenus) - curves + bp;
    l.johnsonBound = 2 * g - 3 + static_cast<long>(l.span) - curves;
    return l;
}

/**
 * Compact text key of a type, e.g. "g3|v1:1,v2:1|a:v1>v2,b:v2>v1".
 */
inline std::string typeKey(const MulticurveType& m)
{
    std::string out = "g" + std::to_string(m.surfaceGenus) + "|";
    for (std::size_t i = 0; i < m.components.size(); ++i)
        out += (i ? "," : "") + m.components[i].id + ":" + std::to_string(m.components[i].genus);
    out += "|";
    for (std::size_t i = 0; i < m.curves.size(); ++i)
        out += (i ? "," : "") + m.curves[i].id + ":" + m.curves[i].tail + ">" + m.curves[i].head;
    return out;
}

namespace detail {

/**
 * Dual multigraph with vertices sorted by (genus, degree). For undirected
 * graphs arcs[i][j] = arcs[j][i] is the edge multiplicity; for directed
 * graphs arcs[i][j] counts edges i -> j. arcs[i][i] counts loops.
 */
struct DualGraph
{
    std::vector<int> genus;
    std::vector<int> degree;
    std::vector<std::vector<int>> arcs;

    std::size_t size() const { return genus.size(); }
};

/** Permutations of 0..n-1 that only move vertices within blocks of equal (genus, degree). */
inline std::vector<std::vector<std::size_t>> labelPreservingPermutations(const DualGraph& g)
{
    const std::size_t n = g.size();
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;)
    {
        std::size_t j = i;
        while (j < n && g.genus[j] == g.genus[i] && g.degree[j] == g.degree[i])
            ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    while (true)
    {
        out.push_back(perm);
        // Odometer over the blocks, each stepping through its permutations
        std::size_t b = 0;
        for (; b < blocks.size(); ++b)
        {
            auto first = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
            auto last = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
            if (std::next_permutation(first, last))
                break;
        }
        if (b == blocks.size())
            return out;
    }
}

/** Upper-triangle code of an undirected graph relabeled by perm (vertex i becomes perm[i]). */
inline std::vector<int> undirectedCode(const DualGraph& g, const std::vector<std::size_t>& perm)
{
    const std::size_t n = g.size();
    std::vector<std::size_t> inverse(n);
    for (std::size_t i = 0; i < n; ++i)
        inverse[perm[i]] = i;
    std::vector<int> code;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            code.push_back(g.arcs[inverse[i]][inverse[j]]);
    return code;
}

/** Full arc code of a directed graph relabeled by perm, optionally with all arcs reversed. */
inline std::vector<int> directedCode(const DualGraph& g, const std::vector<std::size_t>& perm, bool reversed)
{
    const std::size_t n = g.size();
    std::vector<std::size_t> inverse(n);
    for (std::size_t i = 0; i < n; ++i)
        inverse[perm[i]] = i;
    std::vector<int> code;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            code.push_back(reversed ? g.arcs[inverse[j]][inverse[i]] : g.arcs[inverse[i]][inverse[j]]);
    return code;
}

inline std::vector<std::pair<std::size_t, std::size_t>> edgeList(const DualGraph& g, bool directed)
{
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = directed ? 0 : i; j < g.size(); ++j)
            for (int k = 0; k < g.arcs[i][j]; ++k)
                edges.emplace_back(i, j);
    return edges;
}

/** Directed graph as a multicurve type with ids v1.. and e1.. in arc order. */
inline MulticurveType toType(int surfaceGenus, const DualGraph& g)
{
    MulticurveType m;
    m.surfaceGenus = surfaceGenus;
    for (std::size_t i = 0; i < g.size(); ++i)
        m.components.push_back({"v" + std::to_string(i + 1), g.genus[i]});
    std::size_t e = 0;
    // Curves in row-major arc order
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            for (int k = 0; k < g.arcs[i][j]; ++k)
                m.curves.push_back({"e" + std::to_string(++e), m.components[i].id, m.components[j].id});
    return m;
}

/** Undirected graph of a type, vertices sorted by (genus, degree). Also returns the vertex order. */
inline DualGraph fromType(const MulticurveType& m, bool directed, std::vector<std::size_t>* order = nullptr)
{
    const auto deg = m.degrees();
    std::vector<std::size_t> idx(m.components.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return std::make_pair(m.components[a].genus, deg[a]) < std::make_pair(m.components[b].genus, deg[b]);
    });
    std::vector<std::size_t> position(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        position[idx[i]] = i;
    DualGraph g;
    for (auto i : idx)
    {
        g.genus.push_back(m.components[i].genus);
        g.degree.push_back(deg[i]);
    }
    g.arcs.assign(idx.size(), std::vector<int>(idx.size(), 0));
    for (const auto& c : m.curves)
    {
        const std::size_t t = position[m.componentIndex(c.tail)], h = position[m.componentIndex(c.head)];
        if (directed || t == h)
            ++g.arcs[t][h];
        else
        {
            ++g.arcs[t][h];
            ++g.arcs[h][t];
        }
    }
    if (order)
        *order = idx;
    return g;
}

/** Directed graph from a row-major arc code. */
inline DualGraph fromDirectedCode(const DualGraph& shape, const std::vector<int>& code)
{
    DualGraph g = shape;
    const std::size_t n = shape.size();
    g.arcs.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.arcs[i][j] = code[i * n + j];
    return g;
}

/** Undirected graph from an upper-triangle code. */
inline DualGraph fromUndirectedCode(const DualGraph& shape, const std::vector<int>& code)
{
    DualGraph g = shape;
    const std::size_t n = shape.size();
    g.arcs.assign(n, std::vector<int>(n, 0));
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
        {
            g.arcs[i][j] = code[k];
            g.arcs[j][i] = code[k];
            ++k;
        }
    return g;
}

/**
 * Collect the canonical code of every connected bridgeless undirected graph
 * with the labels of `shape`.
 */
inline void fillEdges(const DualGraph& shape, const std::vector<std::vector<std::size_t>>& perms,
                      std::set<std::vector<int>>& found)
{
    const std::size_t n = shape.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            pairs.emplace_back(i, j);
    DualGraph g = shape;
    g.arcs.assign(n, std::vector<int>(n, 0));
    std::vector<int> remaining = shape.degree;

    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (k == pairs.size())
        {
            const auto edges = edgeList(g, false);
            if (!connected(n, edges) || !bridges(n, edges).empty())
                return;
            std::vector<int> best;
            for (const auto& p : perms)
            {
                auto code = undirectedCode(g, p);
                if (best.empty() || code < best)
                    best = std::move(code);
            }
            found.insert(best);
            return;
        }
        const auto [i, j] = pairs[k];
        const int most = i == j ? remaining[i] / 2 : std::min(remaining[i], remaining[j]);
        for (int mult = 0; mult <= most; ++mult)
        {
            const int used = i == j ? 2 * mult : mult;
            if (i == j)
                remaining[i] -= used;
            else
            {
                remaining[i] -= mult;
                remaining[j] -= mult;
            }
            g.arcs[i][j] = g.arcs[j][i] = mult;
            // Vertex i is finished after its last pair
            if (j != n - 1 || remaining[i] == 0)
                self(self, k + 1);
            if (i == j)
                remaining[i] += used;
            else
            {
                remaining[i] += mult;
                remaining[j] += mult;
            }
            g.arcs[i][j] = g.arcs[j][i] = 0;
        }
    };
    recurse(recurse, 0);
}

/** Nondecreasing vectors of `count` values >= `low` with the given sum. */
inline void partitions(int count, int total, int low, std::vector<int>& current, std::vector<std::vector<int>>& out)
{
    if (count == 0)
    {
        if (total == 0)
            out.push_back(current);
        return;
    }
    for (int v = low; v * count <= total; ++v)
    {
        current.push_back(v);
        partitions(count - 1, total - v, v, current, out);
        current.pop_back();
    }
}

/**
 * Canonical undirected graphs with exactly `n` components and `m` curves.
 */
inline std::vector<DualGraph> graphsWith(int genus, std::size_t n, std::size_t m)
{
    std::vector<DualGraph> out;
    const long betti = static_cast<long>(m) - static_cast<long>(n) + 1;
    const long genusTotal = genus - betti;
    if (betti < 0 || genusTotal < 0)
        return out;

    std::vector<std::vector<int>> genusVectors;
    std::vector<int> cur;
    partitions(static_cast<int>(n), static_cast<int>(genusTotal), 0, cur, genusVectors);
    for (const auto& gv : genusVectors)
    {
        // Degrees: nondecreasing within equal genus; each component has negative
        // Euler characteristic, and with more than one component degree >= 2
        std::vector<std::vector<int>> degreeVectors;
        std::vector<int> deg(n, 0);
        auto pick = [&](auto&& self, std::size_t v, int left) -> void {
            if (v == n)
            {
                if (left == 0)
                    degreeVectors.push_back(deg);
                return;
            }
            int low = std::max(3 - 2 * gv[v], n > 1 ? 2 : 0);
            low = std::max(low, 0);
            if (v > 0 && gv[v] == gv[v - 1])
                low = std::max(low, deg[v - 1]);
            for (int d = low; d <= left; ++d)
            {
                if (n == 1 && d % 2 != 0)
                    continue;
                deg[v] = d;
                self(self, v + 1, left - d);
            }
        };
        pick(pick, 0, static_cast<int>(2 * m));
        for (const auto& dv : degreeVectors)
        {
            DualGraph shape;
            shape.genus = gv;
            shape.degree = dv;
            const auto perms = labelPreservingPermutations(shape);
            std::set<std::vector<int>> found;
            fillEdges(shape, perms, found);
            for (const auto& code : found)
                out.push_back(fromUndirectedCode(shape, code));
        }
    }
    return out;
}

/** Forward orientation of an undirected graph: every edge i -> j with i < j. */
inline DualGraph forwardOrientation(const DualGraph& g)
{
    DualGraph d = g;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            d.arcs[i][j] = 0;
    return d;
}

inline std::vector<DualGraph> graphsUpTo(int genus, std::size_t components, std::size_t maxCurves)
{
    std::vector<DualGraph> out;
    for (std::size_t m = 1; m <= maxCurves; ++m)
        for (auto& g : graphsWith(genus, components, m))
            out.push_back(std::move(g));
    return out;
}

inline void checkGenus(int genus, std::size_t maxCurves)
{
    if (genus < 2)
        throw std::invalid_argument("genus must be at least 2");
    if (maxCurves > static_cast<std::size_t>(3 * genus - 3))
        throw std::invalid_argument("a multicurve in genus " + std::to_string(genus) + " has at most " +
                                    std::to_string(3 * genus - 3) + " curves");
}

}   // namespace detail

/**
 * Unoriented types with at most maxCurves curves, one representative per
 * isomorphism class, every curve oriented from the lower to the higher
 * component. Sorted by component count, then curve count, then canonical code.
 */
inline std::vector<MulticurveType> enumerateGraphs(int genus, std::size_t maxCurves)
{
    detail::checkGenus(genus, maxCurves);
    std::vector<MulticurveType> out;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(2 * genus - 2); ++n)
        for (const auto& g : detail::graphsUpTo(genus, n, maxCurves))
            out.push_back(detail::toType(genus, detail::forwardOrientation(g)));
    return out;
}

/**
 * All orientations of a type up to isomorphism and global reversal, in
 * canonical order. Loops are left as they are.
 */
inline std::vector<MulticurveType> orientationClasses(const MulticurveType& m)
{
    const detail::DualGraph undirected = detail::fromType(m, false);
    const auto perms = detail::labelPreservingPermutations(undirected);
    const std::size_t n = undirected.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (undirected.arcs[i][j] > 0)
                pairs.emplace_back(i, j);

    std::set<std::vector<int>> found;
    detail::DualGraph d = undirected;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                d.arcs[i][j] = 0;
    auto recurse = [&](auto&& self, std::size_t k) -> void {
        if (k == pairs.size())
        {
            std::vector<int> best;
            for (const auto& p : perms)
                for (bool reversed : {false, true})
                {
                    auto code = detail::directedCode(d, p, reversed);
                    if (best.empty() || code < best)
                        best = std::move(code);
                }
            found.insert(best);
            return;
        }
        const auto [i, j] = pairs[k];
        const int mult = undirected.arcs[i][j];
        for (int forward = 0; forward <= mult; ++forward)
        {
            d.arcs[i][j] = forward;
            d.arcs[j][i] = mult - forward;
            self(self, k + 1);
        }
    };
    recurse(recurse, 0);

    std::vector<MulticurveType> out;
    for (const auto& code : found)
        out.push_back(detail::toType(m.surfaceGenus, detail::fromDirectedCode(undirected, code)));
    return out;
}

/**
 * Every oriented type: each unoriented type with all its orientation classes.
 */
inline std::vector<MulticurveType> enumerateTypes(int genus, std::size_t maxCurves)
{
    std::vector<MulticurveType> out;
    for (const auto& m : enumerateGraphs(genus, maxCurves))
        for (auto& o : orientationClasses(m))
            out.push_back(std::move(o));
    return out;
}

/**
 * Canonical key of an unoriented type, equal for isomorphic types.
 */
inline std::string canonicalKey(const MulticurveType& m)
{
    const detail::DualGraph g = detail::fromType(m, false);
    std::vector<int> best;
    for (const auto& p : detail::labelPreservingPermutations(g))
    {
        auto code = detail::undirectedCode(g, p);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    std::ostringstream out;
    out << "g" << m.surfaceGenus << ":";
    for (std::size_t i = 0; i < g.size(); ++i)
        out << (i ? "," : "") << g.genus[i] << "/" << g.degree[i];
    out << ":";
    for (std::size_t i = 0; i < best.size(); ++i)
        out << (i ? "," : "") << best[i];
    return out.str();
}

/** One failed check on one type. */
struct AuditViolation
{
    std::string type;       // typeKey
    std::string check;
    std::string detail;
};

struct AuditReport
{
    int genus = 0;
    std::size_t maxCurves = 0;
    std::size_t typesChecked = 0;
    std::vector<MulticurveType> types;      // types with a ledger, parallel to ledgers
    std::vector<DimensionLedger> ledgers;
    std::vector<AuditViolation> violations;
    std::size_t excluded = 0;               // types failing validation, kept out of the inequality checks
    std::size_t equalityCases = 0;          // BP + 2 == D + P

    bool ok() const { return violations.empty(); }
};

/**
 * Audit arbitrary types. A type that fails validation in nonseparating mode
 * (for instance one with a separating curve) is reported as a structural
 * violation and left out of the inequality checks.
 */
inline AuditReport auditTypes(const std::vector<MulticurveType>& types)
{
    AuditReport r;
    for (const auto& m : types)
    {
        ++r.typesChecked;
        const std::string key = typeKey(m);
        const auto report = validate(m, CurveMode::allowSeparating);
        if (!report.ok())
        {
            r.violations.push_back({key, "valid", report.summary()});
            ++r.excluded;
            continue;
        }
        // A separating curve is null-homologous
        const HomologyQuotient q(relationMatrix(m, CurveMode::allowSeparating));
        bool nullCurve = false;
        for (std::size_t i = 0; i < m.curves.size(); ++i)
            if (isZeroVector(q.classOfCurve(i)))
            {
                r.violations.push_back({key, "nonseparating", "curve \"" + m.curves[i].id + "\" is null-homologous"});
                nullCurve = true;
            }
        if (nullCurve || m.surfaceGenus < 2)
        {
            ++r.excluded;
            continue;
        }

        const DimensionLedger l = ledger(m);
        auto check = [&](bool passed, const std::string& name, const std::string& detail) {
            if (!passed)
                r.violations.push_back({key, name, detail});
        };
        const long g = l.genus;
        check(l.components - 1 == l.curves - l.span, "rank", "N-1 != |M|-D");
        check(static_cast<long>(l.span) == g - l.genusSum, "span", "D != g - sum g_i");
        check(l.degreeSum == 2 * static_cast<long>(l.curves), "degree_sum", "sum p_i != 2|M|");
        check(l.torelliComponentBound == l.torelliBound, "torelli_identity",
              std::to_string(l.torelliComponentBound) + " != " + std::to_string(l.torelliBound));
        check(l.johnsonComponentBound == l.johnsonBound, "johnson_identity",
              std::to_string(l.johnsonComponentBound) + " != " + std::to_string(l.johnsonBound));
        check(l.bpdpOk(), "bpdp", "BP+2 > D+P");
        check(l.torelliBudgetOk(), "torelli_budget",
              std::to_string(l.torelliBudget()) + " > " + std::to_string(l.torelliDimension()));
        check(l.johnsonBudgetOk(), "johnson_budget",
              std::to_string(l.johnsonBudget()) + " != " + std::to_string(l.johnsonDimension()));
        check(l.bpdpOk() == l.torelliBudgetOk(), "budget_equivalence", "torelli budget and bpdp disagree");
        if (l.bpdpEquality())
            ++r.equalityCases;
        r.types.push_back(m);
        r.ledgers.push_back(l);
    }
    return r;
}

/**
 * Ledger and checks for every unoriented type of genus g with at most
 * maxCurves curves. Statistics do not depend on orientation.
 */
inline AuditReport verifyInequalities(int genus, std::size_t maxCurves)
{
    AuditReport r = auditTypes(enumerateGraphs(genus, maxCurves));
    r.genus = genus;
    r.maxCurves = maxCurves;
    return r;
}

/**
 * Fixed CSV header of the audit report.
 */
inline std::string auditCsvHeader()
{
    return "g,|M|,D,N,P,Z,C,BP,B,torelli_bound,johnson_bound,bpdp_ok,torelli_budget_ok,johnson_budget_ok";
}

inline std::string auditCsvRow(const DimensionLedger& l)
{
    auto b = [](bool v) { return v ? "true" : "false"; };
    std::ostringstream out;
    out << l.genus << ',' << l.curves << ',' << l.span << ',' << l.components << ',' << l.positiveGenus << ','
        << l.genusZero << ',' << l.classes << ',' << l.boundingPairs << ',' << l.cellDimension << ','
        << l.torelliBound << ',' << l.johnsonBound << ',' << b(l.bpdpOk()) << ',' << b(l.torelliBudgetOk()) << ','
        << b(l.johnsonBudgetOk());
    return out.str();
}

inline std::string auditCsv(const AuditReport& r)
{
    std::string out = auditCsvHeader() + "\n";
    for (const auto& l : r.ledgers)
        out += auditCsvRow(l) + "\n";
    return out;
}

/** The all-ones reference cycle on a type. */
inline RelationPresentation sumOfCurves(const MulticurveType& m)
{
    return presentation(m, IntVector(m.curves.size(), Integer(1)));
}

/**
 * True iff the oriented type is admissible for x = the sum of its curves.
 */
inline bool admissibleForSum(const MulticurveType& m)
{
    const auto p = sumOfCurves(m);
    if (isZeroVector(HomologyQuotient(p.relations).classOf(std::span<const Integer>(p.reference))))
        return false;
    return isAdmissible(p);
}

/**
 * Largest B over oriented types admissible for the sum of their curves.
 * Component counts are tried from the largest (2g-2) down, and B = N - 1 on
 * every type with N components, so the first count with an admissible type
 * gives the maximum.
 */
inline std::size_t complexDimension(int genus, std::optional<std::size_t> maxCurves = std::nullopt)
{
    const std::size_t bound = maxCurves.value_or(static_cast<std::size_t>(3 * genus - 3));
    detail::checkGenus(genus, bound);
    for (std::size_t n = static_cast<std::size_t>(2 * genus - 2); n >= 1; --n)
        for (const auto& g : detail::graphsUpTo(genus, n, bound))
            for (const auto& oriented : orientationClasses(detail::toType(genus, detail::forwardOrientation(g))))
                if (admissibleForSum(oriented))
                    return stats(oriented).cellDimension;
    return 0;
}

/** Oriented types admissible for x = sum of curves, with their presentations. */
struct AdmissibleSweep
{
    std::vector<MulticurveType> types;
    std::vector<RelationPresentation> presentations;
    std::size_t orientations = 0;
    std::size_t notAdmissible = 0;
    std::size_t unbounded = 0;      // admissible, positive representatives unbounded
};

inline AdmissibleSweep admissibleTypes(int genus, std::size_t maxCurves)
{
    AdmissibleSweep s;
    for (const auto& m : enumerateTypes(genus, maxCurves))
    {
        ++s.orientations;
        if (!admissibleForSum(m))
        {
            ++s.notAdmissible;
            continue;
        }
        auto p = sumOfCurves(m);
        if (hasNonnegativeRelation(p.relations))
            ++s.unbounded;
        s.types.push_back(m);
        s.presentations.push_back(std::move(p));
    }
    return s;
}

}   // namespace cyclecx

#endif
