#include "lcps/chain_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lcps {

namespace {

template <typename Coord>
void counting_pass(std::vector<Point4>& points, std::vector<Point4>& scratch, Coord coord, bool descending)
{
    if (points.empty())
        return;
    auto [lo_it, hi_it] = std::minmax_element(points.begin(), points.end(),
                                              [&](const Point4& p, const Point4& q) { return coord(p) < coord(q); });
    const std::int64_t lo = coord(*lo_it);
    const std::int64_t hi = coord(*hi_it);
    const std::size_t range = static_cast<std::size_t>(hi - lo + 1);
    auto bucket = [&](const Point4& p) {
        const auto off = static_cast<std::size_t>(coord(p) - lo);
        return descending ? range - 1 - off : off;
    };

    std::vector<std::size_t> start(range + 1, 0);
    for (const auto& p : points)
        ++start[bucket(p) + 1];
    for (std::size_t t = 0; t < range; ++t)
        start[t + 1] += start[t];
    scratch.resize(points.size());
    for (const auto& p : points)
        scratch[start[bucket(p)]++] = p;
    points.swap(scratch);
}

} // namespace

PointGroups sort_points(std::vector<Point4> points)
{
    std::vector<Point4> scratch;
    counting_pass(points, scratch, [](const Point4& p) { return p.c; }, false);
    counting_pass(points, scratch, [](const Point4& p) { return p.b; }, false);
    counting_pass(points, scratch, [](const Point4& p) { return p.a; }, false);
    counting_pass(points, scratch, [](const Point4& p) { return p.d; }, true);

    PointGroups out;
    out.points = std::move(points);
    for (std::size_t t = 0; t < out.points.size(); ++t)
        if (t == 0 || out.points[t].d != out.points[t - 1].d)
            out.starts.push_back(t);
    if (!out.points.empty())
        out.starts.push_back(out.points.size());
    return out;
}

std::vector<std::size_t> Chain::walk() const
{
    std::vector<std::size_t> path;
    for (auto at = best; at; at = nodes[*at].successor)
        path.push_back(*at);
    return path;
}

Chain longest_chain(std::vector<Point4> points)
{
    std::vector<Key3> keys;
    keys.reserve(points.size());
    for (const auto& p : points)
        keys.push_back(Key3{p.a, p.b, p.c});
    DominanceMaxIndex index(std::move(keys));

    const PointGroups groups = sort_points(std::move(points));

    Chain chain;
    chain.nodes.reserve(groups.points.size());
    for (std::size_t g = 0; g < groups.group_count(); ++g) {
        const std::size_t first = chain.nodes.size();
        for (const Point4& p : groups.group(g)) {
            const auto inner = index.query_max_strict(Key3{p.a, p.b, p.c});
            ChainNode node{p, p.weight + inner.value, std::nullopt};
            if (inner.node != kNoNode)
                node.successor = static_cast<std::size_t>(inner.node);
            chain.nodes.push_back(node);
            if (!chain.best || node.value > chain.nodes[*chain.best].value)
                chain.best = chain.nodes.size() - 1;
        }
        for (std::size_t t = first; t < chain.nodes.size(); ++t) {
            const Point4& p = chain.nodes[t].point;
            index.insert_or_raise(Key3{p.a, p.b, p.c}, chain.nodes[t].value, static_cast<NodeId>(t));
        }
    }
    return chain;
}

CpsResult geometric_lcps(const Seq& x, const Seq& y, const GeomLimits& limits)
{
    const MatchSet ms = build_match_set(x, y, limits.max_matches);
    const std::vector<Rect> rects = enumerate_rectangles(ms, limits.max_rects);
    const Chain chain = longest_chain(rects_to_points(rects));

    std::string left, center;
    std::vector<Pos> lx, ly, rx, ry;
    Pos cx = 0, cy = 0;
    for (std::size_t at : chain.walk()) {
        const Rect& r = rects[chain.nodes[at].point.source];
        if (r.degenerate()) {
            if (!center.empty())
                throw std::logic_error("chain holds more than one centre");
            center.push_back(static_cast<char>(r.sigma));
            cx = r.lower.i;
            cy = r.lower.j;
            continue;
        }
        if (!center.empty())
            throw std::logic_error("chain continues past its centre");
        left.push_back(static_cast<char>(r.sigma));
        lx.push_back(r.lower.i);
        ly.push_back(r.lower.j);
        rx.push_back(r.upper.i);
        ry.push_back(r.upper.j);
    }

    CpsResult out;
    out.z = left + center + std::string(left.rbegin(), left.rend());
    out.x_indices = lx;
    out.y_indices = ly;
    if (!center.empty()) {
        out.x_indices.push_back(cx);
        out.y_indices.push_back(cy);
    }
    out.x_indices.insert(out.x_indices.end(), rx.rbegin(), rx.rend());
    out.y_indices.insert(out.y_indices.end(), ry.rbegin(), ry.rend());

    for (std::size_t t = 1; t < out.length(); ++t)
        if (out.x_indices[t] <= out.x_indices[t - 1] || out.y_indices[t] <= out.y_indices[t - 1])
            throw std::logic_error("successor chain produced a non-increasing embedding");
    return out;
}

} // namespace lcps
