#include "braidcoh/diagram.hpp"

#include <algorithm>

namespace braidcoh {

Diagram Diagram::make(std::string name, std::vector<Obj> vertices, std::vector<Edge> edges) {
    const std::size_t n = vertices.size();
    if (n == 0) throw NotACycle("a cycle needs at least one vertex");
    if (edges.size() != n)
        throw NotACycle("a cycle on " + std::to_string(n) + " vertices needs " +
                        std::to_string(n) + " edges, got " + std::to_string(edges.size()));

    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (edges[e].src >= n || edges[e].dst >= n)
            throw NotACycle("edge " + std::to_string(e) + " references a missing vertex");
        incident[edges[e].src].push_back(e);
        if (edges[e].dst != edges[e].src) incident[edges[e].dst].push_back(e);
        else incident[edges[e].src].push_back(e);  // loop occupies both slots
    }
    for (std::size_t v = 0; v < n; ++v)
        if (incident[v].size() != 2)
            throw NotACycle("vertex " + std::to_string(v) + " has degree " +
                            std::to_string(incident[v].size()) + ", need 2");

    // walk the cycle from vertex 0; the lowest-numbered incident edge fixes
    // the clockwise direction
    Diagram d;
    d.order_.reserve(n);
    d.step_.reserve(n);
    std::vector<bool> seen(n, false);
    std::size_t v = 0;
    std::size_t via = *std::min_element(incident[0].begin(), incident[0].end());
    for (std::size_t k = 0; k < n; ++k) {
        d.order_.push_back(v);
        seen[v] = true;
        const Edge& e = edges[via];
        bool forward = (e.src == v);
        std::size_t w = forward ? e.dst : e.src;
        d.step_.emplace_back(via, forward);
        // leave w by its other incident slot
        std::size_t next = (incident[w][0] == via) ? incident[w][1] : incident[w][0];
        v = w;
        via = next;
    }
    if (v != 0) throw NotACycle("edges do not close into a single cycle");
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw NotACycle("edges split into more than one cycle");

    d.pos_.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) d.pos_[d.order_[k]] = k;

    for (std::size_t e = 0; e < edges.size(); ++e) {
        Ends be;
        try {
            be = ends(edges[e].label);
        } catch (const TypeError& err) {
            throw EdgeTypeMismatch(e, err.what());
        }
        if (!obj_equal(be.dom, vertices[edges[e].src]))
            throw EdgeTypeMismatch(e, "label domain " + to_string(be.dom) +
                                          " does not match source vertex " +
                                          to_string(vertices[edges[e].src]));
        if (!obj_equal(be.cod, vertices[edges[e].dst]))
            throw EdgeTypeMismatch(e, "label codomain " + to_string(be.cod) +
                                          " does not match target vertex " +
                                          to_string(vertices[edges[e].dst]));
    }

    d.name_ = std::move(name);
    d.vertices_ = std::move(vertices);
    d.edges_ = std::move(edges);
    return d;
}

namespace {

Morph fold_steps(const std::vector<Morph>& parts, const Obj& at) {
    if (parts.empty()) return id(at);
    Morph word = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) word = comp(parts[i], word);
    return word;
}

}  // namespace

Morph Diagram::path_morphism(std::size_t x, std::size_t y, Orientation o) const {
    const std::size_t n = vertices_.size();
    if (x >= n || y >= n) throw std::out_of_range("vertex index out of range");
    if (x == y) return id(vertices_[x]);
    std::vector<Morph> parts;
    std::size_t p = pos_[x];
    while (order_[p] != y) {
        if (o == Orientation::CW) {
            auto [e, forward] = step_[p];
            parts.push_back(forward ? edges_[e].label : inv(edges_[e].label));
            p = (p + 1) % n;
        } else {
            std::size_t q = (p + n - 1) % n;
            auto [e, forward] = step_[q];
            parts.push_back(forward ? inv(edges_[e].label) : edges_[e].label);
            p = q;
        }
    }
    return fold_steps(parts, vertices_[x]);
}

Morph Diagram::full_cycle(std::size_t base, Orientation o) const {
    const std::size_t n = vertices_.size();
    if (base >= n) throw std::out_of_range("vertex index out of range");
    std::vector<Morph> parts;
    std::size_t p = pos_[base];
    for (std::size_t k = 0; k < n; ++k) {
        if (o == Orientation::CW) {
            auto [e, forward] = step_[p];
            parts.push_back(forward ? edges_[e].label : inv(edges_[e].label));
            p = (p + 1) % n;
        } else {
            std::size_t q = (p + n - 1) % n;
            auto [e, forward] = step_[q];
            parts.push_back(forward ? inv(edges_[e].label) : edges_[e].label);
            p = q;
        }
    }
    return fold_steps(parts, vertices_[base]);
}

CommuteReport check_commutes(const Diagram& d, const GradedModel& model, const Assignment& asg,
                             std::size_t base, Orientation o) {
    CommuteReport rep;
    rep.base_vertex = base;
    rep.orientation = o;

    rep.vacuous = true;
    for (const Edge& e : d.edges())
        if (!interpret_morphism(e.label, asg, model).is_identity()) {
            rep.vacuous = false;
            break;
        }
    for (const Obj& v : d.vertices())
        rep.max_dim = std::max(rep.max_dim, interpret_object(v, asg).size());

    PolyMatrix loop = interpret_morphism(d.full_cycle(base, o), asg, model);
    PolyMatrix idm = PolyMatrix::identity(loop.rows());
    rep.commutes = matrix_equal(loop, idm);
    if (!rep.commutes) {
        for (std::size_t r = 0; r < loop.rows() && !rep.witness; ++r)
            for (std::size_t c = 0; c < loop.cols(); ++c)
                if (!(loop.at(r, c) == idm.at(r, c))) {
                    rep.witness = Witness{r, c, loop.at(r, c), idm.at(r, c)};
                    break;
                }
    }
    return rep;
}

}  // namespace braidcoh
