#pragma once

#include "braidcoh/expr.hpp"
#include "braidcoh/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace braidcoh {

class NotACycle : public std::runtime_error {
public:
    explicit NotACycle(const std::string& what) : std::runtime_error(what) {}
};

class EdgeTypeMismatch : public std::runtime_error {
public:
    EdgeTypeMismatch(std::size_t e, const std::string& what)
        : std::runtime_error("edge " + std::to_string(e) + ": " + what), edge(e) {}
    std::size_t edge;
};

struct Edge {
    std::size_t src, dst;
    Morph label;
};

enum class Orientation { CW, CCW };

/* A labeled cycle diagram: the undirected graph of the edges must be one
   simple cycle through every vertex (vertex count equals edge count; a
   single vertex with a loop and two vertices with parallel edges count).
   Every label must typecheck from its src object to its dst object.

   Validation fixes a traversal order once: clockwise is the direction taken
   from vertex 0 along its lowest-numbered incident edge. */
class Diagram {
public:
    static Diagram make(std::string name, std::vector<Obj> vertices, std::vector<Edge> edges);

    const std::string& name() const { return name_; }
    const std::vector<Obj>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /* Word of the arc from vertex x to vertex y walking in the given
       orientation; edges met against their printed direction contribute
       inverses. x == y gives the empty arc, id(vertices[x]). */
    Morph path_morphism(std::size_t x, std::size_t y, Orientation o) const;

    // word of the full turn starting and ending at base
    Morph full_cycle(std::size_t base, Orientation o) const;

private:
    Diagram() = default;
    std::string name_;
    std::vector<Obj> vertices_;
    std::vector<Edge> edges_;
    // cycle order: pos_[v] is the position of v along the clockwise walk
    // from vertex 0; step_[k] is the edge taken from position k to k+1 and
    // whether the walk crosses it in its printed direction.
    std::vector<std::size_t> order_, pos_;
    std::vector<std::pair<std::size_t, bool>> step_;
};

struct Witness {
    std::size_t row, col;
    Laurent lhs, rhs;
};

struct CommuteReport {
    bool commutes = false;
    std::size_t base_vertex = 0;
    Orientation orientation = Orientation::CW;
    bool vacuous = false;     // every edge evaluates to an identity matrix
    std::size_t max_dim = 0;  // largest vertex basis dimension
    std::optional<Witness> witness;
};

/* Evaluates the full turn at the base vertex and compares it exactly to the
   identity; the diagram commutes iff they agree. On mismatch the witness is
   the first row-major disagreeing entry (loop value, identity value). */
CommuteReport check_commutes(const Diagram& d, const GradedModel& model, const Assignment& asg,
                             std::size_t base = 0, Orientation o = Orientation::CW);

}  // namespace braidcoh
