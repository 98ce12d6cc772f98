#pragma once

#include <utility>
#include <vector>

#include "parabolic/model_field.hpp"

namespace parabolic {

using Edge = std::pair<int, int>;

struct DSInvariant {
  std::vector<int> order;  // trunk, oriented so that order.front() < order.back()
  int attachment = -1;     // landing point of the outgoing separatrix along arg z = 0
};

// Edges joining singularities whose period-gon sides have overlapping
// imaginary-axis projections. Throws AtBifurcation when two vertices share a height.
std::vector<Edge> projection_edges(const ModelField& field, double tol = 1e-9);

// Edges found by integrating trajectories leaving every repelling singularity.
std::vector<Edge> integration_edges(const ModelField& field, int samples = 128);

// Linear order of a trunk (path graph) on n vertices. Throws ValidationMismatch
// when the edges do not form a path through every vertex.
std::vector<int> trunk_order(int n, const std::vector<Edge>& edges);

std::vector<Edge> trunk_edges(const std::vector<int>& order);

// Whether some rotation makes the real parts strictly increase along `order`.
bool is_zigzag(const std::vector<Complex>& points, const std::vector<int>& order);

bool same_trunk(const std::vector<int>& a, const std::vector<int>& b);

DSInvariant ds_invariant(const ModelField& field, bool validate = false);

// Keeps the segments (order[i], order[i+1]) with i ≡ parity (mod 2), swaps the
// two ends of each, keeps segment order.
std::vector<int> erase_and_swap(const std::vector<int>& order, int parity);

// Invariants at θ_j − probe and θ_j + probe, |ε| = 1; probe is a fraction of π/k.
std::pair<DSInvariant, DSInvariant> ds_transition(int k, int j, double probe = 0.05);

}  // namespace parabolic
