#include "parabolic/ds_invariant.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "parabolic/error.hpp"
#include "parabolic/trajectory.hpp"

namespace parabolic {

namespace {

Edge normalized(int a, int b) { return a < b ? Edge(a, b) : Edge(b, a); }

}  // namespace

std::vector<Edge> projection_edges(const ModelField& field, double tol) {
  const HomoclinicReport report = is_homoclinic(field, tol);
  if (report.homoclinic) throw Error(ErrorCode::AtBifurcation, "two period-gon vertices share a height");
  const PeriodGon gon = periods(field);
  const int n = field.k + 1;
  std::vector<double> lo(n), hi(n);
  for (int l = 0; l < n; ++l) {
    const double a = gon.vertices[(l + n - 1) % n].imag();
    const double b = gon.vertices[l].imag();
    lo[l] = std::min(a, b);
    hi[l] = std::max(a, b);
  }
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::min(hi[a], hi[b]) > std::max(lo[a], lo[b])) edges.emplace_back(a, b);
  return edges;
}

std::vector<Edge> integration_edges(const ModelField& field, int samples) {
  const std::vector<Complex> sing = singularities(field);
  const double r0 = 1e-3 * field.scale();
  std::set<Edge> found;
  for (std::size_t a = 0; a < sing.size(); ++a) {
    if (field.derivative(sing[a]).real() <= 0) continue;
    for (int s = 0; s < samples; ++s) {
      const Complex z0 = sing[a] + std::polar(r0, 2 * pi * (s + 0.5) / samples);
      const Trajectory t = integrate(field, z0, 1);
      if (t.termination == Termination::LandedAtSingularity && t.singularity != int(a))
        found.insert(normalized(int(a), t.singularity));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<int> trunk_order(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  if (static_cast<int>(edges.size()) != n - 1) throw Error(ErrorCode::ValidationMismatch, "edge count is not n-1");
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 2) throw Error(ErrorCode::ValidationMismatch, "vertex of valence above 2");
    if (adj[v].size() <= 1 && (start < 0)) start = v;
  }
  if (start < 0) throw Error(ErrorCode::ValidationMismatch, "edges form a cycle");
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int w : adj[cur])
      if (w != prev) next = w;
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) throw Error(ErrorCode::ValidationMismatch, "trunk is disconnected");
  if (order.front() > order.back()) std::reverse(order.begin(), order.end());
  return order;
}

std::vector<Edge> trunk_edges(const std::vector<int>& order) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) edges.push_back(normalized(order[i], order[i + 1]));
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool is_zigzag(const std::vector<Complex>& points, const std::vector<int>& order) {
  std::vector<double> beta;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) beta.push_back(std::arg(points[order[i + 1]] - points[order[i]]));
  if (beta.empty()) return true;
  std::vector<double> candidates;
  for (double b : beta)
    for (double off : {-0.5 * pi + 1e-9, 0.0, 0.5 * pi - 1e-9}) candidates.push_back(-b + off);
  for (double phi : candidates) {
    const Complex rot = std::polar(1.0, phi);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < order.size() && ok; ++i)
      ok = (rot * (points[order[i + 1]] - points[order[i]])).real() > 0;
    if (ok) return true;
  }
  return false;
}

bool same_trunk(const std::vector<int>& a, const std::vector<int>& b) {
  if (a == b) return true;
  return std::equal(a.begin(), a.end(), b.rbegin(), b.rend());
}

DSInvariant ds_invariant(const ModelField& field, bool validate) {
  DSInvariant inv;
  const std::vector<Edge> edges = projection_edges(field);
  inv.order = trunk_order(field.k + 1, edges);
  if (validate) {
    const std::vector<Edge> integrated = integration_edges(field);
    if (integrated != edges) throw Error(ErrorCode::ValidationMismatch, "integrated trajectories disagree with projections");
  }
  const double rho = field.scale();
  const Complex z0 = separatrix_launch_point(field, 0, 3 * rho);
  const Trajectory sep = integrate(field, z0, -1);
  if (sep.termination != Termination::LandedAtSingularity)
    throw Error(ErrorCode::ValidationMismatch, "distinguished separatrix does not land");
  inv.attachment = sep.singularity;
  return inv;
}

std::vector<int> erase_and_swap(const std::vector<int>& order, int parity) {
  std::vector<int> out = order;
  for (std::size_t i = parity % 2; i + 1 < out.size(); i += 2) std::swap(out[i], out[i + 1]);
  return out;
}

std::pair<DSInvariant, DSInvariant> ds_transition(int k, int j, double probe) {
  if (j < 0 || j >= 2 * k) throw Error(ErrorCode::InvalidArgument, "angle index out of range");
  const double theta = bifurcation_angles(k)[j];
  const double offset = probe * pi / k;
  return {ds_invariant(ModelField::polar(k, 1.0, theta - offset)),
          ds_invariant(ModelField::polar(k, 1.0, theta + offset))};
}

}  // namespace parabolic
