#include "procphi/classical/emd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "procphi/errors.hpp"

namespace procphi::classical {
namespace {

constexpr std::size_t kDegenerateRunBeforeBland = 64;

struct Basis {
  std::size_t m, n;
  std::vector<TransportPlan::Cell> cells;
  std::vector<char> is_basic;  // m x n

  bool basic(std::size_t i, std::size_t j) const { return is_basic[i * n + j] != 0; }
};

Basis northwest_corner(const TransportProblem& p) {
  const std::size_t m = p.supply.size(), n = p.demand.size();
  Basis b{m, n, {}, std::vector<char>(m * n, 0)};
  std::vector<double> ra = p.supply, rb = p.demand;
  std::size_t i = 0, j = 0;
  while (true) {
    const double x = std::min(ra[i], rb[j]);
    b.cells.push_back({i, j, x});
    b.is_basic[i * n + j] = 1;
    ra[i] -= x;
    rb[j] -= x;
    if (i == m - 1 && j == n - 1) break;
    if (i == m - 1)
      ++j;
    else if (j == n - 1)
      ++i;
    else if (ra[i] <= rb[j])
      ++i;
    else
      ++j;
  }
  return b;
}

// Tree nodes: rows 0..m-1, columns m..m+n-1; one edge per basic cell.
void potentials(const TransportProblem& p, const Basis& b, std::vector<double>& u,
                std::vector<double>& v) {
  const std::size_t m = b.m, n = b.n;
  std::vector<std::vector<std::size_t>> adj(m + n);
  for (std::size_t e = 0; e < b.cells.size(); ++e) {
    adj[b.cells[e].row].push_back(e);
    adj[m + b.cells[e].col].push_back(e);
  }
  std::vector<char> seen(m + n, 0);
  u.assign(m, 0.0);
  v.assign(n, 0.0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t node = stack.back();
    stack.pop_back();
    for (std::size_t e : adj[node]) {
      const auto& c = b.cells[e];
      const double cij = p.cost[c.row * n + c.col];
      const std::size_t other = node < m ? m + c.col : c.row;
      if (seen[other]) continue;
      seen[other] = 1;
      if (node < m)
        v[c.col] = cij - u[c.row];
      else
        u[c.row] = cij - v[c.col];
      stack.push_back(other);
    }
  }
}

// Edge path through the basis tree from column node `col` to row node `row`.
std::vector<std::size_t> tree_path(const Basis& b, std::size_t col, std::size_t row) {
  const std::size_t m = b.m, n = b.n;
  std::vector<std::vector<std::size_t>> adj(m + n);
  for (std::size_t e = 0; e < b.cells.size(); ++e) {
    adj[b.cells[e].row].push_back(e);
    adj[m + b.cells[e].col].push_back(e);
  }
  const std::size_t start = m + col;
  std::vector<std::size_t> via(m + n, std::numeric_limits<std::size_t>::max());
  std::vector<char> seen(m + n, 0);
  std::vector<std::size_t> queue{start};
  seen[start] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t node = queue[q];
    if (node == row) break;
    for (std::size_t e : adj[node]) {
      const auto& c = b.cells[e];
      const std::size_t other = node < m ? m + c.col : c.row;
      if (seen[other]) continue;
      seen[other] = 1;
      via[other] = e;
      queue.push_back(other);
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t node = row; node != start;) {
    const std::size_t e = via[node];
    path.push_back(e);
    const auto& c = b.cells[e];
    node = node < m ? m + c.col : c.row;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

TransportPlan solve_transport(const TransportProblem& p) {
  const std::size_t m = p.supply.size(), n = p.demand.size();
  if (m == 0 || n == 0) throw DomainError("transport problem with empty side");
  if (p.cost.size() != m * n) throw DomainError("transport cost table has the wrong size");

  Basis b = northwest_corner(p);
  double max_cost = 0.0;
  for (double c : p.cost) max_cost = std::max(max_cost, std::abs(c));
  const double eps = 1e-12 * (1.0 + max_cost);

  TransportPlan plan;
  std::vector<double> u, v;
  std::size_t degenerate_run = 0;
  const std::size_t max_pivots = 50 * (m + n) * (m + n) + 1000;
  while (plan.pivots < max_pivots) {
    potentials(p, b, u, v);
    const bool bland = degenerate_run >= kDegenerateRunBeforeBland;
    std::size_t ei = m, ej = n;
    double best = -eps;
    for (std::size_t i = 0; i < m && !(bland && ei < m); ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (b.basic(i, j)) continue;
        const double r = p.cost[i * n + j] - u[i] - v[j];
        if (r < best) {
          best = r;
          ei = i;
          ej = j;
          if (bland) break;
        }
      }
    }
    if (ei == m) break;

    // Cycle: entering cell is +, path edges from column ej to row ei alternate -, +, ...
    const auto path = tree_path(b, ej, ei);
    double theta = std::numeric_limits<double>::infinity();
    std::size_t leave = b.cells.size();
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const auto& c = b.cells[path[k]];
      const bool better =
          c.flow < theta ||
          (bland && c.flow == theta && (c.row * n + c.col) < (b.cells[leave].row * n + b.cells[leave].col));
      if (better) {
        theta = c.flow;
        leave = path[k];
      }
    }
    for (std::size_t k = 0; k < path.size(); ++k) {
      auto& c = b.cells[path[k]];
      c.flow = (k % 2 == 0) ? c.flow - theta : c.flow + theta;
    }
    b.cells[leave].flow = 0.0;
    auto& out = b.cells[leave];
    b.is_basic[out.row * n + out.col] = 0;
    out = {ei, ej, theta};
    b.is_basic[ei * n + ej] = 1;

    degenerate_run = theta == 0.0 ? degenerate_run + 1 : 0;
    ++plan.pivots;
  }

  for (const auto& c : b.cells) plan.cost += c.flow * p.cost[c.row * n + c.col];
  plan.cost = std::max(plan.cost, 0.0);
  plan.basis = std::move(b.cells);
  return plan;
}

double total_variation(std::span<const double> s, std::span<const double> t) {
  double acc = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) acc += std::abs(s[i] - t[i]);
  return 0.5 * acc;
}

double emd(const Process& s, const Process& t) {
  if (s.rows() != 1 || t.rows() != 1) throw DomainError("emd expects states");
  if (!(s.cod() == t.cod())) throw DomainError("emd: states live on different objects");
  if (!is_causal(s) || !is_causal(t)) throw DomainError("emd: states must be causal");
  if (s.table().size() == t.table().size() &&
      std::equal(s.table().begin(), s.table().end(), t.table().begin()))
    return 0.0;

  const Object& a = s.cod();
  std::vector<std::size_t> src, dst;
  TransportProblem p;
  for (std::size_t x = 0; x < a.dim(); ++x) {
    if (s(0, x) > 0.0) {
      src.push_back(x);
      p.supply.push_back(s(0, x));
    }
    if (t(0, x) > 0.0) {
      dst.push_back(x);
      p.demand.push_back(t(0, x));
    }
  }
  p.cost.resize(src.size() * dst.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < dst.size(); ++j)
      p.cost[i * dst.size() + j] = a.ground_distance(src[i], dst[j]);
  return solve_transport(p).cost;
}

}  // namespace procphi::classical
