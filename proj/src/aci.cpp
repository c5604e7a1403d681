#include "lefschetz/aci.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "lefschetz/error.hpp"
#include "lefschetz/lefschetz.hpp"

namespace lefschetz {

namespace {

auto binomial(unsigned n, long k) -> BigInt {
  if (k < 0 || k > static_cast<long>(n))
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
  return r;
}

void require_conditions(const AciData &data) {
  if (!data.all_conditions())
    throw Error(ErrorCode::ConditionsNotMet,
                "conditions (i)-(v) do not all hold for " + data.ideal().to_string());
}

auto to_point(double i, double j, double k) -> RegionGraph::Point {
  (void)i;
  return {j + k / 2.0, k * std::sqrt(3.0) / 2.0};
}

auto centroid(const std::array<RegionGraph::Point, 3> &t) -> RegionGraph::Point {
  return {(t[0].x + t[1].x + t[2].x) / 3.0, (t[0].y + t[1].y + t[2].y) / 3.0};
}

} // namespace

auto AciData::all_conditions() const -> bool {
  return std::all_of(conditions.begin(), conditions.end(), [](bool b) { return b; });
}

auto AciData::ideal() const -> MonomialIdeal {
  return {3,
          {Monomial({a, 0, 0}), Monomial({0, b, 0}), Monomial({0, 0, c}),
           Monomial({alpha, beta, gamma})}};
}

auto aci_data(unsigned a, unsigned b, unsigned c, unsigned alpha, unsigned beta,
              unsigned gamma) -> AciData {
  const int mixed_support = (alpha > 0) + (beta > 0) + (gamma > 0);
  if (alpha >= a || beta >= b || gamma >= c || mixed_support < 2)
    throw Error(ErrorCode::NonMinimalGenerators,
                "generators x^" + std::to_string(a) + ", y^" + std::to_string(b) +
                    ", z^" + std::to_string(c) + ", x^" + std::to_string(alpha) +
                    "y^" + std::to_string(beta) + "z^" + std::to_string(gamma) +
                    " are not a minimal set of four");
  AciData d{a, b, c, alpha, beta, gamma};
  const std::int64_t total = std::int64_t{a} + b + c + alpha + beta + gamma;
  d.s = total / 3 - 2;
  d.A = d.s + 2 - a;
  d.B = d.s + 2 - b;
  d.C = d.s + 2 - c;
  d.M = d.s + 2 - (std::int64_t{alpha} + beta + gamma);
  d.conditions = {
      total % 3 == 0,
      d.M >= 0,
      d.A >= 0 && d.A <= std::int64_t{beta} + gamma,
      d.B >= 0 && d.B <= std::int64_t{alpha} + gamma,
      d.C >= 0 && d.C <= std::int64_t{alpha} + beta,
  };
  return d;
}

auto build_Z(const AciData &data) -> IntegerMatrix {
  require_conditions(data);
  GradedMap map = mult_matrix(data.ideal(), static_cast<unsigned>(data.s), 1);
  if (!map.matrix.is_square())
    throw Error(ErrorCode::NotSquare,
                "multiplication map is " + std::to_string(map.matrix.rows()) + "x" +
                    std::to_string(map.matrix.cols()));
  return std::move(map.matrix);
}

auto build_N(const AciData &data) -> IntegerMatrix {
  require_conditions(data);
  const std::int64_t top = data.s + 1;
  // Coordinates x^k y^{top-k} not hit by multiples of x^a or y^b.
  std::vector<std::int64_t> rows;
  for (std::int64_t k = 0; k <= top; ++k)
    if (k < data.a && top - k < data.b)
      rows.push_back(k);
  const auto size = static_cast<std::size_t>(data.C + data.M);
  if (rows.size() != size)
    throw Error(ErrorCode::NotSquare, "restricted presentation has " +
                                          std::to_string(rows.size()) +
                                          " free coordinates, expected C+M = " +
                                          std::to_string(size));
  IntegerMatrix n(size, size);
  const int sign_c = data.c % 2 == 0 ? 1 : -1;
  const int sign_g = data.gamma % 2 == 0 ? 1 : -1;
  for (std::size_t r = 0; r < size; ++r) {
    const std::int64_t k = rows[r];
    std::size_t col = 0;
    // (x+y)^c * x^i y^{C-1-i}
    for (std::int64_t i = 0; i < data.C; ++i, ++col)
      n(r, col) = sign_c * binomial(data.c, static_cast<long>(k - i));
    // x^alpha y^beta (x+y)^gamma * x^i y^{M-1-i}
    for (std::int64_t i = 0; i < data.M; ++i, ++col)
      n(r, col) = sign_g * binomial(data.gamma, static_cast<long>(k - data.alpha - i));
  }
  return n;
}

auto wlp_via_det(const AciData &data, std::uint64_t p) -> bool {
  if (p != 0 && !is_prime(p))
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  const BigInt det = determinant(build_Z(data));
  if (p == 0)
    return det != 0;
  return !mpz_divisible_ui_p(det.get_mpz_t(), p);
}

auto triangle_corners(const Monomial &m, bool up) -> std::array<RegionGraph::Point, 3> {
  const double i = m[0];
  const double j = m[1];
  const double k = m[2];
  if (up)
    return {to_point(i + 1, j, k), to_point(i, j + 1, k), to_point(i, j, k + 1)};
  return {to_point(i + 1, j + 1, k), to_point(i + 1, j, k + 1),
          to_point(i, j + 1, k + 1)};
}

auto region_graph(const MonomialIdeal &ideal, unsigned degree) -> RegionGraph {
  if (ideal.num_vars() != 3)
    throw Error(ErrorCode::DimensionMismatch, "region graphs need 3 variables");
  RegionGraph g;
  g.degree = degree;
  g.down_nodes = ideal.standard_basis(degree);
  g.up_nodes = ideal.standard_basis(degree + 1);
  const auto &up_index = ideal.piece(degree + 1).index;
  for (std::size_t d = 0; d < g.down_nodes.size(); ++d) {
    for (std::size_t v = 0; v < 3; ++v) {
      auto it = up_index.find(g.down_nodes[d].times_variable(v));
      if (it != up_index.end())
        g.edges.push_back({d, it->second, v});
    }
  }
  for (const auto &m : g.up_nodes)
    g.up_positions.push_back(centroid(triangle_corners(m, true)));
  for (const auto &m : g.down_nodes)
    g.down_positions.push_back(centroid(triangle_corners(m, false)));
  return g;
}

auto region_graph(const AciData &data) -> RegionGraph {
  require_conditions(data);
  return region_graph(data.ideal(), static_cast<unsigned>(data.s));
}

auto complete_intersection_region(unsigned a, unsigned b, unsigned c) -> RegionGraph {
  if (a + b + c < 2)
    throw Error(ErrorCode::InvalidArgument, "box must have a+b+c >= 2");
  const std::array<unsigned, 3> exps{a + b, a + c, b + c};
  return region_graph(complete_intersection(exps), a + b + c - 2);
}

auto count_matchings(const RegionGraph &g, std::size_t max_side) -> std::uint64_t {
  const std::size_t n = g.down_nodes.size();
  if (n != g.up_nodes.size())
    throw Error(ErrorCode::Unbalanced, std::to_string(n) + " down vs " +
                                           std::to_string(g.up_nodes.size()) +
                                           " up nodes");
  if (n > max_side || n > 63)
    throw Error(ErrorCode::TooLarge,
                std::to_string(n) + " nodes per side exceeds " + std::to_string(max_side));
  std::vector<std::uint64_t> adj(n, 0);
  for (const auto &e : g.edges)
    adj[e.down] |= std::uint64_t{1} << e.up;

  // Always branch on the open down node with the fewest free neighbours.
  std::function<std::uint64_t(std::uint64_t, std::uint64_t)> count =
      [&](std::uint64_t down_used, std::uint64_t up_used) -> std::uint64_t {
    std::size_t best = n;
    int best_options = 64;
    for (std::size_t d = 0; d < n; ++d) {
      if (down_used >> d & 1U)
        continue;
      const int options = std::popcount(adj[d] & ~up_used);
      if (options == 0)
        return 0;
      if (options < best_options) {
        best_options = options;
        best = d;
      }
    }
    if (best == n)
      return 1;
    std::uint64_t total = 0;
    std::uint64_t free = adj[best] & ~up_used;
    while (free != 0) {
      const std::uint64_t bit = free & (~free + 1);
      free ^= bit;
      total += count(down_used | (std::uint64_t{1} << best), up_used | bit);
    }
    return total;
  };
  return count(0, 0);
}

auto find_perfect_matching(const RegionGraph &g)
    -> std::optional<std::vector<std::size_t>> {
  const std::size_t n = g.down_nodes.size();
  if (n != g.up_nodes.size())
    return std::nullopt;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto &e : g.edges)
    adj[e.down].push_back(e.up);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> up_match(n, kNone);
  std::vector<bool> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t d) -> bool {
    for (std::size_t u : adj[d]) {
      if (visited[u])
        continue;
      visited[u] = true;
      if (up_match[u] == kNone || augment(up_match[u])) {
        up_match[u] = d;
        return true;
      }
    }
    return false;
  };
  for (std::size_t d = 0; d < n; ++d) {
    visited.assign(n, false);
    if (!augment(d))
      return std::nullopt;
  }
  std::vector<std::size_t> down_match(n);
  for (std::size_t u = 0; u < n; ++u)
    down_match[up_match[u]] = u;
  return down_match;
}

auto region_svg(const RegionGraph &g,
                const std::optional<std::vector<std::size_t>> &matching)
    -> std::string {
  constexpr double kScale = 24.0;
  constexpr double kMargin = 12.0;
  const double side = g.degree + 2.0;
  const double height = side * std::sqrt(3.0) / 2.0;
  auto px = [&](const RegionGraph::Point &p) {
    std::ostringstream s;
    s << kMargin + p.x * kScale << ',' << kMargin + (height - p.y) * kScale;
    return s.str();
  };
  auto polygon = [&](std::ostringstream &out, const auto &pts, const char *fill) {
    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      out << (i ? " " : "") << px(pts[i]);
    out << "\" fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"0.6\"/>\n";
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << 2 * kMargin + side * kScale << "\" height=\""
      << 2 * kMargin + height * kScale << "\">\n";
  for (const auto &m : g.up_nodes)
    polygon(out, triangle_corners(m, true), "#f4f4f4");
  for (const auto &m : g.down_nodes)
    polygon(out, triangle_corners(m, false), "#dcdcdc");
  if (matching) {
    static constexpr const char *kColors[3] = {"#e6a23c", "#5b8ff9", "#61d9a0"};
    for (std::size_t d = 0; d < matching->size(); ++d) {
      const std::size_t u = (*matching)[d];
      const auto down = triangle_corners(g.down_nodes[d], false);
      const auto up = triangle_corners(g.up_nodes[u], true);
      std::size_t variable = 0;
      for (std::size_t v = 0; v < 3; ++v)
        if (g.down_nodes[d].times_variable(v) == g.up_nodes[u])
          variable = v;
      // The up triangle shares the two down corners other than down[variable]...
      // so the lozenge is down[variable], shared, apex, shared.
      auto same = [](const RegionGraph::Point &p, const RegionGraph::Point &q) {
        return std::abs(p.x - q.x) < 1e-9 && std::abs(p.y - q.y) < 1e-9;
      };
      std::vector<RegionGraph::Point> shared;
      RegionGraph::Point apex{};
      for (const auto &p : up) {
        if (std::any_of(down.begin(), down.end(), [&](const auto &q) { return same(p, q); }))
          shared.push_back(p);
        else
          apex = p;
      }
      RegionGraph::Point tail{};
      for (const auto &q : down)
        if (std::none_of(shared.begin(), shared.end(), [&](const auto &p) { return same(p, q); }))
          tail = q;
      if (shared.size() != 2)
        continue;
      const std::array<RegionGraph::Point, 4> lozenge{tail, shared[0], apex, shared[1]};
      polygon(out, lozenge, kColors[variable]);
    }
  }
  out << "</svg>\n";
  return out.str();
}

auto macmahon(unsigned a, unsigned b, unsigned c) -> BigInt {
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 1; i <= a; ++i)
    for (unsigned j = 1; j <= b; ++j)
      for (unsigned k = 1; k <= c; ++k) {
        num *= i + j + k - 1;
        den *= i + j + k - 2;
      }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

auto plane_partitions_bruteforce(unsigned a, unsigned b, unsigned c) -> std::uint64_t {
  if (std::uint64_t{a} * b * c > 27)
    throw Error(ErrorCode::TooLarge, "box " + std::to_string(a) + "x" +
                                         std::to_string(b) + "x" + std::to_string(c) +
                                         " exceeds 27 cells");
  if (a == 0 || b == 0)
    return 1;
  std::vector<unsigned> cells(std::size_t{a} * b, 0);
  std::function<std::uint64_t(std::size_t)> fill = [&](std::size_t pos) -> std::uint64_t {
    if (pos == cells.size())
      return 1;
    const std::size_t row = pos / b;
    const std::size_t col = pos % b;
    unsigned cap = c;
    if (row > 0)
      cap = std::min(cap, cells[pos - b]);
    if (col > 0)
      cap = std::min(cap, cells[pos - 1]);
    std::uint64_t total = 0;
    for (unsigned v = 0; v <= cap; ++v) {
      cells[pos] = v;
      total += fill(pos + 1);
    }
    return total;
  };
  return fill(0);
}

auto li_zanello_equiv(unsigned a, unsigned b, unsigned c, std::uint64_t p)
    -> LiZanelloCheck {
  if (!is_prime(p))
    throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  LiZanelloCheck check;
  const BigInt count = macmahon(a, b, c);
  check.prime_divides = mpz_divisible_ui_p(count.get_mpz_t(), p) != 0;
  const std::array<unsigned, 3> exps{a + b, a + c, b + c};
  check.wlp_fails = !decide_wlp(complete_intersection(exps), p).holds;
  return check;
}

auto brenner_kaid_char2(unsigned d) -> bool {
  if (d == 0)
    throw Error(ErrorCode::InvalidArgument, "d must be positive");
  for (unsigned n = 1; n < 64; ++n) {
    const std::uint64_t v = ((std::uint64_t{1} << n) + 1) / 3;
    if (v == d)
      return true;
    if (v > d)
      return false;
  }
  return false;
}

} // namespace lefschetz
