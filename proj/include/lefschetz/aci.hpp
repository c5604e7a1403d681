#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/monomial.hpp"

namespace lefschetz {

/// Almost complete intersection <x^a, y^b, z^c, x^alpha y^beta z^gamma> together
/// with the quantities governing the square multiplication map in degree s:
///   s = (a+b+c+alpha+beta+gamma)/3 - 2,  A = s+2-a,  B = s+2-b,  C = s+2-c,
///   M = s+2-(alpha+beta+gamma),
/// and conditions (i) s integral, (ii) M >= 0, (iii) 0 <= A <= beta+gamma,
/// (iv) 0 <= B <= alpha+gamma, (v) 0 <= C <= alpha+beta.
/// When (i) fails, s is the floor and the rest is derived from it.
struct AciData {
  unsigned a = 0, b = 0, c = 0;
  unsigned alpha = 0, beta = 0, gamma = 0;
  std::int64_t s = 0;
  std::int64_t A = 0, B = 0, C = 0, M = 0;
  std::array<bool, 5> conditions{};

  [[nodiscard]] auto all_conditions() const -> bool;
  [[nodiscard]] auto ideal() const -> MonomialIdeal;
};

/// Throws NonMinimalGenerators unless all four generators are minimal.
auto aci_data(unsigned a, unsigned b, unsigned c, unsigned alpha, unsigned beta,
              unsigned gamma) -> AciData;

/// Zero-one matrix of multiplication by x+y+z from degree s to s+1.
/// Throws ConditionsNotMet, NotSquare.
auto build_Z(const AciData &data) -> IntegerMatrix;

/// (C+M)x(C+M) matrix of signed binomial coefficients presenting
/// [R/(I, x+y+z)]_{s+1}: generators restricted along z = -(x+y), with the
/// unit columns coming from x^a and y^b stripped. Throws ConditionsNotMet.
auto build_N(const AciData &data) -> IntegerMatrix;

/// p == 0: det Z != 0. p prime: p does not divide det Z.
/// Throws ConditionsNotMet, NonPrimeModulus.
auto wlp_via_det(const AciData &data, std::uint64_t p) -> bool;

/// Bipartite graph between degree-s (down) and degree-(s+1) (up) standard
/// monomials of a 3-variable monomial ideal, an edge for each variable taking a
/// down node to an up node. Embedded in the side-(s+2) triangular lattice: a
/// monomial x^i y^j z^k of degree s+1 is the upward unit triangle with corners
/// (i+1,j,k), (i,j+1,k), (i,j,k+1); one of degree s is the downward triangle
/// with corners (i+1,j+1,k), (i+1,j,k+1), (i,j+1,k+1).
struct RegionGraph {
  struct Edge {
    std::size_t down = 0;
    std::size_t up = 0;
    std::size_t variable = 0;
  };
  struct Point {
    double x = 0;
    double y = 0;
  };

  unsigned degree = 0; ///< s
  std::vector<Monomial> up_nodes;
  std::vector<Monomial> down_nodes;
  std::vector<Edge> edges;
  std::vector<Point> up_positions;   ///< triangle centroids
  std::vector<Point> down_positions; ///< triangle centroids
};

/// Throws DimensionMismatch unless the ideal lives in 3 variables.
auto region_graph(const MonomialIdeal &ideal, unsigned degree) -> RegionGraph;
/// Throws ConditionsNotMet.
auto region_graph(const AciData &data) -> RegionGraph;
/// Region of <x^{a+b}, y^{a+c}, z^{b+c}> between degrees a+b+c-2 and a+b+c-1.
auto complete_intersection_region(unsigned a, unsigned b, unsigned c) -> RegionGraph;

/// Corners of the unit triangle of a node in lattice coordinates.
auto triangle_corners(const Monomial &m, bool up) -> std::array<RegionGraph::Point, 3>;

/// Exhaustive perfect-matching count. Throws Unbalanced, TooLarge.
auto count_matchings(const RegionGraph &g, std::size_t max_side = 30) -> std::uint64_t;

/// Some perfect matching as down index -> up index, if one exists.
auto find_perfect_matching(const RegionGraph &g)
    -> std::optional<std::vector<std::size_t>>;

/// SVG drawing of the region, with lozenges when a matching is given.
auto region_svg(const RegionGraph &g,
                const std::optional<std::vector<std::size_t>> &matching) -> std::string;

/// Plane partitions in an a x b x c box, by the product formula.
auto macmahon(unsigned a, unsigned b, unsigned c) -> BigInt;

/// Exhaustive count of a x b arrays with entries in [0, c] weakly decreasing
/// along rows and columns. Throws TooLarge when a*b*c > 27.
auto plane_partitions_bruteforce(unsigned a, unsigned b, unsigned c) -> std::uint64_t;

struct LiZanelloCheck {
  bool prime_divides = false; ///< p | macmahon(a,b,c)
  bool wlp_fails = false;     ///< <x^{a+b},y^{a+c},z^{b+c}> fails the WLP mod p
  [[nodiscard]] auto holds() const -> bool { return prime_divides == wlp_fails; }
};

auto li_zanello_equiv(unsigned a, unsigned b, unsigned c, std::uint64_t p)
    -> LiZanelloCheck;

/// d == floor((2^n + 1)/3) for some n >= 1. Throws InvalidArgument for d == 0.
auto brenner_kaid_char2(unsigned d) -> bool;

} // namespace lefschetz
