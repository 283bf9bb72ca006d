#pragma once

// Distance-regularity: intersection arrays computed from a graph, the closed
// forms predicted for O_k and 2O_k, and intersection matrices.

#include "oddspectra/bigint.hpp"
#include "oddspectra/graph.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace oddspectra {

/// {b_0, ..., b_{d-1}; c_1, ..., c_d} of a graph with valency k.
struct IntersectionArray {
  std::size_t d = 0;
  std::vector<std::int64_t> b;
  std::vector<std::int64_t> c;
  std::int64_t k = 0;

  /// a_r = k - b_r - c_r for r = 0..d, with c_0 = b_d = 0.
  std::vector<std::int64_t> a() const;
  bool valid() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

std::string to_string(const IntersectionArray& arr);

/// Why a graph is not distance-regular, with a concrete witness.
struct DrgRefutation {
  enum class Kind { disconnected, irregular, non_constant };
  Kind kind = Kind::non_constant;
  /// disconnected: u, v in different components. irregular: deg(u) != deg(v).
  /// non_constant: (u, v) at distance r whose count differs from the
  /// reference pair (ref_u, ref_v) at the same distance.
  Vertex u = 0, v = 0;
  Vertex ref_u = 0, ref_v = 0;
  std::size_t distance = 0;
  char parameter = 'b';  ///< 'b' or 'c'
  std::int64_t value = 0, reference_value = 0;
};

std::string to_string(DrgRefutation::Kind kind);

using IntersectionArrayResult = std::variant<IntersectionArray, DrgRefutation>;

/// Intersection array, checked for constancy over all ordered vertex pairs.
IntersectionArrayResult intersection_array(const Graph& g);

/// Closed-form array of O_k in the two parity cases. The displayed form
/// always begins with c = (1, 1, ...), so k = 2 yields {2,1;1,1} although
/// O_2 = K_3 has diameter 1.
IntersectionArray predicted_odd_array(int k);
/// {k, k-1, k-1, ..., 1, 1; 1, 1, 2, 2, ..., k-1, k-1, k}, diameter 2k-1.
IntersectionArray predicted_double_odd_array(int k);

struct DoubleCriterion {
  bool holds = false;                  ///< a_i = 0 for i < d and a_d > 0
  std::size_t predicted_diameter = 0;  ///< 2d + 1
};

/// Whether the bipartite double of a non-bipartite distance-regular graph
/// with this array is distance-regular.
DoubleCriterion bipartite_double_drg_criterion(const IntersectionArray& arr);

/// Tridiagonal (d+1) x (d+1) matrix with sub-diagonal c, diagonal a, and
/// super-diagonal b.
IntMatrix intersection_matrix(const IntersectionArray& arr);

}  // namespace oddspectra
