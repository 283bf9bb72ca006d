#include "oddspectra/drg.hpp"

#include <sstream>
#include <stdexcept>

namespace oddspectra {

std::vector<std::int64_t> IntersectionArray::a() const {
  std::vector<std::int64_t> out(d + 1);
  for (std::size_t r = 0; r <= d; ++r) {
    const std::int64_t br = r < d ? b[r] : 0;
    const std::int64_t cr = r > 0 ? c[r - 1] : 0;
    out[r] = k - br - cr;
  }
  return out;
}

bool IntersectionArray::valid() const {
  if (d == 0 || b.size() != d || c.size() != d || b[0] != k || c[0] < 1) return false;
  for (auto ar : a())
    if (ar < 0) return false;
  return true;
}

std::string to_string(const IntersectionArray& arr) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < arr.b.size(); ++i) out << (i ? "," : "") << arr.b[i];
  out << ';';
  for (std::size_t i = 0; i < arr.c.size(); ++i) out << (i ? "," : "") << arr.c[i];
  out << '}';
  return out.str();
}

std::string to_string(DrgRefutation::Kind kind) {
  switch (kind) {
    case DrgRefutation::Kind::disconnected: return "disconnected";
    case DrgRefutation::Kind::irregular: return "irregular";
    case DrgRefutation::Kind::non_constant: return "non_constant";
  }
  return "unknown";
}

IntersectionArrayResult intersection_array(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  if (n == 0) throw std::invalid_argument("intersection array of the empty graph");
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) != g.degree(0)) {
      DrgRefutation r;
      r.kind = DrgRefutation::Kind::irregular;
      r.u = 0;
      r.v = v;
      r.value = static_cast<std::int64_t>(g.degree(0));
      r.reference_value = static_cast<std::int64_t>(g.degree(v));
      return r;
    }
  }
  const DistanceTable dt = all_pairs_distances(g);
  if (!dt.connected) {
    for (Vertex v = 0; v < n; ++v) {
      if (dt(0, v) == kInfiniteDistance) {
        DrgRefutation r;
        r.kind = DrgRefutation::Kind::disconnected;
        r.u = 0;
        r.v = v;
        return r;
      }
    }
  }

  const std::size_t d = dt.diameter;
  IntersectionArray arr;
  arr.d = d;
  arr.k = static_cast<std::int64_t>(g.degree(0));
  // Reference counts per distance, taken from the first ordered pair met.
  std::vector<std::int64_t> b_ref(d + 1, -1), c_ref(d + 1, -1);
  std::vector<Edge> witness(d + 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t r = dt(u, v);
      std::int64_t b = 0, c = 0;
      for (Vertex w : g.neighbors(v)) {
        if (dt(u, w) == r + 1) ++b;
        if (r > 0 && dt(u, w) == r - 1) ++c;
      }
      if (b_ref[r] < 0) {
        b_ref[r] = b;
        c_ref[r] = c;
        witness[r] = {u, v};
        continue;
      }
      if (b != b_ref[r] || c != c_ref[r]) {
        DrgRefutation ref;
        ref.kind = DrgRefutation::Kind::non_constant;
        ref.u = u;
        ref.v = v;
        ref.ref_u = witness[r].first;
        ref.ref_v = witness[r].second;
        ref.distance = r;
        ref.parameter = b != b_ref[r] ? 'b' : 'c';
        ref.value = b != b_ref[r] ? b : c;
        ref.reference_value = b != b_ref[r] ? b_ref[r] : c_ref[r];
        return ref;
      }
    }
  }
  for (std::size_t r = 0; r < d; ++r) arr.b.push_back(b_ref[r]);
  for (std::size_t r = 1; r <= d; ++r) arr.c.push_back(c_ref[r]);
  return arr;
}

IntersectionArray predicted_odd_array(int k) {
  if (k < 2) throw std::domain_error("k must be at least 2");
  IntersectionArray arr;
  arr.k = k;
  arr.d = static_cast<std::size_t>(std::max(k - 1, 2));
  // c = 1,1,2,2,...; b = k,k-1,k-1,k-2,k-2,...
  for (std::size_t r = 0; r < arr.d; ++r) arr.b.push_back(k - static_cast<std::int64_t>((r + 1) / 2));
  for (std::size_t r = 1; r <= arr.d; ++r) arr.c.push_back(static_cast<std::int64_t>((r + 1) / 2));
  return arr;
}

IntersectionArray predicted_double_odd_array(int k) {
  if (k < 2) throw std::domain_error("k must be at least 2");
  IntersectionArray arr;
  arr.k = k;
  arr.d = static_cast<std::size_t>(2 * k - 1);
  for (std::size_t r = 0; r < arr.d; ++r) arr.b.push_back(k - static_cast<std::int64_t>((r + 1) / 2));
  for (std::size_t r = 1; r <= arr.d; ++r) arr.c.push_back(static_cast<std::int64_t>((r + 1) / 2));
  return arr;
}

DoubleCriterion bipartite_double_drg_criterion(const IntersectionArray& arr) {
  const auto a = arr.a();
  DoubleCriterion out;
  out.holds = a[arr.d] > 0;
  for (std::size_t i = 0; i < arr.d; ++i)
    if (a[i] != 0) out.holds = false;
  out.predicted_diameter = 2 * arr.d + 1;
  return out;
}

IntMatrix intersection_matrix(const IntersectionArray& arr) {
  const auto n = static_cast<Eigen::Index>(arr.d + 1);
  const auto a = arr.a();
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    m(r, r) = a[r];
    if (r + 1 < n) m(r, r + 1) = arr.b[r];
    if (r > 0) m(r, r - 1) = arr.c[r - 1];
  }
  return m;
}

}  // namespace oddspectra
