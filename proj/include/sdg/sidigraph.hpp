#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sdg {

/// A signed arc `tail -> head`; `sign` is +1 or -1.
struct Arc {
  int tail = 0;
  int head = 0;
  int sign = 1;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Dense row-major integer matrix; used for adjacency matrices.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const noexcept { return n_; }
  int& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  int operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * n_ + j]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> data_;
};

/// Signed digraph on vertices 0..order-1.
///
/// No self-loops and at most one arc per ordered pair. Arcs are kept sorted by
/// (tail, head), which is also the canonical file order. Instances are
/// immutable; every transformation returns a new graph.
class Sidigraph {
 public:
  Sidigraph() = default;
  explicit Sidigraph(int order);
  /// Throws InvalidGraph on a self-loop, duplicate arc, out-of-range index or
  /// a sign other than +1/-1.
  Sidigraph(int order, std::vector<Arc> arcs);

  int order() const noexcept { return order_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  /// Sign of arc (tail, head), or 0 when absent.
  int sign(int tail, int head) const;
  bool has_arc(int tail, int head) const { return sign(tail, head) != 0; }
  std::span<const int> successors(int v) const { return out_[static_cast<std::size_t>(v)]; }

  friend bool operator==(const Sidigraph& a, const Sidigraph& b) {
    return a.order_ == b.order_ && a.arcs_ == b.arcs_;
  }
  friend std::strong_ordering operator<=>(const Sidigraph& a, const Sidigraph& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return a.arcs_ <=> b.arcs_;
  }

 private:
  int order_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::int8_t> signs_;
  std::vector<std::vector<int>> out_;
};

struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = 1;
};

/// A directed cycle, rotated so that it starts at its smallest vertex.
struct CycleRecord {
  std::vector<int> vertices;
  int sign = 1;

  std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const CycleRecord&, const CycleRecord&) = default;
};

struct CycleOptions {
  std::optional<int> max_len;
  std::size_t cap = 1'000'000;
};

struct DeltaClass {
  bool in_delta1 = false;
  bool in_delta2 = false;
  bool is_bipartite = false;
  bool is_cycle_balanced = false;
};

IntMatrix adjacency_matrix(const Sidigraph& s);
Sidigraph negate(const Sidigraph& s);
Sidigraph underlying_digraph(const Sidigraph& s);
/// Throws MissingArc if (tail, head) is not an arc of `s`.
Sidigraph delete_arc(const Sidigraph& s, int tail, int head);
/// Returns `s` plus the arc; throws InvalidGraph if it already exists.
Sidigraph add_arc(const Sidigraph& s, Arc arc);

bool is_strongly_connected(const Sidigraph& s);
/// Two-colouring of the underlying undirected graph, if one exists.
std::optional<std::vector<int>> bipartition(const Sidigraph& s);
bool is_bipartite(const Sidigraph& s);
bool is_symmetric(const Sidigraph& s);
bool is_all_positive(const Sidigraph& s);

/// Each signed edge becomes a pair of opposite arcs with the edge's sign.
/// Throws InvalidEdge on a self-edge or a repeated edge.
Sidigraph from_sigraph(int order, std::span<const SignedEdge> edges);

/// Every simple directed cycle of length <= max_len, each once, ordered by
/// length and then by canonical vertex sequence. Throws CycleBudgetExceeded
/// when more than `cap` cycles exist.
std::vector<CycleRecord> enumerate_cycles(const Sidigraph& s, const CycleOptions& options = {});

/// Product of the arc signs along `c` in `s`.
int cycle_sign(const Sidigraph& s, const CycleRecord& c);

bool is_cycle_balanced(const Sidigraph& s, std::size_t cap = CycleOptions{}.cap);
DeltaClass classify(const Sidigraph& s, std::size_t cap = CycleOptions{}.cap);

}  // namespace sdg
