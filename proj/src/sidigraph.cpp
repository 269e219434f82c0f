#include "sdg/sidigraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "sdg/error.hpp"

namespace sdg {

Sidigraph::Sidigraph(int order) : Sidigraph(order, {}) {}

Sidigraph::Sidigraph(int order, std::vector<Arc> arcs) : order_(order), arcs_(std::move(arcs)) {
  if (order < 0) throw InvalidGraph("negative vertex count");
  const auto n = static_cast<std::size_t>(order);
  signs_.assign(n * n, 0);
  out_.assign(n, {});
  std::sort(arcs_.begin(), arcs_.end());
  for (const Arc& a : arcs_) {
    if (a.tail < 0 || a.tail >= order || a.head < 0 || a.head >= order) {
      throw InvalidGraph("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                         ") has a vertex outside [0," + std::to_string(order) + ")");
    }
    if (a.tail == a.head) throw InvalidGraph("self-loop at vertex " + std::to_string(a.tail));
    if (a.sign != 1 && a.sign != -1) throw InvalidGraph("arc sign must be +1 or -1");
    auto& slot = signs_[static_cast<std::size_t>(a.tail) * n + static_cast<std::size_t>(a.head)];
    if (slot != 0) {
      throw InvalidGraph("duplicate arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
    }
    slot = static_cast<std::int8_t>(a.sign);
    out_[static_cast<std::size_t>(a.tail)].push_back(a.head);
  }
}

int Sidigraph::sign(int tail, int head) const {
  if (tail < 0 || tail >= order_ || head < 0 || head >= order_) return 0;
  return signs_[static_cast<std::size_t>(tail) * static_cast<std::size_t>(order_) +
                static_cast<std::size_t>(head)];
}

IntMatrix adjacency_matrix(const Sidigraph& s) {
  IntMatrix a(s.order());
  for (const Arc& arc : s.arcs()) a(arc.tail, arc.head) = arc.sign;
  return a;
}

Sidigraph negate(const Sidigraph& s) {
  std::vector<Arc> arcs(s.arcs().begin(), s.arcs().end());
  for (Arc& a : arcs) a.sign = -a.sign;
  return Sidigraph(s.order(), std::move(arcs));
}

Sidigraph underlying_digraph(const Sidigraph& s) {
  std::vector<Arc> arcs(s.arcs().begin(), s.arcs().end());
  for (Arc& a : arcs) a.sign = 1;
  return Sidigraph(s.order(), std::move(arcs));
}

Sidigraph delete_arc(const Sidigraph& s, int tail, int head) {
  if (!s.has_arc(tail, head)) {
    throw MissingArc("no arc (" + std::to_string(tail) + "," + std::to_string(head) + ")");
  }
  std::vector<Arc> arcs;
  arcs.reserve(s.arc_count() - 1);
  for (const Arc& a : s.arcs()) {
    if (a.tail != tail || a.head != head) arcs.push_back(a);
  }
  return Sidigraph(s.order(), std::move(arcs));
}

Sidigraph add_arc(const Sidigraph& s, Arc arc) {
  std::vector<Arc> arcs(s.arcs().begin(), s.arcs().end());
  arcs.push_back(arc);
  return Sidigraph(s.order(), std::move(arcs));
}

namespace {

std::vector<char> reachable_from(const Sidigraph& s, int start, bool reverse) {
  const int n = s.order();
  std::vector<std::vector<int>> pred;
  if (reverse) {
    pred.assign(static_cast<std::size_t>(n), {});
    for (const Arc& a : s.arcs()) pred[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const auto next = reverse ? std::span<const int>(pred[static_cast<std::size_t>(v)]) : s.successors(v);
    for (int w : next) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const Sidigraph& s) {
  if (s.order() <= 1) return true;
  const auto fwd = reachable_from(s, 0, false);
  const auto bwd = reachable_from(s, 0, true);
  return std::all_of(fwd.begin(), fwd.end(), [](char c) { return c != 0; }) &&
         std::all_of(bwd.begin(), bwd.end(), [](char c) { return c != 0; });
}

std::optional<std::vector<int>> bipartition(const Sidigraph& s) {
  const int n = s.order();
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
  for (const Arc& a : s.arcs()) {
    nbr[static_cast<std::size_t>(a.tail)].push_back(a.head);
    nbr[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (colour[static_cast<std::size_t>(root)] >= 0) continue;
    colour[static_cast<std::size_t>(root)] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : nbr[static_cast<std::size_t>(v)]) {
        auto& cw = colour[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

bool is_bipartite(const Sidigraph& s) { return bipartition(s).has_value(); }

bool is_symmetric(const Sidigraph& s) {
  return std::all_of(s.arcs().begin(), s.arcs().end(),
                     [&](const Arc& a) { return s.sign(a.head, a.tail) == a.sign; });
}

bool is_all_positive(const Sidigraph& s) {
  return std::all_of(s.arcs().begin(), s.arcs().end(), [](const Arc& a) { return a.sign > 0; });
}

Sidigraph from_sigraph(int order, std::span<const SignedEdge> edges) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * edges.size());
  std::vector<std::pair<int, int>> seen;
  for (const SignedEdge& e : edges) {
    if (e.u == e.v) throw InvalidEdge("self-edge at vertex " + std::to_string(e.u));
    const std::pair<int, int> key{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) {
      throw InvalidEdge("repeated edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    seen.emplace_back(key);
    arcs.push_back({e.u, e.v, e.sign});
    arcs.push_back({e.v, e.u, e.sign});
  }
  return Sidigraph(order, std::move(arcs));
}

namespace {

// Backtracking search for cycles whose minimum vertex is `start`.
class CycleSearch {
 public:
  CycleSearch(const Sidigraph& s, const CycleOptions& options, std::vector<CycleRecord>& out)
      : s_(s), max_len_(options.max_len.value_or(s.order())), cap_(options.cap), out_(out) {}

  void run() {
    const int n = s_.order();
    on_path_.assign(static_cast<std::size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
      start_ = start;
      can_return_ = back_reach(start);
      path_.assign(1, start);
      path_sign_ = 1;
      on_path_[static_cast<std::size_t>(start)] = 1;
      extend(start);
      on_path_[static_cast<std::size_t>(start)] = 0;
    }
  }

 private:
  // Vertices >= start that can reach `start` inside the subgraph induced by {start..n-1}.
  std::vector<char> back_reach(int start) const {
    const int n = s_.order();
    std::vector<char> mark(static_cast<std::size_t>(n), 0);
    mark[static_cast<std::size_t>(start)] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Arc& a : s_.arcs()) {
        if (a.tail > start && a.head >= start && mark[static_cast<std::size_t>(a.head)] &&
            !mark[static_cast<std::size_t>(a.tail)]) {
          mark[static_cast<std::size_t>(a.tail)] = 1;
          changed = true;
        }
      }
    }
    return mark;
  }

  void extend(int v) {
    for (int w : s_.successors(v)) {
      if (w == start_) {
        if (path_.size() >= 2) emit(path_sign_ * s_.sign(v, w));
        continue;
      }
      if (w < start_ || on_path_[static_cast<std::size_t>(w)] || !can_return_[static_cast<std::size_t>(w)]) continue;
      if (static_cast<int>(path_.size()) >= max_len_) continue;
      const int saved = path_sign_;
      path_sign_ *= s_.sign(v, w);
      path_.push_back(w);
      on_path_[static_cast<std::size_t>(w)] = 1;
      extend(w);
      on_path_[static_cast<std::size_t>(w)] = 0;
      path_.pop_back();
      path_sign_ = saved;
    }
  }

  void emit(int sign) {
    if (out_.size() >= cap_) {
      throw CycleBudgetExceeded("more than " + std::to_string(cap_) + " directed cycles");
    }
    out_.push_back({path_, sign});
  }

  const Sidigraph& s_;
  int max_len_;
  std::size_t cap_;
  std::vector<CycleRecord>& out_;
  int start_ = 0;
  std::vector<char> can_return_;
  std::vector<char> on_path_;
  std::vector<int> path_;
  int path_sign_ = 1;
};

}  // namespace

std::vector<CycleRecord> enumerate_cycles(const Sidigraph& s, const CycleOptions& options) {
  std::vector<CycleRecord> cycles;
  CycleSearch(s, options, cycles).run();
  std::sort(cycles.begin(), cycles.end(), [](const CycleRecord& a, const CycleRecord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return cycles;
}

int cycle_sign(const Sidigraph& s, const CycleRecord& c) {
  int sign = 1;
  const std::size_t len = c.vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    const int a = s.sign(c.vertices[i], c.vertices[(i + 1) % len]);
    if (a == 0) throw MissingArc("cycle uses a missing arc");
    sign *= a;
  }
  return sign;
}

bool is_cycle_balanced(const Sidigraph& s, std::size_t cap) {
  const auto cycles = enumerate_cycles(s, {.max_len = std::nullopt, .cap = cap});
  return std::all_of(cycles.begin(), cycles.end(), [](const CycleRecord& c) { return c.sign > 0; });
}

DeltaClass classify(const Sidigraph& s, std::size_t cap) {
  DeltaClass dc;
  dc.is_bipartite = is_bipartite(s);
  const auto cycles = enumerate_cycles(s, {.max_len = std::nullopt, .cap = cap});
  bool delta1 = true;
  bool all_negative = true;
  bool all_positive = true;
  for (const CycleRecord& c : cycles) {
    if (c.sign > 0) all_negative = false;
    if (c.sign < 0) all_positive = false;
    const std::size_t r = c.length() % 4;
    if ((r == 0 && c.sign > 0) || (r == 2 && c.sign < 0)) delta1 = false;
  }
  dc.in_delta1 = dc.is_bipartite && delta1;
  dc.in_delta2 = dc.is_bipartite && all_negative;
  dc.is_cycle_balanced = all_positive;
  return dc;
}

}  // namespace sdg
