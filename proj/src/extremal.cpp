#include "mis/extremal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <thread>

namespace mis {

namespace {

Count checked_mul(Count a, Count b) {
  Count out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw CountOverflow("bound value overflowed 64 bits");
  return out;
}

Count checked_pow(Count base, int exponent) {
  Count out = 1;
  for (int i = 0; i < exponent; ++i) out = checked_mul(out, base);
  return out;
}

void check_size(int t) {
  if (t < 1) throw ExtremalError("size t must be at least 1, got " + std::to_string(t));
}

void check_order_range(int n, int t, const char* what) {
  check_size(t);
  if (n < t) {
    throw ExtremalError(std::string(what) + " needs 1 <= t <= n, got n=" + std::to_string(n) +
                        " t=" + std::to_string(t));
  }
  if (n > kMaxOrder) throw ExtremalError(std::string(what) + ": order " + std::to_string(n) + " exceeds 64");
}

/// Part sizes q (t-r times) then q+1 (r times).
std::vector<int> balanced_parts(int n, int parts) {
  const int q = n / parts;
  const int r = n % parts;
  std::vector<int> sizes(parts - r, q);
  sizes.insert(sizes.end(), r, q + 1);
  return sizes;
}

/// Per-worker scan state for one target.
struct Partial {
  Count max_observed = 0;
  std::uint64_t attainer_graphs = 0;
  std::vector<Graph> attainers;
};

struct TargetInfo {
  int t;
  BoundDecomposition bound;
};

/// Processes graphs [begin, end) of an indexable source.
std::vector<Partial> scan_range(const std::function<Graph(std::uint64_t)>& graph_at, std::uint64_t begin,
                                std::uint64_t end, std::span<const TargetInfo> targets, Side side) {
  std::vector<Partial> out(targets.size());
  for (std::uint64_t i = begin; i < end; ++i) {
    const Graph g = graph_at(i);
    const SizeProfile p = side == Side::kMis ? mis_size_profile(g) : maximal_clique_size_profile(g);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      const Count c = p.at(targets[k].t);
      Partial& part = out[k];
      part.max_observed = std::max(part.max_observed, c);
      if (c == targets[k].bound.f) {
        ++part.attainer_graphs;
        part.attainers.push_back(g);
      }
    }
  }
  return out;
}

/// Splits [0, count) into contiguous ranges, one per worker, and folds the
/// partial results in range order.
std::vector<Partial> scan_parallel(const std::function<Graph(std::uint64_t)>& graph_at, std::uint64_t count,
                                   std::span<const TargetInfo> targets, Side side, int workers) {
  const std::uint64_t w = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(workers, 1)), 1,
                                                    std::max<std::uint64_t>(count, 1));
  std::vector<std::vector<Partial>> partials(w);
  if (w == 1) {
    partials[0] = scan_range(graph_at, 0, count, targets, side);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(w);
    for (std::uint64_t k = 0; k < w; ++k) {
      const std::uint64_t begin = count * k / w;
      const std::uint64_t end = count * (k + 1) / w;
      threads.emplace_back([&, k, begin, end] {
        try {
          partials[k] = scan_range(graph_at, begin, end, targets, side);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  std::vector<Partial> merged(targets.size());
  for (const auto& worker : partials) {
    for (std::size_t k = 0; k < targets.size(); ++k) {
      merged[k].max_observed = std::max(merged[k].max_observed, worker[k].max_observed);
      merged[k].attainer_graphs += worker[k].attainer_graphs;
      merged[k].attainers.insert(merged[k].attainers.end(), worker[k].attainers.begin(), worker[k].attainers.end());
    }
  }
  return merged;
}

std::vector<TargetInfo> resolve_targets(int n, std::span<const VerifyTarget> targets) {
  std::vector<TargetInfo> out;
  for (const auto& target : targets) {
    if (target.t < 1 || target.t > n) {
      throw VerifyError("verification needs 1 <= t <= n, got n=" + std::to_string(n) +
                        " t=" + std::to_string(target.t));
    }
    if (target.expected.order() != n) {
      throw VerifyError("expected extremal graph has order " + std::to_string(target.expected.order()) +
                        ", source has order " + std::to_string(n));
    }
    out.push_back({target.t, bound_f(n, target.t)});
  }
  return out;
}

std::vector<ExtremalReport> build_reports(int n, std::span<const VerifyTarget> targets,
                                          std::span<const TargetInfo> info, std::vector<Partial>&& merged,
                                          std::uint64_t examined, bool exhaustive, const std::string& coverage,
                                          Side side) {
  std::vector<ExtremalReport> reports;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    ExtremalReport rep;
    rep.n = n;
    rep.t = info[k].t;
    rep.side = side;
    rep.bound = info[k].bound;
    rep.max_observed = merged[k].max_observed;
    rep.attainer_graphs = merged[k].attainer_graphs;
    rep.bound_holds = rep.max_observed <= rep.bound.f;
    rep.graphs_examined = examined;
    rep.exhaustive = exhaustive;
    rep.coverage = coverage;
    rep.attainers_canonicalized = n <= kCanonMaxOrder;
    if (rep.attainers_canonicalized) {
      std::set<CanonicalForm> forms;
      for (const Graph& g : merged[k].attainers) forms.insert(canonical_form(g));
      rep.attainers.assign(forms.begin(), forms.end());
      rep.expected = canonical_form(targets[k].expected);
      rep.unique_attainer = rep.attainers.size() == 1 && rep.attainers.front() == *rep.expected;
    }
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace

BoundDecomposition bound_f(int n, int t) {
  check_size(t);
  if (n < 0) throw ExtremalError("order must be nonnegative, got " + std::to_string(n));
  BoundDecomposition d{n, t, n / t, n % t, 0};
  d.f = checked_mul(checked_pow(static_cast<Count>(d.q), t - d.r), checked_pow(static_cast<Count>(d.q) + 1, d.r));
  return d;
}

Graph build_H(int n, int t) {
  check_order_range(n, t, "build_H");
  GraphBuilder b(n);
  Vertex start = 0;
  for (int size : balanced_parts(n, t)) {
    for (Vertex u = start; u < start + size; ++u)
      for (Vertex v = u + 1; v < start + size; ++v) b.add_edge(u, v);
    start += size;
  }
  return b.build();
}

Graph build_turan(int n, int k) {
  check_order_range(n, k, "build_turan");
  std::vector<int> part_of;
  int part = 0;
  for (int size : balanced_parts(n, k)) {
    part_of.insert(part_of.end(), size, part);
    ++part;
  }
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
  return b.build();
}

bool no_t_clique_condition(const Graph& g, int t) {
  check_size(t);
  const int n = g.order();
  if (n == 0) return false;
  const BoundDecomposition d = bound_f(n, t);
  const int delta = g.min_degree();
  return d.r > 0 ? delta >= n - d.q : delta >= n - d.q + 1;
}

std::string_view to_string(Subcase subcase) {
  switch (subcase) {
    case Subcase::kTrivial: return "trivial";
    case Subcase::k1a: return "1a";
    case Subcase::k1b: return "1b";
    case Subcase::k2a: return "2a";
    case Subcase::k2b: return "2b";
  }
  return "unknown";
}

Subcase classify_subcase(const Graph& g, int t) {
  check_size(t);
  if (t == 1 || g.order() < t) return Subcase::kTrivial;
  const bool threshold = no_t_clique_condition(g, t);
  if (bound_f(g.order(), t).r > 0) return threshold ? Subcase::k1a : Subcase::k1b;
  return threshold ? Subcase::k2a : Subcase::k2b;
}

Vertex auto_split_vertex(const Graph& g) {
  const int delta = g.min_degree();
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == delta) return v;
  return 0;
}

SplitReport induction_split(const Graph& g, int t, std::optional<Vertex> v) {
  check_size(t);
  SplitReport rep;
  rep.t = t;
  rep.v = v ? *v : auto_split_vertex(g);
  const VertexSet nbhd = g.neighbors(rep.v);

  enumerate_maximal_cliques(g, [&](VertexSet clique) {
    if (clique.size() != t) return;
    ++rep.total;
    ++(clique.contains(rep.v) ? rep.a_count : rep.b_count);
  });
  rep.nbhd_count = maximal_clique_size_profile(induced_subgraph(g, nbhd)).at(t - 1);
  rep.gminus_count = maximal_clique_size_profile(delete_vertex(g, rep.v)).at(t);

  if (rep.a_count != rep.nbhd_count || rep.a_count + rep.b_count != rep.total || rep.b_count > rep.gminus_count) {
    throw SplitIdentityError("induction split identities violated at vertex " + std::to_string(rep.v));
  }
  return rep;
}

Graph labeled_graph(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if ((mask >> k) & 1U) b.add_edge(i, j);
  return b.build();
}

LabeledGraphs::LabeledGraphs(int n, bool allow_order_8) : n_(n) {
  if (n < 0) throw OrderLimitError("order must be nonnegative");
  const int ceiling = allow_order_8 ? kLabeledOptInMaxOrder : kLabeledDefaultMaxOrder;
  if (n > ceiling) {
    throw OrderLimitError("exhaustive labeled scan of order " + std::to_string(n) + " exceeds the ceiling " +
                          std::to_string(ceiling) + (allow_order_8 ? "" : " (order 8 needs explicit opt-in)"));
  }
}

std::string_view to_string(Side side) { return side == Side::kMis ? "mis" : "clique"; }

std::optional<Side> parse_side(std::string_view name) {
  if (name == "mis") return Side::kMis;
  if (name == "clique") return Side::kClique;
  return std::nullopt;
}

Graph expected_extremal(int n, int t, Side side) {
  return side == Side::kMis ? build_H(n, t) : build_turan(n, t);
}

std::vector<VerifyTarget> default_targets(int n, std::span<const int> ts, Side side) {
  std::vector<VerifyTarget> out;
  for (int t : ts) {
    if (t < 1 || t > n) {
      throw VerifyError("verification needs 1 <= t <= n, got n=" + std::to_string(n) + " t=" + std::to_string(t));
    }
    out.push_back({t, expected_extremal(n, t, side)});
  }
  return out;
}

std::vector<ExtremalReport> verify_bound(const LabeledGraphs& source, std::span<const VerifyTarget> targets,
                                         const VerifyOptions& options) {
  const int n = source.order();
  const auto info = resolve_targets(n, targets);
  auto merged = scan_parallel([&](std::uint64_t i) { return source[i]; }, source.size(), info, options.side,
                              options.workers);
  return build_reports(n, targets, info, std::move(merged), source.size(), true,
                       "exhaustive-labeled(" + std::to_string(n) + ")", options.side);
}

std::vector<ExtremalReport> verify_bound(GraphStream& source, std::span<const VerifyTarget> targets,
                                         const VerifyOptions& options) {
  const std::vector<VerifyTarget> copy(targets.begin(), targets.end());
  return verify_bound(source, [&](int) { return copy; }, options);
}

std::vector<ExtremalReport> verify_bound(GraphStream& source, const TargetFactory& make_targets,
                                         const VerifyOptions& options) {
  constexpr std::size_t kChunk = 1 << 16;
  std::optional<int> n;
  std::vector<VerifyTarget> targets;
  std::vector<TargetInfo> info;
  std::vector<Partial> merged;
  std::uint64_t examined = 0;
  std::vector<Graph> chunk;

  auto flush = [&] {
    if (chunk.empty()) return;
    auto part = scan_parallel([&](std::uint64_t i) { return chunk[i]; }, chunk.size(), info, options.side,
                              options.workers);
    for (std::size_t k = 0; k < targets.size(); ++k) {
      merged[k].max_observed = std::max(merged[k].max_observed, part[k].max_observed);
      merged[k].attainer_graphs += part[k].attainer_graphs;
      merged[k].attainers.insert(merged[k].attainers.end(), part[k].attainers.begin(), part[k].attainers.end());
    }
    examined += chunk.size();
    chunk.clear();
  };

  while (auto g = source.next()) {
    if (!n) {
      n = g->order();
      targets = make_targets(*n);
      info = resolve_targets(*n, targets);
      merged.resize(targets.size());
    } else if (g->order() != *n) {
      throw VerifyError("line " + std::to_string(source.line()) + ": graph of order " + std::to_string(g->order()) +
                        " in a stream of order " + std::to_string(*n));
    }
    chunk.push_back(std::move(*g));
    if (chunk.size() == kChunk) flush();
  }
  if (!n) throw VerifyError("graph stream " + source.source() + " is empty");
  flush();
  return build_reports(*n, targets, info, std::move(merged), examined, false, "stream(" + source.source() + ")",
                       options.side);
}

ExtremalReport verify_bound(const LabeledGraphs& source, int t, const Graph& expected, const VerifyOptions& options) {
  const VerifyTarget target{t, expected};
  return verify_bound(source, std::span<const VerifyTarget>(&target, 1), options).front();
}

Count moon_moser_total(int n) {
  if (n < 2) throw ExtremalError("classical maximum is stated for n >= 2, got " + std::to_string(n));
  switch (n % 3) {
    case 0: return checked_pow(3, n / 3);
    case 1: return checked_mul(4, checked_pow(3, (n - 4) / 3));
    default: return checked_mul(2, checked_pow(3, (n - 2) / 3));
  }
}

}  // namespace mis
