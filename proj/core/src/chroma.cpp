#include <hypercol/chroma.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace hypercol {

BudgetExhausted::BudgetExhausted(std::uint64_t budget) :
    ResourceError("search node budget of " + std::to_string(budget) + " exhausted")
{
}

auto is_proper(const Hypergraph & h, const Coloring & phi) -> ProperCheck
{
  if (phi.size() != h.vertex_count())
    throw InputError("coloring covers " + std::to_string(phi.size()) + " of " + std::to_string(h.vertex_count()) +
        " vertices");
  for (const auto & e : h.edges()) {
    if (e.empty())
      continue;
    int first = phi[e.front()];
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return phi[v] == first; }))
      return {false, e};
  }
  return {true, std::nullopt};
}

namespace {
  using Mask = std::uint64_t;

  auto low_bits(int count) -> Mask
  {
    return count >= 64 ? ~Mask{0} : (Mask{1} << count) - 1;
  }

  /// Immutable per-instance data shared by all workers.
  struct Model {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<std::uint32_t>> incidence;
    std::vector<Vertex> order;

    explicit Model(const Hypergraph & h) : n(h.vertex_count()), edges(h.edges()), incidence(n), order(degree_order(h))
    {
      for (std::uint32_t e = 0; e < edges.size(); ++e)
        for (auto v : edges[e])
          incidence[v].push_back(e);
    }
  };

  struct KeyHash {
    auto operator()(const std::vector<std::uint64_t> & key) const noexcept -> std::size_t
    {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
      for (auto w : key) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xbf58476d1ce4e5b9ULL;
      }
      return static_cast<std::size_t>(h ^ (h >> 31));
    }
  };

  struct SharedCounter {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t budget;
    std::atomic<bool> stop{false};
  };

  /// Depth-first search state with forward checking: once every colored
  /// vertex of an edge has color c and exactly one vertex remains, c is
  /// removed from that vertex's domain.
  class Search {
  public:
    Search(const Model & model, int k, const SolverOptions & options, SharedCounter & counter) :
        _model(model),
        _k(k),
        _symmetry(options.symmetry_breaking),
        _cache_limit(options.failure_cache_bytes),
        _counter(counter),
        _color(model.n, -1),
        _domain(model.n, low_bits(k)),
        _colored(model.edges.size(), 0),
        _count(model.edges.size() * static_cast<std::size_t>(k), 0)
    {
    }

    auto colors() const -> const std::vector<int> & { return _color; }

    auto candidates(Vertex v) const -> Mask
    {
      auto d = _domain[v];
      if (_symmetry)
        d &= low_bits(_max_used + 2);
      return d;
    }

    /// Forced vertices (at most one candidate color) first, otherwise the
    /// first uncolored vertex in the static order. Returns n when every
    /// vertex is colored.
    auto select() const -> std::size_t
    {
      std::size_t first = _model.n;
      for (auto v : _model.order) {
        if (_color[v] >= 0)
          continue;
        if (first == _model.n)
          first = v;
        if ((_domain[v] & (_domain[v] - 1)) == 0)
          return v;
      }
      return first;
    }

    /// Always pushes a frame; returns false when some domain was wiped out.
    auto assign(Vertex v, int c) -> bool
    {
      _frames.push_back({v, _max_used, _removals.size()});
      _color[v] = c;
      _max_used = std::max(_max_used, c);
      for (auto e : _model.incidence[v]) {
        ++_colored[e];
        ++_count[e * _k + c];
      }
      bool ok = true;
      auto bit = Mask{1} << c;
      for (auto e : _model.incidence[v]) {
        const auto & edge = _model.edges[e];
        if (_colored[e] + 1 != edge.size() || _count[e * _k + c] != _colored[e])
          continue;
        for (auto w : edge)
          if (_color[w] < 0) {
            if (_domain[w] & bit) {
              _domain[w] &= ~bit;
              _removals.emplace_back(w, bit);
              if (_domain[w] == 0)
                ok = false;
            }
            break;
          }
        if (! ok)
          break;
      }
      return ok;
    }

    auto undo() -> void
    {
      auto frame = _frames.back();
      _frames.pop_back();
      while (_removals.size() > frame.removal_mark) {
        auto [w, bit] = _removals.back();
        _domain[w] |= bit;
        _removals.pop_back();
      }
      auto c = _color[frame.vertex];
      for (auto e : _model.incidence[frame.vertex]) {
        --_colored[e];
        --_count[e * _k + c];
      }
      _color[frame.vertex] = -1;
      _max_used = frame.max_used;
    }

    auto undo_all() -> void
    {
      while (! _frames.empty())
        undo();
    }

    auto tick() -> void
    {
      if (++_local_nodes >= flush_every)
        flush();
    }

    auto flush() -> void
    {
      auto total = _counter.nodes.fetch_add(_local_nodes) + _local_nodes;
      _local_nodes = 0;
      if (total > _counter.budget)
        throw BudgetExhausted(_counter.budget);
    }

    /// The residual problem below a node: domains of uncolored vertices,
    /// plus every partially colored edge that could still turn monochromatic
    /// together with its color. Edges with no colored vertex are implied by
    /// the set of uncolored vertices. Whether a completion exists depends on
    /// nothing else (unused colors are interchangeable), so a key that failed
    /// once fails again.
    auto residual_key() const -> std::vector<std::uint64_t>
    {
      std::vector<std::uint64_t> key;
      key.reserve(_model.n + 16);
      for (std::size_t v = 0; v < _model.n; ++v)
        key.push_back(_color[v] >= 0 ? 0 : _domain[v]);
      for (std::uint32_t e = 0; e < _model.edges.size(); ++e) {
        auto colored = _colored[e];
        const auto & edge = _model.edges[e];
        if (colored == 0 || colored == edge.size())
          continue;
        int c = -1;
        for (auto w : edge)
          if (_color[w] >= 0) {
            c = _color[w];
            break;
          }
        if (_count[e * _k + c] != colored)
          continue;
        auto bit = Mask{1} << c;
        bool live = true;
        for (auto w : edge)
          if (_color[w] < 0 && ! (_domain[w] & bit)) {
            live = false;
            break;
          }
        if (live)
          key.push_back((std::uint64_t{e} << 8) | static_cast<std::uint64_t>(c));
      }
      return key;
    }

    auto solve() -> bool
    {
      tick();
      if (_counter.stop.load(std::memory_order_relaxed))
        return false;
      auto v = select();
      if (v == _model.n)
        return true;

      std::vector<std::uint64_t> key;
      if (_cache_limit > 0) {
        key = residual_key();
        if (_failed.contains(key))
          return false;
      }

      auto cand = candidates(static_cast<Vertex>(v));
      while (cand) {
        int c = std::countr_zero(cand);
        cand &= cand - 1;
        if (assign(static_cast<Vertex>(v), c) && solve())
          return true;
        undo();
      }

      if (_cache_limit > 0 && ! _counter.stop.load(std::memory_order_relaxed)) {
        auto bytes = key.size() * sizeof(std::uint64_t) + 64;
        if (_cache_bytes + bytes <= _cache_limit) {
          _cache_bytes += bytes;
          _failed.insert(std::move(key));
        }
      }
      return false;
    }

    /// Enumerates consistent decision prefixes of the given depth.
    auto collect(std::size_t depth, std::vector<std::pair<Vertex, int>> & prefix,
        std::vector<std::vector<std::pair<Vertex, int>>> & out) -> void
    {
      tick();
      auto v = select();
      if (depth == 0 || v == _model.n) {
        out.push_back(prefix);
        return;
      }
      auto cand = candidates(static_cast<Vertex>(v));
      while (cand) {
        int c = std::countr_zero(cand);
        cand &= cand - 1;
        if (assign(static_cast<Vertex>(v), c)) {
          prefix.emplace_back(static_cast<Vertex>(v), c);
          collect(depth - 1, prefix, out);
          prefix.pop_back();
        }
        undo();
      }
    }

  private:
    static constexpr std::uint64_t flush_every = 4096;

    struct Frame {
      Vertex vertex;
      int max_used;
      std::size_t removal_mark;
    };

    const Model & _model;
    int _k;
    bool _symmetry;
    std::size_t _cache_limit;
    std::size_t _cache_bytes = 0;
    std::unordered_set<std::vector<std::uint64_t>, KeyHash> _failed;
    SharedCounter & _counter;
    std::uint64_t _local_nodes = 0;
    int _max_used = -1;
    std::vector<int> _color;
    std::vector<Mask> _domain;
    std::vector<std::uint32_t> _colored;
    std::vector<std::uint32_t> _count;
    std::vector<Frame> _frames;
    std::vector<std::pair<Vertex, Mask>> _removals;
  };

  auto to_coloring(const std::vector<int> & zero_based, int k) -> Coloring
  {
    std::vector<int> colors(zero_based.size());
    std::transform(zero_based.begin(), zero_based.end(), colors.begin(), [](int c) { return c + 1; });
    return Coloring(std::move(colors), k);
  }

  auto solve_sequential(const Model & model, int k, const SolverOptions & options, SharedCounter & counter)
      -> std::optional<Coloring>
  {
    Search search(model, k, options, counter);
    bool found = search.solve();
    search.flush();
    if (! found)
      return std::nullopt;
    return to_coloring(search.colors(), k);
  }

  auto solve_parallel(const Model & model, int k, const SolverOptions & options, SharedCounter & counter)
      -> std::optional<Coloring>
  {
    // Split the tree into enough independent subproblems to keep every worker busy.
    std::vector<std::vector<std::pair<Vertex, int>>> tasks;
    {
      Search splitter(model, k, options, counter);
      std::vector<std::pair<Vertex, int>> prefix;
      for (std::size_t depth = 1; depth <= model.n; ++depth) {
        tasks.clear();
        splitter.collect(depth, prefix, tasks);
        if (tasks.size() >= 8 * static_cast<std::size_t>(options.threads) || tasks.empty())
          break;
      }
      splitter.flush();
    }

    std::atomic<std::size_t> next{0};
    std::mutex lock;
    std::optional<Coloring> result;
    std::exception_ptr failure;

    auto worker = [&] {
      try {
        Search search(model, k, options, counter);
        for (auto i = next.fetch_add(1); i < tasks.size() && ! counter.stop.load(); i = next.fetch_add(1)) {
          bool consistent = true;
          for (auto [v, c] : tasks[i])
            consistent = search.assign(v, c) && consistent;
          if (consistent && search.solve()) {
            std::lock_guard guard(lock);
            if (! result)
              result = to_coloring(search.colors(), k);
            counter.stop = true;
          }
          search.undo_all();
        }
        search.flush();
      }
      catch (...) {
        std::lock_guard guard(lock);
        if (! failure)
          failure = std::current_exception();
        counter.stop = true;
      }
    };

    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < options.threads; ++t)
      pool.emplace_back(worker);
    pool.clear();

    if (result)
      return result;
    if (failure)
      std::rethrow_exception(failure);
    return std::nullopt;
  }
} // namespace

auto is_k_colorable(const Hypergraph & h, int k, const SolverOptions & options, SolverStats * stats)
    -> std::optional<Coloring>
{
  if (k < 1)
    throw InputError("k must be positive");
  if (k > max_colors)
    throw InputError("at most " + std::to_string(max_colors) + " colors are supported");
  require_well_formed(h);

  auto start = std::chrono::steady_clock::now();
  Model model(h);
  SharedCounter counter;
  counter.budget = options.node_budget;

  auto finish = [&] {
    if (stats) {
      stats->nodes += counter.nodes.load();
      stats->wall_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };

  try {
    auto result = options.threads > 1 ? solve_parallel(model, k, options, counter)
                                      : solve_sequential(model, k, options, counter);
    finish();
    return result;
  }
  catch (...) {
    finish();
    throw;
  }
}

auto degree_order(const Hypergraph & h) -> std::vector<Vertex>
{
  std::vector<std::size_t> degree(h.vertex_count(), 0);
  for (const auto & e : h.edges())
    for (auto v : e)
      if (v < degree.size())
        ++degree[v];
  std::vector<Vertex> order(h.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
  return order;
}

auto greedy_coloring(const Hypergraph & h, std::span<const Vertex> order) -> Coloring
{
  require_well_formed(h);
  auto n = h.vertex_count();
  std::vector<bool> seen(n, false);
  if (order.size() != n)
    throw InputError("vertex order must be a permutation");
  for (auto v : order) {
    if (v >= n || seen[v])
      throw InputError("vertex order must be a permutation");
    seen[v] = true;
  }

  std::vector<std::vector<std::uint32_t>> incidence(n);
  for (std::uint32_t e = 0; e < h.edges().size(); ++e)
    for (auto v : h.edges()[e])
      incidence[v].push_back(e);

  std::vector<int> color(n, 0);
  int used = 1;
  std::vector<bool> forbidden;
  for (auto v : order) {
    forbidden.assign(static_cast<std::size_t>(used) + 2, false);
    for (auto e : incidence[v]) {
      int shared = 0;
      bool mono = true;
      for (auto w : h.edges()[e]) {
        if (w == v)
          continue;
        if (color[w] == 0 || (shared != 0 && color[w] != shared)) {
          mono = false;
          break;
        }
        shared = color[w];
      }
      if (mono && shared != 0)
        forbidden[shared] = true;
    }
    int c = 1;
    while (forbidden[c])
      ++c;
    color[v] = c;
    used = std::max(used, c);
  }
  return Coloring(std::move(color), used);
}

auto greedy_upper_bound(const Hypergraph & h, std::span<const Vertex> order) -> int
{
  return greedy_coloring(h, order).palette();
}

auto chromatic_number(const Hypergraph & h, const SolverOptions & options) -> ChromaticResult
{
  require_well_formed(h);
  ChromaticResult result;
  auto n = h.vertex_count();
  if (h.edges().empty()) {
    result.chi = 1;
    result.witness = Coloring(std::vector<int>(n, 1), 1);
    return result;
  }

  auto order = degree_order(h);
  result.witness = greedy_coloring(h, order);
  result.chi = result.witness.palette();

  int k = std::min(result.chi - 1, max_colors);
  if (result.chi - 1 > max_colors) {
    // the greedy bound is useless above the solver's palette limit
    auto c = is_k_colorable(h, max_colors, options, &result.stats);
    if (! c)
      throw ResourceError("chromatic number exceeds " + std::to_string(max_colors));
    result.witness = *c;
    result.chi = max_colors;
    k = max_colors - 1;
  }
  for (; k >= 2; --k) {
    auto c = is_k_colorable(h, k, options, &result.stats);
    if (! c)
      break;
    result.witness = std::move(*c);
    result.chi = k;
  }
  result.witness = Coloring(result.witness.colors(), result.chi);
  return result;
}

} // namespace hypercol
