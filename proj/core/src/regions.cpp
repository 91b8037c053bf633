#include "singreg/regions.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>
#include <unordered_map>

namespace singreg::regions {

namespace {

const Rational& pi_down() {
  static const Rational v(3141592653, 1000000000);
  return v;
}

Integer floor_of(const Rational& r) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return out;
}

std::uint64_t pack(int depth, std::int64_t i, std::int64_t j) {
  return (static_cast<std::uint64_t>(depth) << 58) | (static_cast<std::uint64_t>(i) << 29) |
         static_cast<std::uint64_t>(j);
}

struct CellKey {
  int depth;
  std::int64_t i, j;
};

bool key_less(const CellKey& a, const CellKey& b) {
  if (a.depth != b.depth) return a.depth < b.depth;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

// Leaf lookup and edge neighbours over a set of quadtree leaves.
class Quadtree {
 public:
  Quadtree(int resolution, int max_depth, const std::vector<CellKey>& leaves)
      : resolution_(resolution), max_depth_(max_depth) {
    for (std::size_t k = 0; k < leaves.size(); ++k) index_.emplace(pack(leaves[k].depth, leaves[k].i, leaves[k].j), k);
  }

  std::size_t find(int depth, std::int64_t i, std::int64_t j) const {
    auto it = index_.find(pack(depth, i, j));
    return it == index_.end() ? npos : it->second;
  }

  // dir: 0 = +i, 1 = -i, 2 = +j, 3 = -j
  std::vector<std::size_t> neighbours(const CellKey& c, int dir) const {
    std::vector<std::size_t> out;
    const std::int64_t n = static_cast<std::int64_t>(resolution_) << c.depth;
    const std::int64_t ni = c.i + (dir == 0 ? 1 : dir == 1 ? -1 : 0);
    const std::int64_t nj = c.j + (dir == 2 ? 1 : dir == 3 ? -1 : 0);
    if (ni < 0 || nj < 0 || ni >= n || nj >= n) return out;
    for (int d = c.depth; d >= 0; --d) {
      const int shift = c.depth - d;
      std::size_t k = find(d, ni >> shift, nj >> shift);
      if (k != npos) {
        out.push_back(k);
        return out;
      }
    }
    descend(c.depth, ni, nj, dir, out);
    return out;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  // children of (depth, i, j) on the edge facing the cell we came from
  void descend(int depth, std::int64_t i, std::int64_t j, int dir, std::vector<std::size_t>& out) const {
    if (depth >= max_depth_) return;
    for (int s = 0; s < 2; ++s) {
      std::int64_t ci = 2 * i, cj = 2 * j;
      if (dir <= 1) {
        ci += dir == 0 ? 0 : 1;
        cj += s;
      } else {
        ci += s;
        cj += dir == 2 ? 0 : 1;
      }
      std::size_t k = find(depth + 1, ci, cj);
      if (k != npos) out.push_back(k);
      else descend(depth + 1, ci, cj, dir, out);
    }
  }

  int resolution_;
  int max_depth_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

std::vector<CellKey> keys_of(const std::vector<Cell>& cells) {
  std::vector<CellKey> keys;
  keys.reserve(cells.size());
  for (const auto& c : cells) keys.push_back({c.depth, c.i, c.j});
  return keys;
}

Rational axis_center(const Axis& axis, int resolution, int depth, std::int64_t index) {
  Rational w = (axis.hi - axis.lo) / Rational(Integer(resolution) << depth);
  Rational c = axis.lo + w * Rational(2 * index + 1, 2);
  c.canonicalize();
  return c;
}

Cell classify_cell(const Problem& problem, const ParamWindow& window, int resolution, const CellKey& key) {
  Cell cell;
  cell.depth = key.depth;
  cell.i = key.i;
  cell.j = key.j;
  cell.center = {axis_center(window.axes[0], resolution, key.depth, key.i),
                 axis_center(window.axes[1], resolution, key.depth, key.j)};
  intersect::IntersectionReport rep = intersect::classify_design(problem, cell.center[0], cell.center[1]);
  for (const auto& c : rep.per_curve) cell.counts.push_back(c.count);
  cell.total = rep.total;
  cell.feasible = rep.feasible;
  cell.reason = rep.reason;
  cell.flagged = rep.flagged();
  return cell;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t k = 0; k < n; ++k) parent[k] = k;
  }
  std::size_t find(std::size_t k) {
    while (parent[k] != k) k = parent[k] = parent[parent[k]];
    return k;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Cell centre maximizing the chessboard distance to the complement,
// measured on a raster at the component's finest depth.
std::array<Rational, 2> representative_of(const RegionMap& map, const Component& comp) {
  int dc = 0;
  for (std::size_t k : comp.cells) dc = std::max(dc, map.cells[k].depth);
  std::int64_t imin = std::numeric_limits<std::int64_t>::max(), jmin = imin, imax = -1, jmax = -1;
  for (std::size_t k : comp.cells) {
    const Cell& c = map.cells[k];
    const int s = dc - c.depth;
    imin = std::min(imin, c.i << s);
    jmin = std::min(jmin, c.j << s);
    imax = std::max(imax, ((c.i + 1) << s) - 1);
    jmax = std::max(jmax, ((c.j + 1) << s) - 1);
  }
  // one cell of padding on every side
  const std::int64_t w = imax - imin + 3, h = jmax - jmin + 3;
  std::vector<std::int32_t> dist(static_cast<std::size_t>(w * h), 0);
  auto at = [&](std::int64_t x, std::int64_t y) -> std::int32_t& { return dist[static_cast<std::size_t>(y * w + x)]; };
  const std::int32_t big = std::numeric_limits<std::int32_t>::max() / 2;
  for (std::size_t k : comp.cells) {
    const Cell& c = map.cells[k];
    const int s = dc - c.depth;
    for (std::int64_t x = (c.i << s); x < ((c.i + 1) << s); ++x)
      for (std::int64_t y = (c.j << s); y < ((c.j + 1) << s); ++y) at(x - imin + 1, y - jmin + 1) = big;
  }
  for (std::int64_t y = 1; y < h - 1; ++y)
    for (std::int64_t x = 1; x < w - 1; ++x) {
      auto& v = at(x, y);
      if (v == 0) continue;
      v = std::min({v, at(x - 1, y) + 1, at(x - 1, y - 1) + 1, at(x, y - 1) + 1, at(x + 1, y - 1) + 1});
    }
  for (std::int64_t y = h - 2; y >= 1; --y)
    for (std::int64_t x = w - 2; x >= 1; --x) {
      auto& v = at(x, y);
      if (v == 0) continue;
      v = std::min({v, at(x + 1, y) + 1, at(x + 1, y + 1) + 1, at(x, y + 1) + 1, at(x - 1, y + 1) + 1});
    }
  std::int32_t best = 0;
  for (auto v : dist) best = std::max(best, v);
  std::vector<std::pair<std::int64_t, std::int64_t>> ties;
  Integer sx = 0, sy = 0;
  for (std::int64_t x = 1; x < w - 1; ++x)
    for (std::int64_t y = 1; y < h - 1; ++y)
      if (at(x, y) == best) {
        ties.emplace_back(x, y);
        sx += x;
        sy += y;
      }
  // mean of the tied centres, in padded raster coordinates
  Rational ux = Rational(sx) / Rational(Integer(ties.size())) + Rational(1, 2);
  Rational uy = Rational(sy) / Rational(Integer(ties.size())) + Rational(1, 2);
  ux.canonicalize();
  uy.canonicalize();
  auto touching = [](const Rational& u) {
    std::vector<std::int64_t> out{floor_of(u).get_si()};
    if (u.get_den() == 1) out.push_back(out.front() - 1);
    return out;
  };
  bool inside = true;
  for (auto x : touching(ux))
    for (auto y : touching(uy)) inside = inside && x > 0 && y > 0 && x < w - 1 && y < h - 1 && at(x, y) > 0;
  if (!inside) {
    ux = Rational(ties.front().first) + Rational(1, 2);
    uy = Rational(ties.front().second) + Rational(1, 2);
  }
  const Rational wa = map.cell_width(0, dc), wb = map.cell_width(1, dc);
  Rational a = map.window.axes[0].lo + (ux - 1 + Rational(imin)) * wa;
  Rational b = map.window.axes[1].lo + (uy - 1 + Rational(jmin)) * wb;
  a.canonicalize();
  b.canonicalize();
  return {a, b};
}

void label_components(RegionMap& map) {
  const auto keys = keys_of(map.cells);
  Quadtree tree(map.resolution, map.max_depth, keys);
  UnionFind uf(map.cells.size());
  // every adjacent pair is seen from its lower/left member
  for (std::size_t k = 0; k < keys.size(); ++k) {
    for (int dir : {0, 2}) {
      for (std::size_t n : tree.neighbours(keys[k], dir)) {
        if (map.cells[k].same_class(map.cells[n])) uf.unite(k, n);
      }
    }
  }
  map.components.clear();
  std::unordered_map<std::size_t, int> id_of_root;
  for (std::size_t k = 0; k < map.cells.size(); ++k) {
    const std::size_t r = uf.find(k);
    auto [it, fresh] = id_of_root.emplace(r, static_cast<int>(map.components.size()));
    if (fresh) {
      Component c;
      c.id = it->second;
      c.feasible = map.cells[k].feasible;
      c.counts = map.cells[k].counts;
      c.area_cells = 0;
      map.components.push_back(std::move(c));
    }
    Component& comp = map.components[static_cast<std::size_t>(it->second)];
    comp.cells.push_back(k);
    map.cells[k].component = comp.id;
  }
  for (auto& comp : map.components) {
    bool first = true;
    for (std::size_t k : comp.cells) {
      const Cell& c = map.cells[k];
      const Rational wa = map.cell_width(0, c.depth), wb = map.cell_width(1, c.depth);
      std::array<Rational, 4> box{c.center[0] - wa / 2, c.center[0] + wa / 2, c.center[1] - wb / 2,
                                  c.center[1] + wb / 2};
      for (auto& v : box) v.canonicalize();
      if (first) {
        comp.bbox = box;
        first = false;
      } else {
        comp.bbox[0] = std::min(comp.bbox[0], box[0]);
        comp.bbox[1] = std::max(comp.bbox[1], box[1]);
        comp.bbox[2] = std::min(comp.bbox[2], box[2]);
        comp.bbox[3] = std::max(comp.bbox[3], box[3]);
      }
      comp.area_cells += Rational(1, Integer(1) << (2 * c.depth));
    }
    comp.area_cells.canonicalize();
    comp.representative = representative_of(map, comp);
  }
}

bool same_window(const ParamWindow& a, const ParamWindow& b) {
  for (int k = 0; k < 2; ++k) {
    if (a.axes[k].name != b.axes[k].name || a.axes[k].lo != b.axes[k].lo || a.axes[k].hi != b.axes[k].hi) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------- window

ParamWindow ParamWindow::defaults(const Problem& problem) {
  if (problem.robot == intersect::Robot::fivebar) {
    return {{Axis{"f", Rational(1, 5), Rational(6)}, Axis{"l", Rational(1, 5), Rational(6)}}};
  }
  return {{Axis{"h", Rational(1, 2), Rational(6)}, Axis{"alpha", -pi_down(), pi_down()}}};
}

void ParamWindow::validate(const Problem& problem) const {
  const auto names = problem.axes();
  for (int k = 0; k < 2; ++k) {
    if (axes[k].name != names[k]) {
      throw DomainError("window axis " + std::to_string(k + 1) + " must be '" + names[k] + "'");
    }
    if (!(axes[k].lo < axes[k].hi)) throw DomainError("window axis '" + axes[k].name + "' needs lo < hi");
  }
  if (problem.robot == intersect::Robot::fivebar) {
    if (sgn(axes[0].lo) <= 0 || sgn(axes[1].lo) <= 0) throw DomainError("f and l must be positive over the window");
  } else {
    if (sgn(axes[0].lo) <= 0) throw DomainError("h must be positive over the window");
    if (!(to_double(axes[1].lo) > -std::numbers::pi) || !(to_double(axes[1].hi) <= std::numbers::pi)) {
      throw DomainError("alpha window must lie in (-pi, pi]");
    }
  }
}

// ---------------------------------------------------------------- map

bool Component::zero_count() const {
  return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; });
}

Rational RegionMap::cell_width(int axis, int depth) const {
  const Axis& ax = window.axes[static_cast<std::size_t>(axis)];
  Rational w = (ax.hi - ax.lo) / Rational(Integer(resolution) << depth);
  w.canonicalize();
  return w;
}

std::size_t RegionMap::cell_index_at(const Rational& a, const Rational& b) const {
  const auto& ax = window.axes;
  if (a < ax[0].lo || a > ax[0].hi || b < ax[1].lo || b > ax[1].hi) throw DomainError("point outside the window");
  Quadtree tree(resolution, max_depth, keys_of(cells));
  for (int d = 0; d <= max_depth; ++d) {
    const std::int64_t n = static_cast<std::int64_t>(resolution) << d;
    std::int64_t i = std::min<std::int64_t>(floor_of((a - ax[0].lo) / cell_width(0, d)).get_si(), n - 1);
    std::int64_t j = std::min<std::int64_t>(floor_of((b - ax[1].lo) / cell_width(1, d)).get_si(), n - 1);
    std::size_t k = tree.find(d, i, j);
    if (k != Quadtree::npos) return k;
  }
  throw DomainError("region map has no leaf at the point");
}

const Cell& RegionMap::cell_at(const Rational& a, const Rational& b) const { return cells[cell_index_at(a, b)]; }

const Component& RegionMap::component_at(const Rational& a, const Rational& b) const {
  return components[static_cast<std::size_t>(cell_at(a, b).component)];
}

std::vector<const Component*> RegionMap::feasible_components() const {
  std::vector<const Component*> out;
  for (const auto& c : components)
    if (c.feasible) out.push_back(&c);
  return out;
}

std::vector<const Component*> RegionMap::zero_count_components() const {
  std::vector<const Component*> out;
  for (const auto& c : components)
    if (c.zero_count()) out.push_back(&c);
  return out;
}

// ---------------------------------------------------------------- sweeps

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  if (jobs <= 1) {
    for (std::size_t k = 0; k < n; ++k) fn(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = n;
  std::exception_ptr failure;
  auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(mu);
        if (k < failed_at) {
          failed_at = k;
          failure = std::current_exception();
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<RegionMap> sweep_family(const std::vector<Problem>& problems, const ParamWindow& window,
                                    const SweepOptions& options) {
  if (problems.empty()) throw DomainError("sweep needs at least one problem");
  if (options.resolution < 16) throw DomainError("resolution must be at least 16");
  if (options.resolution > (1 << 20)) throw DomainError("resolution too large");
  if (options.max_depth < 0 || options.max_depth > 6) throw DomainError("refinement depth must be 0..6");
  for (const auto& p : problems) {
    p.validate();
    window.validate(p);
  }
  const std::size_t np = problems.size();

  struct Leaf {
    CellKey key;
    std::vector<Cell> cells;  // one per problem
  };
  auto classify_all = [&](const std::vector<CellKey>& keys) {
    std::vector<Leaf> out(keys.size());
    parallel_for(keys.size(), options.jobs, [&](std::size_t k) {
      out[k].key = keys[k];
      out[k].cells.reserve(np);
      for (const auto& p : problems) out[k].cells.push_back(classify_cell(p, window, options.resolution, keys[k]));
    });
    return out;
  };

  std::vector<CellKey> base;
  for (std::int64_t i = 0; i < options.resolution; ++i)
    for (std::int64_t j = 0; j < options.resolution; ++j) base.push_back({0, i, j});
  std::vector<Leaf> leaves = classify_all(base);

  auto same = [&](const Leaf& a, const Leaf& b) {
    for (std::size_t p = 0; p < np; ++p)
      if (!a.cells[p].same_class(b.cells[p])) return false;
    return true;
  };

  for (;;) {
    std::vector<CellKey> keys;
    for (const auto& l : leaves) keys.push_back(l.key);
    Quadtree tree(options.resolution, options.max_depth, keys);
    std::vector<char> split(leaves.size(), 0);
    bool any = false;
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      if (leaves[k].key.depth >= options.max_depth) continue;
      for (int dir = 0; dir < 4 && !split[k]; ++dir) {
        for (std::size_t n : tree.neighbours(leaves[k].key, dir)) {
          if (!same(leaves[k], leaves[n])) {
            split[k] = 1;
            any = true;
            break;
          }
        }
      }
    }
    if (!any) break;
    std::vector<CellKey> children;
    std::vector<Leaf> kept;
    for (std::size_t k = 0; k < leaves.size(); ++k) {
      if (!split[k]) {
        kept.push_back(std::move(leaves[k]));
        continue;
      }
      const CellKey& c = leaves[k].key;
      for (int di = 0; di < 2; ++di)
        for (int dj = 0; dj < 2; ++dj) children.push_back({c.depth + 1, 2 * c.i + di, 2 * c.j + dj});
    }
    std::vector<Leaf> fresh = classify_all(children);
    leaves = std::move(kept);
    for (auto& l : fresh) leaves.push_back(std::move(l));
    std::sort(leaves.begin(), leaves.end(), [](const Leaf& a, const Leaf& b) { return key_less(a.key, b.key); });
  }

  std::vector<RegionMap> maps(np);
  for (std::size_t p = 0; p < np; ++p) {
    RegionMap& m = maps[p];
    m.window = window;
    m.resolution = options.resolution;
    m.max_depth = options.max_depth;
    m.curve_names = problems[p].curve_names();
    m.cells.reserve(leaves.size());
    for (const auto& l : leaves) m.cells.push_back(l.cells[p]);
    label_components(m);
  }
  return maps;
}

RegionMap sweep(const Problem& problem, const ParamWindow& window, const SweepOptions& options) {
  return std::move(sweep_family({problem}, window, options).front());
}

RegionMap intersect_regions(const std::vector<RegionMap>& maps) {
  if (maps.empty()) throw DomainError("intersect_regions needs at least one map");
  const RegionMap& first = maps.front();
  for (const auto& m : maps) {
    if (!same_window(m.window, first.window) || m.resolution != first.resolution || m.max_depth != first.max_depth ||
        m.cells.size() != first.cells.size() || m.curve_names != first.curve_names) {
      throw DomainError("intersect_regions: maps are not over identical grids");
    }
    for (std::size_t k = 0; k < m.cells.size(); ++k) {
      const Cell &a = m.cells[k], &b = first.cells[k];
      if (a.depth != b.depth || a.i != b.i || a.j != b.j) {
        throw DomainError("intersect_regions: maps have different refinement");
      }
    }
  }
  RegionMap out;
  out.window = first.window;
  out.resolution = first.resolution;
  out.max_depth = first.max_depth;
  out.curve_names = first.curve_names;
  out.cells = first.cells;
  for (std::size_t k = 0; k < out.cells.size(); ++k) {
    Cell& c = out.cells[k];
    c.feasible = true;
    c.reason = Reason::feasible;
    c.flagged = false;
    for (const auto& m : maps) {
      const Cell& o = m.cells[k];
      for (std::size_t v = 0; v < c.counts.size(); ++v) c.counts[v] = std::max(c.counts[v], o.counts[v]);
      c.flagged = c.flagged || o.flagged;
      if (!o.feasible && c.feasible) {
        c.feasible = false;
        c.reason = o.reason;
      }
    }
    c.total = 0;
    for (int v : c.counts) c.total += v;
    c.component = -1;
  }
  label_components(out);
  return out;
}

RegionMap fourbar_sweep(const Rational& l, const Rational& d, const ParamWindow& window,
                        const workspace::WorkspaceSpec& workspace, const SweepOptions& options) {
  Problem p;
  p.robot = intersect::Robot::fourbar;
  p.l = l;
  p.d = d;
  p.workspace = workspace;
  return sweep(p, window, options);
}

std::vector<AlphaInterval> alpha_range_at(const RegionMap& map, const Rational& h) {
  const Axis& ha = map.window.axes[0];
  const Axis& aa = map.window.axes[1];
  if (h < ha.lo || h > ha.hi) throw DomainError("h outside the window");
  std::vector<const Cell*> column;
  for (const auto& c : map.cells) {
    const Rational half = map.cell_width(0, c.depth) / 2;
    const Rational lo = c.center[0] - half, hi = c.center[0] + half;
    if (lo <= h && (h < hi || (hi == ha.hi && h == hi))) column.push_back(&c);
  }
  std::sort(column.begin(), column.end(), [](const Cell* a, const Cell* b) { return a->center[1] < b->center[1]; });
  std::vector<AlphaInterval> out;
  for (std::size_t k = 0; k < column.size(); ++k) {
    if (!column[k]->feasible) continue;
    std::size_t e = k;
    while (e + 1 < column.size() && column[e + 1]->feasible) ++e;
    AlphaInterval iv;
    iv.inner_lo = column[k]->center[1];
    iv.inner_hi = column[e]->center[1];
    iv.outer_lo = k > 0 ? column[k - 1]->center[1] : aa.lo;
    iv.outer_hi = e + 1 < column.size() ? column[e + 1]->center[1] : aa.hi;
    out.push_back(iv);
    k = e;
  }
  return out;
}

std::vector<std::array<Rational, 2>> representative_designs(const RegionMap& map) {
  std::vector<std::array<Rational, 2>> out;
  for (const auto& c : map.components)
    if (c.feasible) out.push_back(c.representative);
  return out;
}

}  // namespace singreg::regions
