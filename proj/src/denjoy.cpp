#include "crig/denjoy.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "crig/error.hpp"

namespace crig {
namespace {

constexpr double kFreeTolerance = 1e-10;

// All reduced words up to `depth` applied to `start`, level by level. Letter
// code c stands for generator c / 2, inverted when c is odd.
struct OrbitLevel {
  std::vector<double> turns;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> letter;
};

std::vector<OrbitLevel> orbit_bfs(const Representation& rep, double start, int depth) {
  const std::size_t codes = 2 * rep.images().size();
  std::vector<CircleHomeo> maps;
  for (const auto& f : rep.images()) {
    maps.push_back(f);
    maps.push_back(f.inverse());
  }
  std::vector<OrbitLevel> levels(1);
  levels[0].turns = {normalize_turns(start)};
  levels[0].parent = {0};
  levels[0].letter = {0xff};
  std::vector<double> in, out;
  std::vector<std::uint32_t> idx;
  for (int d = 1; d <= depth; ++d) {
    const OrbitLevel& prev = levels.back();
    OrbitLevel next;
    for (std::size_t c = 0; c < codes; ++c) {
      idx.clear();
      in.clear();
      for (std::uint32_t i = 0; i < prev.turns.size(); ++i) {
        if (prev.letter[i] != 0xff && prev.letter[i] == (c ^ 1U)) continue;
        idx.push_back(i);
        in.push_back(prev.turns[i]);
      }
      out.resize(in.size());
      evaluate_batch(maps[c], in, out);
      next.turns.insert(next.turns.end(), out.begin(), out.end());
      next.parent.insert(next.parent.end(), idx.begin(), idx.end());
      next.letter.insert(next.letter.end(), idx.size(), static_cast<std::uint8_t>(c));
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

Word word_at(const std::vector<OrbitLevel>& levels, int depth, std::uint32_t i) {
  Word w;
  for (int d = depth; d > 0; --d) {
    const std::uint8_t c = levels[d].letter[i];
    w.push_back({static_cast<std::uint32_t>(c / 2), (c % 2) == 1});
    i = levels[d].parent[i];
  }
  return w;  // outermost letter first
}

// Largest gap of sorted points on R/Z: (length, start).
std::pair<double, double> max_circular_gap(const std::vector<double>& sorted) {
  if (sorted.empty()) return {1.0, 0.0};
  double best = sorted.front() + 1.0 - sorted.back();
  double start = sorted.back();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double g = sorted[i] - sorted[i - 1];
    if (g > best) {
      best = g;
      start = sorted[i - 1];
    }
  }
  return {best, start};
}

template <class Transform>
MinimalityResult probe(const Representation& rep, double start, int depth, double threshold, Transform&& coord) {
  if (depth < 0) throw InputError("minimality probe depth must be >= 0");
  const auto levels = orbit_bfs(rep, start, depth);
  MinimalityResult res;
  res.threshold = threshold;
  std::vector<double> sorted;
  for (int d = 0; d <= depth; ++d) {
    const std::size_t mid = sorted.size();
    for (double t : levels[d].turns) sorted.push_back(coord(t));
    std::sort(sorted.begin() + static_cast<std::ptrdiff_t>(mid), sorted.end());
    std::inplace_merge(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(mid), sorted.end());
    const auto [gap, at] = max_circular_gap(sorted);
    res.by_depth.push_back({d, sorted.size(), gap, at});
  }
  res.gap_found = res.by_depth.back().max_gap >= threshold;
  return res;
}

std::size_t reduced_word_count(std::size_t generators, int n) {
  if (n == 0) return 1;
  std::size_t c = 2 * generators;
  for (int i = 1; i < n; ++i) c *= 2 * generators - 1;
  return c;
}

}  // namespace

int cyclic_order(double x, double y, double z, double tol) {
  const CirclePoint px(x), py(y), pz(z);
  if (circle_distance(px, py) <= tol || circle_distance(py, pz) <= tol || circle_distance(px, pz) <= tol) return 0;
  const double dy = normalize_turns(py.turns() - px.turns());
  const double dz = normalize_turns(pz.turns() - px.turns());
  return dy < dz ? 1 : -1;
}

SymbolicPoint PointAction::act(const Word& w, const SymbolicPoint& p) const {
  SymbolicPoint q = p;
  for (auto it = w.rbegin(); it != w.rend(); ++it) q = act(*it, q);
  return q;
}

bool PointAction::same(const OrderKey& p, const OrderKey& q) const {
  return circle_distance(CirclePoint(p.position), CirclePoint(q.position)) <= tol_ && p.sub == q.sub;
}

bool PointAction::less(const OrderKey& p, const OrderKey& q) const {
  if (circle_distance(CirclePoint(p.position), CirclePoint(q.position)) <= tol_) return p.sub < q.sub;
  return normalize_turns(p.position) < normalize_turns(q.position);
}

int PointAction::cyclic_order(const OrderKey& p, const OrderKey& q, const OrderKey& r) const {
  if (same(p, q) || same(q, r) || same(p, r)) return 0;
  const bool pq = less(p, q), qr = less(q, r), rp = less(r, p);
  // Exactly one of the three "less" relations fails for a cyclically
  // increasing triple, exactly two fail for a decreasing one.
  const int ascents = int(pq) + int(qr) + int(rp);
  return ascents == 2 ? 1 : -1;
}

int PointAction::cyclic_order(const SymbolicPoint& p, const SymbolicPoint& q, const SymbolicPoint& r) const {
  return cyclic_order(key(p), key(q), key(r));
}

SymbolicPoint CircleAction::act(Letter g, const SymbolicPoint& p) const {
  const auto* b = std::get_if<SymbolicPoint::Base>(&p.v);
  if (!b) throw InputError("circle action applies to Base points only");
  const CircleHomeo& f = rep_.images().at(g.generator);
  return SymbolicPoint::base(g.inverse ? f.lift_inverse(b->x) : f.lift(b->x));
}

OrderKey CircleAction::key(const SymbolicPoint& p) const {
  const auto* b = std::get_if<SymbolicPoint::Base>(&p.v);
  if (!b) throw InputError("circle action orders Base points only");
  return {b->x, 0.0};
}

BlownUpAction::BlownUpAction(Representation base, double p0, BlowUpOptions options)
    : PointAction(kPositionTolerance), base_(std::move(base)), p0_(normalize_turns(p0)), opt_(options) {
  if (!(opt_.lambda > 0.0 && opt_.lambda < 0.5)) throw InputError("blow-up lambda must lie in (0, 1/2)");
  if (opt_.free_check_depth < 0 || opt_.census_depth < 0) throw InputError("blow-up depths must be >= 0");
  const std::size_t gens = base_.images().size();
  for (int n = 0; n <= std::max(opt_.census_depth, 0); ++n) {
    words_of_length_.push_back(static_cast<double>(reduced_word_count(gens, n)));
  }

  // Sampled freeness of the orbit of p0.
  {
    const auto levels = orbit_bfs(base_, p0_, opt_.free_check_depth);
    for (int d = 1; d <= opt_.free_check_depth; ++d) {
      for (std::uint32_t i = 0; i < levels[d].turns.size(); ++i) {
        if (circle_distance(CirclePoint(levels[d].turns[i]), CirclePoint(p0_)) > kFreeTolerance) continue;
        const Word w = word_at(levels, d, i);
        if (base_.word_residual(w) <= base_.tolerance()) continue;  // trivial group element
        throw MarkedPointNotFreeError("word " + base_.presentation().format(w) + " fixes the marked point");
      }
    }
  }

  // Census: one entry per orbit point, the first word reaching it in
  // breadth-first order.
  const auto levels = orbit_bfs(base_, p0_, opt_.census_depth);
  std::vector<CensusEntry> all;
  for (int d = 0; d <= opt_.census_depth; ++d) {
    for (std::uint32_t i = 0; i < levels[d].turns.size(); ++i) {
      Word w = word_at(levels, d, i);
      const double len = length(w);
      all.push_back({std::move(w), levels[d].turns[i], len, 0.0});
    }
  }
  std::stable_sort(all.begin(), all.end(), [](const CensusEntry& a, const CensusEntry& b) { return a.position < b.position; });
  for (auto& e : all) {
    if (!census_.empty() && e.position - census_.back().position <= kPositionTolerance) {
      if (e.word.size() < census_.back().word.size()) census_.back() = std::move(e);
      continue;
    }
    census_.push_back(std::move(e));
  }
  if (census_.size() > 1 && census_.front().position + 1.0 - census_.back().position <= kPositionTolerance) {
    census_.pop_back();
  }
  for (const auto& e : census_) inserted_total_ += e.length;
  double before = 0.0;
  for (auto& e : census_) {
    e.left = (1.0 - inserted_total_) * e.position + before;
    before += e.length;
  }
}

double BlownUpAction::length(const Word& w) const {
  const int n = static_cast<int>(w.size());
  const double count = n < static_cast<int>(words_of_length_.size())
                           ? words_of_length_[n]
                           : static_cast<double>(reduced_word_count(base_.images().size(), n));
  return opt_.lambda * std::ldexp(1.0, -n) / count;
}

SymbolicPoint BlownUpAction::act(Letter g, const SymbolicPoint& p) const {
  if (const auto* b = std::get_if<SymbolicPoint::Base>(&p.v)) {
    const CircleHomeo& f = base_.images().at(g.generator);
    return SymbolicPoint::base(g.inverse ? f.lift_inverse(b->x) : f.lift(b->x));
  }
  const auto& ins = std::get<SymbolicPoint::Inserted>(p.v);
  Word w{g};
  w.insert(w.end(), ins.word.begin(), ins.word.end());
  return SymbolicPoint::inserted(std::move(w), ins.t);
}

OrderKey BlownUpAction::key(const SymbolicPoint& p) const {
  if (const auto* b = std::get_if<SymbolicPoint::Base>(&p.v)) return {b->x, 0.5};
  const auto& ins = std::get<SymbolicPoint::Inserted>(p.v);
  return {position(ins.word), ins.t};
}

double BlownUpAction::collapse(const SymbolicPoint& p) const {
  if (const auto* b = std::get_if<SymbolicPoint::Base>(&p.v)) return b->x;
  return position(std::get<SymbolicPoint::Inserted>(p.v).word);
}

double BlownUpAction::coordinate(double x) const {
  x = normalize_turns(x);
  const auto it = std::lower_bound(census_.begin(), census_.end(), x,
                                   [](const CensusEntry& e, double v) { return e.position < v; });
  if (it == census_.begin()) return (1.0 - inserted_total_) * x;
  const auto& prev = *(it - 1);
  return prev.left + prev.length + (1.0 - inserted_total_) * (x - prev.position);
}

const CensusEntry* BlownUpAction::census_at(double position) const {
  position = normalize_turns(position);
  auto it = std::lower_bound(census_.begin(), census_.end(), position - kPositionTolerance,
                             [](const CensusEntry& e, double v) { return e.position < v; });
  for (auto cand : {it, census_.begin(), census_.end() - 1}) {
    if (cand == census_.end() || census_.empty()) continue;
    if (circle_distance(CirclePoint(cand->position), CirclePoint(position)) <= kPositionTolerance) return &*cand;
  }
  return nullptr;
}

double collapse_map(const BlownUpAction& blown, const SymbolicPoint& p) { return blown.collapse(p); }

SemiConjugacyCertificate check_semi_conjugacy(const PointAction& A, const PointAction& B, const Correspondence& corr,
                                              const SymbolicPoint& start, const SemiConjugacyOptions& options) {
  const std::size_t codes = 2 * A.representation().images().size();
  SemiConjugacyCertificate cert;

  // Breadth-first orbit sample of distinct points.
  std::vector<Word> words{{}};
  std::vector<SymbolicPoint> pts{start};
  std::vector<OrderKey> keys{A.key(start)};
  for (std::size_t head = 0; head < pts.size() && pts.size() < options.samples; ++head) {
    for (std::size_t c = 0; c < codes && pts.size() < options.samples; ++c) {
      const Letter g{static_cast<std::uint32_t>(c / 2), (c % 2) == 1};
      SymbolicPoint q = A.act(g, pts[head]);
      const OrderKey k = A.key(q);
      if (std::any_of(keys.begin(), keys.end(), [&](const OrderKey& o) { return A.same(o, k); })) continue;
      Word w{g};
      w.insert(w.end(), words[head].begin(), words[head].end());
      words.push_back(reduce(std::move(w)));
      pts.push_back(std::move(q));
      keys.push_back(k);
    }
  }
  cert.samples = pts.size();

  std::vector<SymbolicPoint> images;
  std::vector<OrderKey> image_keys;
  for (const auto& p : pts) {
    images.push_back(corr(p));
    image_keys.push_back(B.key(images.back()));
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t c = 0; c < codes; ++c) {
      const Letter g{static_cast<std::uint32_t>(c / 2), (c % 2) == 1};
      ++cert.equivariance_checks;
      if (!B.same(corr(A.act(g, pts[i])), B.act(g, images[i]))) ++cert.equivariance_failures;
    }
  }

  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    ++cert.triples_checked;
    if (A.cyclic_order(keys[i], keys[j], keys[k]) != B.cyclic_order(image_keys[i], image_keys[j], image_keys[k])) {
      if (cert.mismatches++ == 0) cert.witness = std::array<Word, 3>{words[i], words[j], words[k]};
    }
  };
  const std::size_t n = pts.size();
  const double total = n < 3 ? 0.0 : static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
  if (total <= static_cast<double>(options.max_triples)) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) check(i, j, k);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    while (cert.triples_checked < options.max_triples) {
      const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
      if (i == j || j == k || i == k) continue;
      check(i, j, k);
    }
  }
  cert.pass = cert.mismatches == 0 && cert.equivariance_failures == 0;
  return cert;
}

MinimalityResult minimality_probe(const Representation& rep, double start, int depth, double threshold) {
  return probe(rep, start, depth, threshold, [](double t) { return t; });
}

MinimalityResult minimality_probe(const BlownUpAction& blown, double start, int depth, double threshold) {
  MinimalityResult res = probe(blown.base(), start, depth, threshold, [&](double t) { return blown.coordinate(t); });
  const GapReport& last = res.by_depth.back();
  for (const auto& e : blown.census()) {
    const double offset = normalize_turns(e.left - last.gap_start);
    if (offset + e.length <= last.max_gap && e.length > res.witness_length) {
      res.witness = e.word;
      res.witness_length = e.length;
    }
  }
  return res;
}

MeshRealization realize_mesh(const BlownUpAction& blown, int base_mesh, double tolerance) {
  if (base_mesh < 8) throw InputError("mesh needs at least 8 base points");
  const Representation& base = blown.base();
  auto lifted_coordinate = [&](double y) {
    const double k = std::floor(y);
    return k + blown.coordinate(y - k);
  };
  MeshRealization out{base, 0};
  std::vector<CircleHomeo> images;
  for (const CircleHomeo& f : base.images()) {
    std::vector<Breakpoint> knots;
    for (int k = 0; k < base_mesh; ++k) {
      const double x = (k + 0.5) / base_mesh;
      knots.push_back({blown.coordinate(x), lifted_coordinate(f.lift(x))});
    }
    for (const auto& e : blown.census()) {
      const double y = f.lift(e.position);
      const CensusEntry* target = blown.census_at(y);
      if (!target) continue;
      const double shift = std::round(y - target->position);
      knots.push_back({e.left, target->left + shift});
      knots.push_back({e.left + e.length, target->left + target->length + shift});
    }
    std::sort(knots.begin(), knots.end(), [](const Breakpoint& a, const Breakpoint& b) { return a.x < b.x; });
    std::vector<Breakpoint> clean;
    for (const auto& k : knots) {
      if (k.x < 0.0 || k.x >= 1.0) continue;
      if (!clean.empty() && (k.x <= clean.back().x || k.y <= clean.back().y)) continue;
      clean.push_back(k);
    }
    while (clean.size() > 2 && clean.back().y >= clean.front().y + 1.0) clean.pop_back();
    out.knots += clean.size();
    images.push_back(CircleHomeo::piecewise_linear(std::move(clean)));
  }
  out.rep = Representation(base.signature(), std::move(images), base.id() + "~mesh", tolerance);
  out.rep.validate();
  return out;
}

}  // namespace crig
