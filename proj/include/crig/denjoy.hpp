#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crig/representation.hpp"

namespace crig {

inline constexpr double kPositionTolerance = 1e-12;

/// A point of the blown-up circle: either an original point off the marked
/// orbit, or the point at parameter t of the interval inserted at w . p0.
struct SymbolicPoint {
  struct Base {
    double x = 0.0;
  };
  struct Inserted {
    Word word;
    double t = 0.0;
  };
  std::variant<Base, Inserted> v;

  static SymbolicPoint base(double x) { return {Base{normalize_turns(x)}}; }
  static SymbolicPoint inserted(Word w, double t) { return {Inserted{reduce(std::move(w)), t}}; }
  bool is_base() const { return std::holds_alternative<Base>(v); }
};

/// +1 when x, y, z occur counter-clockwise, -1 when clockwise, 0 when two
/// of them coincide within `tol`.
int cyclic_order(double x, double y, double z, double tol = kPositionTolerance);

/// Position in the circular order: orbit position first, then the
/// parameter inside an inserted interval.
struct OrderKey {
  double position = 0.0;
  double sub = 0.0;
};

/// A group action on some circularly ordered set, seen pointwise.
class PointAction {
 public:
  explicit PointAction(double tol) : tol_(tol) {}
  virtual ~PointAction() = default;
  virtual const Representation& representation() const = 0;
  virtual SymbolicPoint act(Letter g, const SymbolicPoint& p) const = 0;
  virtual OrderKey key(const SymbolicPoint& p) const = 0;

  /// w . p, applying the letters right to left.
  SymbolicPoint act(const Word& w, const SymbolicPoint& p) const;
  int cyclic_order(const SymbolicPoint& p, const SymbolicPoint& q, const SymbolicPoint& r) const;
  int cyclic_order(const OrderKey& p, const OrderKey& q, const OrderKey& r) const;
  bool same(const SymbolicPoint& p, const SymbolicPoint& q) const { return same(key(p), key(q)); }
  bool same(const OrderKey& p, const OrderKey& q) const;
  double tolerance() const { return tol_; }

 private:
  bool less(const OrderKey& p, const OrderKey& q) const;
  double tol_;
};

/// A representation acting on Base points of the circle.
class CircleAction : public PointAction {
 public:
  explicit CircleAction(Representation rep, double tol = 1e-9) : PointAction(tol), rep_(std::move(rep)) {}
  const Representation& representation() const override { return rep_; }
  SymbolicPoint act(Letter g, const SymbolicPoint& p) const override;
  OrderKey key(const SymbolicPoint& p) const override;
  using PointAction::act;

 private:
  Representation rep_;
};

struct CensusEntry {
  Word word;
  double position = 0.0;  // w . p0
  double length = 0.0;    // inserted length
  double left = 0.0;      // blown-up coordinate of the interval's left end
};

struct BlowUpOptions {
  double lambda = 0.3;
  int free_check_depth = 8;  // words tested for fixing p0
  int census_depth = 5;      // words given intervals in the mesh realization
};

/// The Denjoy blow-up of the orbit of p0: the interval of length
/// l(w) = lambda 2^-|w| / c_|w| (c_n = number of reduced words of length n)
/// is inserted at w . p0. The group acts exactly on symbolic points.
class BlownUpAction : public PointAction {
 public:
  /// Throws InputError unless 0 < lambda < 1/2 (the total inserted length is
  /// 2 lambda), and MarkedPointNotFreeError if a word of length up to
  /// free_check_depth fixes p0 without acting trivially.
  BlownUpAction(Representation base, double p0, BlowUpOptions options = {});

  const Representation& representation() const override { return base_; }
  const Representation& base() const { return base_; }
  double marked_point() const { return p0_; }
  const BlowUpOptions& options() const { return opt_; }

  SymbolicPoint act(Letter g, const SymbolicPoint& p) const override;
  /// (w . p0, t) for Inserted points, (x, 1/2) for Base points.
  OrderKey key(const SymbolicPoint& p) const override;
  using PointAction::act;

  double position(const Word& w) const { return base_.apply_word(w, p0_); }
  double length(const Word& w) const;
  /// Collapse map: Inserted(w, .) -> w . p0, Base(x) -> x.
  double collapse(const SymbolicPoint& p) const;

  /// Census of words up to census_depth, one per orbit point, sorted by
  /// position, with blown-up coordinates.
  const std::vector<CensusEntry>& census() const { return census_; }
  double inserted_total() const { return inserted_total_; }
  /// Blown-up coordinate of a Base point, using the census intervals.
  double coordinate(double x) const;
  /// Census entry at this orbit position, if any.
  const CensusEntry* census_at(double position) const;

 private:
  Representation base_;
  double p0_;
  BlowUpOptions opt_;
  std::vector<double> words_of_length_;
  std::vector<CensusEntry> census_;
  double inserted_total_ = 0.0;
};

/// Collapse map as a free function.
double collapse_map(const BlownUpAction& blown, const SymbolicPoint& p);

using Correspondence = std::function<SymbolicPoint(const SymbolicPoint&)>;

struct SemiConjugacyOptions {
  std::size_t samples = 200;
  std::size_t max_triples = 100000;
  std::uint64_t seed = 1;
};

struct SemiConjugacyCertificate {
  bool pass = false;
  std::size_t samples = 0;
  std::size_t triples_checked = 0;
  std::size_t mismatches = 0;
  std::size_t equivariance_checks = 0;
  std::size_t equivariance_failures = 0;
  /// First mismatched triple, as orbit words.
  std::optional<std::array<Word, 3>> witness;
};

/// Samples the orbit of `start` under A (breadth first, distinct points),
/// maps it by `corr`, and checks that corr(g . p) = g . corr(p) for every
/// generator letter g and sampled p, and that all sampled triples (every
/// triple when there are at most max_triples, else a seeded random subset)
/// have equal cyclic order on both sides.
SemiConjugacyCertificate check_semi_conjugacy(const PointAction& A, const PointAction& B, const Correspondence& corr,
                                              const SymbolicPoint& start, const SemiConjugacyOptions& options = {});

struct GapReport {
  int depth = 0;
  std::size_t points = 0;
  double max_gap = 0.0;
  double gap_start = 0.0;
};

struct MinimalityResult {
  std::vector<GapReport> by_depth;  // depths 0..depth
  double threshold = 0.0;
  bool gap_found = false;  // final max gap >= threshold
  /// For blown-up actions: the longest inserted interval inside the final gap.
  std::optional<Word> witness;
  double witness_length = 0.0;
};

/// Orbit of `start` under all reduced words of length <= depth, with the
/// largest circular gap recorded at every depth.
MinimalityResult minimality_probe(const Representation& rep, double start, int depth, double threshold);
/// Same orbit of the Base point `start`, measured in blown-up coordinates.
MinimalityResult minimality_probe(const BlownUpAction& blown, double start, int depth, double threshold);

/// The blown-up action realized as piecewise-linear circle maps in blown-up
/// coordinates: knots at the images of a base mesh and at the endpoints of
/// census intervals whose image interval is also in the census.
struct MeshRealization {
  Representation rep;
  std::size_t knots = 0;  // total over generators
};
MeshRealization realize_mesh(const BlownUpAction& blown, int base_mesh = 4096, double tolerance = 1e-2);

}  // namespace crig
