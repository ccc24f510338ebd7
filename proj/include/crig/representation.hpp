#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "crig/circle.hpp"
#include "crig/presentation.hpp"

namespace crig {

inline constexpr double kRelatorTolerance = 1e-9;

/// Circle homeomorphisms assigned to the standard generators of an orbifold
/// (or closed surface) group. Immutable.
class Representation {
 public:
  /// Throws InputError when the image count does not match the signature.
  /// Relators are not checked here; see validate().
  Representation(OrbifoldSignature sig, std::vector<CircleHomeo> images, std::string id = "rep",
                 double tolerance = kRelatorTolerance);

  const OrbifoldSignature& signature() const { return sig_; }
  const FinitePresentation& presentation() const { return pres_; }
  const std::vector<CircleHomeo>& images() const { return table_->images(); }
  const std::string& id() const { return table_->id(); }
  double tolerance() const { return tol_; }
  int genus() const { return sig_.genus; }
  bool is_surface() const { return sig_.periods.empty(); }
  const std::shared_ptr<const GeneratorTable>& table() const { return table_; }

  /// Every image is a Moebius map.
  bool all_moebius() const { return all_moebius_; }

  Word parse(std::string_view text) const { return pres_.parse(text); }

  /// Left-to-right product of generator images (w = x1 x2 ... acts as
  /// x1 after x2 after ...). Moebius images fold into one matrix; otherwise
  /// the result is a Word map over this representation's table.
  CircleHomeo evaluate_word(const Word& w) const;
  CircleHomeo evaluate_word(std::string_view text) const { return evaluate_word(parse(text)); }
  /// Throws InputError unless all images are Moebius.
  MoebiusTransform evaluate_matrix(const Word& w) const;

  /// Point image under the word, evaluated letter by letter.
  double apply_word(const Word& w, double turns) const;
  /// The word's lift built from the canonical lift of every generator.
  double lift_word(const Word& w, double x) const;

  /// Distance of the word's action from the identity: matrix residual for
  /// Moebius representations, else the largest displacement on 64 points.
  double word_residual(const Word& w) const;

  /// Checks every relator against the tolerance; throws
  /// InvalidRepresentationError naming the first that fails.
  void validate() const;

  /// h rho h^-1 for every generator. The tolerance grows by distortion(h).
  Representation conjugated(const CircleHomeo& h, std::string id) const;
  /// Conjugate by the orientation-reversing flip of the circle.
  Representation flipped() const;

 private:
  OrbifoldSignature sig_;
  FinitePresentation pres_;
  std::shared_ptr<const GeneratorTable> table_;
  double tol_;
  bool all_moebius_ = false;
};

using SurfaceGroupRep = Representation;
using OrbifoldRep = Representation;

/// Genus-g surface representation with generators a1, b1, ..., ag, bg.
Representation surface_rep(int genus, std::vector<CircleHomeo> images, std::string id = "rep",
                           double tolerance = kRelatorTolerance);

}  // namespace crig
