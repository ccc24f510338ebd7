#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "crig/finite_group.hpp"
#include "crig/representation.hpp"

namespace crig {

/// A point of the hyperbolic plane in either model. Conversions use the
/// Cayley map w = (z - i) / (z + i) between the upper half-plane and the disk.
class HyperbolicPoint {
 public:
  enum class Model { UpperHalfPlane, Disk };

  /// Throws InputError unless y > 0.
  static HyperbolicPoint upper(double x, double y);
  /// Throws InputError unless |w| < 1.
  static HyperbolicPoint disk(std::complex<double> w);

  Model model() const { return model_; }
  std::complex<double> coordinate() const { return z_; }
  HyperbolicPoint to_disk() const;
  HyperbolicPoint to_upper() const;

 private:
  HyperbolicPoint(Model m, std::complex<double> z) : model_(m), z_(z) {}
  Model model_;
  std::complex<double> z_;
};

/// Action of a Moebius map on a disk-model point.
std::complex<double> apply_disk(const MoebiusTransform& m, std::complex<double> w);

struct GeometricRep {
  std::string kind;  // "surface", "2222g" or "334"
  Representation rep;
  /// Fundamental polygon vertices in the disk model.
  std::vector<std::complex<double>> vertices;
  /// Largest relator residual and largest vertex-pairing defect found by
  /// the construction's own checks.
  double relator_residual = 0.0;
  double witness_residual = 0.0;

  const std::vector<CircleHomeo>& images() const { return rep.images(); }
  MoebiusTransform matrix(std::size_t i) const { return *rep.images()[i].as_moebius(); }
};

/// Regular 4g-gon with interior angles 2 pi / 4g centred at the disk origin;
/// side pairings a_i: side 4i+2 -> side 4i, b_i: side 4i+1 -> side 4i+3.
GeometricRep build_surface_group(int genus);
/// Quadrilateral with angles pi/2, pi/2, pi/2, pi/2g (small angle at the
/// origin, sides through it of equal length); a = r1 r2, b = r2 r3,
/// c = r3 r4, d = r4 r1 for the side reflections r1..r4.
GeometricRep build_orbifold_2222g(int genus);
/// Triangle with angles pi/3, pi/3, pi/4 (pi/4 at the origin);
/// a = r1 r2, b = r2 r3, c = r3 r1.
GeometricRep build_orbifold_334();

/// The standard action: each matrix acting on the boundary circle.
Representation boundary_action(const GeometricRep& geo);

/// Schreier generators of ker(hom) evaluated as matrices. Throws
/// CertificationError if one is elliptic (|trace| < 2 - 1e-9).
std::vector<MoebiusTransform> kernel_matrices(const GeometricRep& geo, const FiniteGroupHom& hom,
                                              SchreierResult* schreier = nullptr);

struct KernelScan {
  std::size_t sampled = 0;       // random words drawn
  std::size_t kernel_words = 0;  // of which in the kernel
  double min_abs_trace = 0.0;
  bool pass = false;
};

/// Draws seeded random words of length 1..max_length until `target` of them
/// lie in ker(hom), and checks that none acts elliptically. Matrix products
/// and trace scans go through the batched kernels.
KernelScan scan_kernel_words(const GeometricRep& geo, const FiniteGroupHom& hom, std::size_t target,
                             int max_length, std::uint64_t seed);

}  // namespace crig
