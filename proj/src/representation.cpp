#include "crig/representation.hpp"

#include <algorithm>
#include <cmath>

#include "crig/error.hpp"

namespace crig {

Representation::Representation(OrbifoldSignature sig, std::vector<CircleHomeo> images, std::string id, double tolerance)
    : sig_(std::move(sig)), pres_(orbifold_presentation(sig_)), tol_(tolerance) {
  if (images.size() != pres_.generators.size()) {
    throw InputError("representation of " + to_string(sig_) + " needs " + std::to_string(pres_.generators.size()) +
                     " images, got " + std::to_string(images.size()));
  }
  all_moebius_ = std::all_of(images.begin(), images.end(), [](const CircleHomeo& f) { return f.as_moebius() != nullptr; });
  table_ = std::make_shared<const GeneratorTable>(std::move(id), pres_.generators, std::move(images));
}

CircleHomeo Representation::evaluate_word(const Word& w) const {
  for (const Letter& l : w) {
    if (l.generator >= images().size()) throw UnknownGeneratorError("letter outside the representation's generators");
  }
  if (all_moebius_) return CircleHomeo::moebius(evaluate_matrix(w));
  if (w.empty()) return CircleHomeo::identity();
  if (w.size() == 1 && !w[0].inverse) return images()[w[0].generator];
  return CircleHomeo::word(table_, w);
}

MoebiusTransform Representation::evaluate_matrix(const Word& w) const {
  if (!all_moebius_) throw InputError("representation '" + id() + "' is not Moebius-valued");
  MoebiusTransform acc;
  for (const Letter& l : w) {
    if (l.generator >= images().size()) throw UnknownGeneratorError("letter outside the representation's generators");
    const MoebiusTransform& m = *images()[l.generator].as_moebius();
    acc = acc * (l.inverse ? m.inverse() : m);
  }
  return acc;
}

double Representation::apply_word(const Word& w, double turns) const {
  double x = turns;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const CircleHomeo& f = images()[it->generator];
    x = it->inverse ? f.lift_inverse(x) : f.lift(x);
  }
  return normalize_turns(x);
}

double Representation::lift_word(const Word& w, double x) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const CircleHomeo& f = images()[it->generator];
    x = it->inverse ? f.lift_inverse(x) : f.lift(x);
  }
  return x;
}

double Representation::word_residual(const Word& w) const {
  if (all_moebius_) return evaluate_matrix(w).identity_residual();
  double worst = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double p = i / 64.0;
    worst = std::max(worst, circle_distance(CirclePoint(apply_word(w, p)), CirclePoint(p)));
  }
  return worst;
}

void Representation::validate() const {
  for (const Word& r : pres_.relators) {
    const double res = word_residual(r);
    if (!(res <= tol_)) {
      throw InvalidRepresentationError("relator " + pres_.format(r) + " of '" + id() + "' has residual " +
                                       std::to_string(res) + " above tolerance " + std::to_string(tol_));
    }
  }
}

Representation Representation::conjugated(const CircleHomeo& h, std::string id) const {
  std::vector<CircleHomeo> out;
  for (const auto& f : images()) out.push_back(conjugate(h, f));
  return Representation(sig_, std::move(out), std::move(id), tol_ * distortion(h));
}

Representation Representation::flipped() const {
  std::vector<CircleHomeo> out;
  for (const auto& f : images()) out.push_back(flip_orientation(f));
  return Representation(sig_, std::move(out), id() + "~flip", tol_);
}

Representation surface_rep(int genus, std::vector<CircleHomeo> images, std::string id, double tolerance) {
  if (genus < 1) throw InputError("surface representation needs genus >= 1");
  return Representation(OrbifoldSignature{genus, {}}, std::move(images), std::move(id), tolerance);
}

}  // namespace crig
