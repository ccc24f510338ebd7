#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "crig/presentation.hpp"
#include "crig/rational.hpp"

namespace crig {

/// A finite group given by normal forms and a multiplication rule, stored as
/// a Cayley table over element indices. Element 0 is the identity.
class FiniteGroup {
 public:
  using Element = std::uint32_t;

  /// Dihedral group of the given order (2n elements r^k s^f, n >= 1).
  static std::shared_ptr<const FiniteGroup> dihedral(int order);
  /// SL(2, F_3): 2x2 matrices over the field with three elements, det 1.
  static std::shared_ptr<const FiniteGroup> sl2f3();
  static std::shared_ptr<const FiniteGroup> cyclic(int order);
  /// "dihedral:N" (N = group order), "sl2f3", "cyclic:N".
  static std::shared_ptr<const FiniteGroup> from_spec(std::string_view spec);

  const std::string& spec() const { return spec_; }
  std::size_t order() const { return names_.size(); }
  Element identity() const { return 0; }
  Element mul(Element x, Element y) const { return table_[x * order() + y]; }
  Element inv(Element x) const { return inverse_[x]; }
  Element pow(Element x, std::int64_t k) const;
  int element_order(Element x) const;
  const std::string& name(Element x) const { return names_[x]; }

  /// Dihedral and cyclic groups: products of r, s with optional ^k exponents
  /// ("s r^-1", "r^2", "1"). SL(2, F_3): four entries "a b; c d".
  /// Throws InputError when the text names no element.
  Element parse_element(std::string_view text) const;

 private:
  FiniteGroup(std::string spec, std::vector<std::string> names, std::vector<Element> table);
  std::string spec_;
  std::vector<std::string> names_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  int rotations_ = 0;  // n for dihedral/cyclic, 0 for sl2f3
  bool flips_ = false;
};

struct Certificate {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Generator images of a presentation in a finite group.
struct FiniteGroupHom {
  FinitePresentation source;
  std::shared_ptr<const FiniteGroup> target;
  std::vector<FiniteGroup::Element> images;

  FiniteGroup::Element evaluate(const Word& w) const;
};

/// Builds a hom from named images. A missing derived generator is filled
/// from its definition. Throws InputError for unknown or missing names.
FiniteGroupHom make_hom(const FinitePresentation& source, std::shared_ptr<const FiniteGroup> target,
                        const std::vector<std::pair<std::string, std::string>>& images);

/// (0;2,2,2,2g) -> dihedral group of order 4g: a -> r^g, b -> s r, c -> s r^(2-g),
/// hence d = (abc)^-1 -> r^-1.
FiniteGroupHom hom_2222g(int g);
/// (0;3,3,4) -> SL(2, F_3): a -> (1 1; 0 1), b -> (1 0; 1 1).
FiniteGroupHom hom_334();

/// Every relator maps to the identity.
Certificate check_hom(const FiniteGroupHom& hom);
/// Closure of the generator images is the whole group.
Certificate check_surjective(const FiniteGroupHom& hom);
/// Throwing forms: NotAHomomorphismError / NotSurjectiveError on failure.
Certificate verify_hom(const FiniteGroupHom& hom);
Certificate verify_surjective(const FiniteGroupHom& hom);

/// Each cone generator q_i maps to an element of order exactly m_i.
Certificate torsion_orders_certificate(const FiniteGroupHom& hom, const OrbifoldSignature& sig);

/// Genus of the regular cover of degree |G|: chi * |G| = 2 - 2 genus.
/// Throws InconsistentCoverError if that is not an integer genus >= 2.
int kernel_genus(const OrbifoldSignature& sig, std::int64_t group_order);

struct SchreierResult {
  std::size_t index = 0;
  /// Coset representatives, indexed by target element (empty for elements
  /// outside the image).
  std::vector<Word> transversal;
  /// coset_table[coset][generator] = coset reached by right multiplication.
  std::vector<std::vector<FiniteGroup::Element>> coset_table;
  /// Non-trivial Schreier generators t x (rep of t x)^-1, freely reduced.
  std::vector<Word> generators;
  /// index * (#generators - 1) + 1, the free-group rank of the kernel.
  std::size_t expected_count = 0;
};

/// Cosets of the kernel are the elements of the image. The transversal is
/// the shortlex-least positive word per coset (breadth-first search with
/// generators tried in presentation order).
SchreierResult reidemeister_schreier(const FinitePresentation& pres, const FiniteGroupHom& hom);

}  // namespace crig
