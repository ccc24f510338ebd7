#include "crig/finite_group.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>

#include "crig/error.hpp"

namespace crig {
namespace {

using Element = FiniteGroup::Element;

std::string power_name(const char* base, int k) {
  if (k == 1) return base;
  return std::string(base) + "^" + std::to_string(k);
}

int mod(std::int64_t x, int n) { return static_cast<int>(((x % n) + n) % n); }

using Mat3 = std::array<int, 4>;

std::vector<Mat3> sl2f3_elements() {
  std::vector<Mat3> out{{1, 0, 0, 1}};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const Mat3 m{a, b, c, d};
          if (m != Mat3{1, 0, 0, 1} && mod(a * d - b * c, 3) == 1) out.push_back(m);
        }
  return out;
}

std::string mat3_name(const Mat3& m) {
  return std::to_string(m[0]) + " " + std::to_string(m[1]) + "; " + std::to_string(m[2]) + " " + std::to_string(m[3]);
}

}  // namespace

FiniteGroup::FiniteGroup(std::string spec, std::vector<std::string> names, std::vector<Element> table)
    : spec_(std::move(spec)), names_(std::move(names)), table_(std::move(table)) {
  const std::size_t n = names_.size();
  inverse_.assign(n, 0);
  // Identity and inverses are checked always; associativity only for small
  // tables, since the cubic scan dominates otherwise.
  for (Element x = 0; x < n; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) throw InternalConsistencyError(spec_ + ": element 0 is not the identity");
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) {
      if (mul(x, y) == 0 && mul(y, x) == 0) {
        inverse_[x] = y;
        found = true;
      }
    }
    if (!found) throw InternalConsistencyError(spec_ + ": element without inverse");
  }
  if (n > 64) return;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw InternalConsistencyError(spec_ + ": not associative");
}

std::shared_ptr<const FiniteGroup> FiniteGroup::dihedral(int order) {
  if (order < 2 || order % 2 != 0) throw InputError("dihedral group order must be even and >= 2");
  const int n = order / 2;
  std::vector<std::string> names(order);
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  for (int f = 0; f < 2; ++f)
    for (int k = 0; k < n; ++k) {
      std::string nm = k == 0 ? (f ? "" : "1") : power_name("r", k);
      if (f) nm += nm.empty() ? "s" : " s";
      names[k + n * f] = nm;
    }
  // r^k s^f . r^j s^e = r^(k + (-1)^f j) s^(f + e)
  for (int f = 0; f < 2; ++f)
    for (int k = 0; k < n; ++k)
      for (int e = 0; e < 2; ++e)
        for (int j = 0; j < n; ++j) {
          const int rk = mod(k + (f ? -j : j), n);
          table[(k + n * f) * order + (j + n * e)] = static_cast<Element>(rk + n * (f ^ e));
        }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup("dihedral:" + std::to_string(order), std::move(names), std::move(table)));
  g->rotations_ = n;
  g->flips_ = true;
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int order) {
  if (order < 1) throw InputError("cyclic group order must be >= 1");
  std::vector<std::string> names(order);
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  for (int k = 0; k < order; ++k) {
    names[k] = k == 0 ? "1" : power_name("r", k);
    for (int j = 0; j < order; ++j) table[k * order + j] = static_cast<Element>((k + j) % order);
  }
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup("cyclic:" + std::to_string(order), std::move(names), std::move(table)));
  g->rotations_ = order;
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::sl2f3() {
  const auto elems = sl2f3_elements();
  const std::size_t n = elems.size();
  std::map<Mat3, Element> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    index[elems[i]] = static_cast<Element>(i);
    names.push_back(mat3_name(elems[i]));
  }
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat3& x = elems[i];
      const Mat3& y = elems[j];
      const Mat3 p{mod(x[0] * y[0] + x[1] * y[2], 3), mod(x[0] * y[1] + x[1] * y[3], 3),
                   mod(x[2] * y[0] + x[3] * y[2], 3), mod(x[2] * y[1] + x[3] * y[3], 3)};
      table[i * n + j] = index.at(p);
    }
  return std::shared_ptr<FiniteGroup>(new FiniteGroup("sl2f3", std::move(names), std::move(table)));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_spec(std::string_view spec) {
  auto order_of = [&](std::string_view prefix) {
    const std::string_view digits = spec.substr(prefix.size());
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw InputError("bad group order in '" + std::string(spec) + "'");
    }
    return n;
  };
  if (spec == "sl2f3") return sl2f3();
  if (spec.rfind("dihedral:", 0) == 0) return dihedral(order_of("dihedral:"));
  if (spec.rfind("cyclic:", 0) == 0) return cyclic(order_of("cyclic:"));
  throw InputError("unknown finite group '" + std::string(spec) + "'");
}

Element FiniteGroup::pow(Element x, std::int64_t k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  Element acc = identity();
  for (std::int64_t i = 0; i < k; ++i) acc = mul(acc, x);
  return acc;
}

int FiniteGroup::element_order(Element x) const {
  Element acc = x;
  int q = 1;
  while (acc != identity()) {
    acc = mul(acc, x);
    ++q;
  }
  return q;
}

Element FiniteGroup::parse_element(std::string_view text) const {
  const std::string bad = "cannot parse element '" + std::string(text) + "' of " + spec_;
  if (rotations_ == 0) {
    std::string cleaned(text);
    for (char& ch : cleaned)
      if (ch == ';' || ch == ',' || ch == '[' || ch == ']') ch = ' ';
    std::array<int, 4> v{};
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < cleaned.size()) {
      if (std::isspace(static_cast<unsigned char>(cleaned[i]))) {
        ++i;
        continue;
      }
      int x = 0;
      const auto [ptr, ec] = std::from_chars(cleaned.data() + i, cleaned.data() + cleaned.size(), x);
      if (ec != std::errc() || count == 4) throw InputError(bad);
      v[count++] = mod(x, 3);
      i = static_cast<std::size_t>(ptr - cleaned.data());
    }
    if (count != 4) throw InputError(bad);
    const std::string nm = mat3_name(v);
    for (Element e = 0; e < order(); ++e)
      if (names_[e] == nm) return e;
    throw InputError(bad + " (not of determinant 1)");
  }
  const int n = rotations_;
  Element acc = identity();
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
      ++i;
      continue;
    }
    Element base;
    if (ch == 'r') {
      base = 1 % static_cast<Element>(n);
    } else if (ch == 's' && flips_) {
      base = static_cast<Element>(n);
    } else if ((ch == '1' || ch == 'e') && (i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      base = identity();
    } else {
      throw InputError(bad);
    }
    ++i;
    std::int64_t k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), k);
      if (ec != std::errc()) throw InputError(bad);
      i = static_cast<std::size_t>(ptr - text.data());
    }
    acc = mul(acc, pow(base, k));
    any = true;
  }
  if (!any) throw InputError(bad);
  return acc;
}

Element FiniteGroupHom::evaluate(const Word& w) const {
  Element acc = target->identity();
  for (const Letter& l : w) {
    if (l.generator >= images.size()) throw UnknownGeneratorError("letter outside the hom's generators");
    const Element x = images[l.generator];
    acc = target->mul(acc, l.inverse ? target->inv(x) : x);
  }
  return acc;
}

FiniteGroupHom make_hom(const FinitePresentation& source, std::shared_ptr<const FiniteGroup> target,
                        const std::vector<std::pair<std::string, std::string>>& images) {
  FiniteGroupHom hom{source, std::move(target), {}};
  std::vector<std::optional<Element>> slots(source.generators.size());
  for (const auto& [name, text] : images) slots[source.index_of(name)] = hom.target->parse_element(text);
  if (source.derived && !slots[source.derived->generator]) {
    hom.images.assign(slots.size(), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (i != source.derived->generator && !slots[i]) {
        throw InputError("hom image missing for generator " + source.generators[i]);
      }
      if (slots[i]) hom.images[i] = *slots[i];
    }
    slots[source.derived->generator] = hom.evaluate(source.derived->definition);
  }
  hom.images.clear();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) throw InputError("hom image missing for generator " + source.generators[i]);
    hom.images.push_back(*slots[i]);
  }
  return hom;
}

FiniteGroupHom hom_2222g(int g) {
  if (g < 2) throw InputError("hom_2222g needs g >= 2");
  const OrbifoldSignature sig{0, {2, 2, 2, 2 * g}};
  const std::string c = "s r^" + std::to_string(2 - g);
  return make_hom(orbifold_presentation(sig), FiniteGroup::dihedral(4 * g),
                  {{"a", "r^" + std::to_string(g)}, {"b", "s r"}, {"c", c}});
}

FiniteGroupHom hom_334() {
  const OrbifoldSignature sig{0, {3, 3, 4}};
  return make_hom(orbifold_presentation(sig), FiniteGroup::sl2f3(), {{"a", "1 1; 0 1"}, {"b", "1 0; 1 1"}});
}

Certificate check_hom(const FiniteGroupHom& hom) {
  for (const Word& r : hom.source.relators) {
    const Element e = hom.evaluate(r);
    if (e != hom.target->identity()) {
      return {"relators", false, "relator " + hom.source.format(r) + " maps to " + hom.target->name(e)};
    }
  }
  if (hom.source.derived) {
    const auto& d = *hom.source.derived;
    if (hom.evaluate(d.definition) != hom.images[d.generator]) {
      return {"relators", false, "derived generator " + hom.source.generators[d.generator] + " is inconsistent"};
    }
  }
  return {"relators", true, std::to_string(hom.source.relators.size()) + " relators map to the identity"};
}

Certificate check_surjective(const FiniteGroupHom& hom) {
  const auto& G = *hom.target;
  std::vector<bool> seen(G.order(), false);
  std::deque<Element> queue{G.identity()};
  seen[G.identity()] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element gen : hom.images) {
      const Element y = G.mul(x, gen);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        queue.push_back(y);
      }
    }
  }
  const std::string detail = "closure " + std::to_string(count) + "/" + std::to_string(G.order());
  return {"surjective", count == G.order(), detail};
}

Certificate verify_hom(const FiniteGroupHom& hom) {
  Certificate c = check_hom(hom);
  if (!c.pass) throw NotAHomomorphismError(c.detail);
  return c;
}

Certificate verify_surjective(const FiniteGroupHom& hom) {
  Certificate c = check_surjective(hom);
  if (!c.pass) throw NotSurjectiveError(c.detail);
  return c;
}

Certificate torsion_orders_certificate(const FiniteGroupHom& hom, const OrbifoldSignature& sig) {
  std::string detail;
  bool pass = true;
  for (std::size_t i = 0; i < sig.periods.size(); ++i) {
    const std::uint32_t q = cone_generator(sig, i);
    if (q >= hom.images.size()) return {"torsion_orders", false, "hom has no image for cone generator"};
    const int ord = hom.target->element_order(hom.images[q]);
    if (!detail.empty()) detail += ", ";
    detail += hom.source.generators[q] + ":" + std::to_string(ord) + "/" + std::to_string(sig.periods[i]);
    pass = pass && ord == sig.periods[i];
  }
  return {"torsion_orders", pass, detail.empty() ? "no cone points" : detail};
}

int kernel_genus(const OrbifoldSignature& sig, std::int64_t group_order) {
  if (group_order < 1) throw InconsistentCoverError("cover degree must be positive");
  const Rational chi = orbifold_euler_characteristic(sig) * Rational(group_order);
  if (chi.denominator() != 1 || chi.numerator() % 2 != 0) {
    throw InconsistentCoverError("chi * |G| = " + to_string(chi) + " is not an even integer");
  }
  const std::int64_t genus = (2 - chi.numerator()) / 2;
  if (genus < 2) throw InconsistentCoverError("cover genus " + std::to_string(genus) + " is below 2");
  return static_cast<int>(genus);
}

SchreierResult reidemeister_schreier(const FinitePresentation& pres, const FiniteGroupHom& hom) {
  const auto& G = *hom.target;
  const std::size_t ngens = pres.generators.size();
  if (hom.images.size() != ngens) throw InputError("hom does not match the presentation");
  SchreierResult out;
  out.transversal.assign(G.order(), Word{});
  out.coset_table.assign(G.order(), std::vector<Element>(ngens, 0));
  std::vector<bool> seen(G.order(), false);
  std::vector<Element> order{G.identity()};
  seen[G.identity()] = true;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Element t = order[head];
    for (std::uint32_t x = 0; x < ngens; ++x) {
      const Element tx = G.mul(t, hom.images[x]);
      out.coset_table[t][x] = tx;
      if (!seen[tx]) {
        seen[tx] = true;
        out.transversal[tx] = out.transversal[t];
        out.transversal[tx].push_back({x, false});
        order.push_back(tx);
      }
    }
  }
  out.index = order.size();
  out.expected_count = out.index * (ngens - 1) + 1;
  for (Element t : order) {
    for (std::uint32_t x = 0; x < ngens; ++x) {
      Word w = out.transversal[t];
      w.push_back({x, false});
      w = concat(w, inverse(out.transversal[out.coset_table[t][x]]));
      if (!w.empty()) out.generators.push_back(std::move(w));
    }
  }
  if (out.generators.size() != out.expected_count) {
    throw InternalConsistencyError("Schreier generator count differs from the free-group rank");
  }
  return out;
}

}  // namespace crig
