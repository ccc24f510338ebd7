#include "crig/json_io.hpp"

#include <fstream>
#include <sstream>

#include "crig/error.hpp"

namespace crig {
namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

}  // namespace

Json parse_json(std::string_view input, std::string_view source) {
  try {
    return Json::parse(input.begin(), input.end());
  } catch (const Json::parse_error& e) {
    // byte is one past the offending character
    const auto [line, column] = line_column(input, e.byte > 0 ? e.byte - 1 : 0);
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                     ": JSON syntax error");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << dump_json(j);
}

Json to_json(const CircleHomeo& f) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CircleHomeo::Moebius>) {
          const auto& m = v.matrix;
          return {{"type", "moebius"}, {"m", {m.a(), m.b(), m.c(), m.d()}}};
        } else if constexpr (std::is_same_v<T, CircleHomeo::Rotation>) {
          if (const auto* r = std::get_if<Rational>(&v.angle)) return {{"type", "rotation"}, {"angle", to_string(*r)}};
          return {{"type", "rotation"}, {"angle", std::get<double>(v.angle)}};
        } else if constexpr (std::is_same_v<T, CircleHomeo::PiecewiseLinear>) {
          Json breaks = Json::array();
          for (const auto& b : v.breaks) breaks.push_back({b.x, b.y});
          return {{"type", "pl"}, {"breaks", breaks}};
        } else {
          return {{"type", "word"}, {"rep", v.table->id()}, {"word", format_word(v.word, v.table->names())}};
        }
      },
      f.variant());
}

CircleHomeo homeo_from_json(const Json& j, const TableRegistry& tables) {
  const std::string type = text(field(j, "type", "circle map"), "circle map type");
  if (type == "moebius") {
    const Json& m = field(j, "m", "moebius map");
    if (!m.is_array() || m.size() != 4) throw InputError("moebius map: \"m\" must hold four numbers");
    return CircleHomeo::moebius(MoebiusTransform::from_entries(number(m[0], "m"), number(m[1], "m"), number(m[2], "m"),
                                                               number(m[3], "m")));
  }
  if (type == "rotation") {
    const Json& a = field(j, "angle", "rotation");
    if (a.is_string()) return CircleHomeo::rotation(parse_rational(a.get<std::string>()));
    return CircleHomeo::rotation(number(a, "rotation angle"));
  }
  if (type == "pl") {
    const Json& bs = field(j, "breaks", "pl map");
    if (!bs.is_array()) throw InputError("pl map: \"breaks\" must be an array");
    std::vector<Breakpoint> breaks;
    for (const auto& b : bs) {
      if (!b.is_array() || b.size() != 2) throw InputError("pl map: each break is a pair [x, y]");
      breaks.push_back({number(b[0], "break x"), number(b[1], "break y")});
    }
    return CircleHomeo::piecewise_linear(std::move(breaks));
  }
  if (type == "word") {
    const std::string id = text(field(j, "rep", "word map"), "word map rep");
    const auto it = tables.find(id);
    if (it == tables.end()) throw InputError("word map refers to unknown representation \"" + id + "\"");
    return CircleHomeo::word(it->second, parse_word(text(field(j, "word", "word map"), "word"), it->second->names()));
  }
  throw InputError("unknown circle map type \"" + type + "\"");
}

Json to_json(const CertifiedInterval& v) {
  Json j{{"lo", v.lo}, {"hi", v.hi}, {"exact", v.exact}};
  if (v.rational) j["rational"] = to_string(*v.rational);
  return j;
}

CertifiedInterval interval_from_json(const Json& j) {
  if (j.contains("rational") && field(j, "exact", "interval").get<bool>())
    return CertifiedInterval::of_rational(parse_rational(text(j["rational"], "rational")));
  CertifiedInterval v = CertifiedInterval::bounds(number(field(j, "lo", "interval"), "lo"),
                                                  number(field(j, "hi", "interval"), "hi"));
  v.exact = field(j, "exact", "interval").get<bool>();
  return v;
}

Json to_json(const OrbifoldSignature& sig) { return {{"genus", sig.genus}, {"periods", sig.periods}}; }

OrbifoldSignature signature_from_json(const Json& j) {
  if (j.is_string()) return parse_signature(j.get<std::string>());
  OrbifoldSignature sig;
  const Json& g = field(j, "genus", "signature");
  if (!g.is_number_integer()) throw InputError("signature: genus must be an integer");
  sig.genus = g.get<int>();
  if (j.contains("periods")) {
    if (!j["periods"].is_array()) throw InputError("signature: periods must be an array");
    for (const auto& m : j["periods"]) {
      if (!m.is_number_integer()) throw InputError("signature: periods must be integers");
      sig.periods.push_back(m.get<int>());
    }
  }
  sig.validate();
  return sig;
}

Json to_json(const Representation& rep) {
  Json images = Json::array();
  for (const auto& f : rep.images()) images.push_back(to_json(f));
  return {{"type", "representation"},
          {"id", rep.id()},
          {"signature", to_json(rep.signature())},
          {"tolerance", rep.tolerance()},
          {"generators", rep.presentation().generators},
          {"images", images}};
}

Representation representation_from_json(const Json& j, const TableRegistry& tables) {
  const OrbifoldSignature sig = signature_from_json(field(j, "signature", "representation"));
  const std::string id = j.contains("id") ? text(j["id"], "id") : "rep";
  const double tol = j.contains("tolerance") ? number(j["tolerance"], "tolerance") : kRelatorTolerance;
  if (!(tol > 0.0)) throw InputError("representation: tolerance must be positive");
  const Json& images = field(j, "images", "representation");
  if (!images.is_array()) throw InputError("representation: images must be an array");
  const auto names = orbifold_generator_names(sig);
  if (j.contains("generators")) {
    const Json& gs = j["generators"];
    if (!gs.is_array() || gs.size() != names.size()) throw InputError("representation: generator list does not match signature");
    for (std::size_t i = 0; i < names.size(); ++i)
      if (text(gs[i], "generator") != names[i])
        throw InputError("representation: generator " + std::to_string(i) + " should be " + names[i]);
  }
  std::vector<CircleHomeo> maps;
  for (const auto& f : images) maps.push_back(homeo_from_json(f, tables));
  return Representation(sig, std::move(maps), id, tol);
}

Json to_json(const FiniteGroupHom& hom) {
  Json images = Json::object();
  for (std::size_t i = 0; i < hom.images.size(); ++i) images[hom.source.generators[i]] = hom.target->name(hom.images[i]);
  return {{"target", hom.target->spec()}, {"images", images}};
}

FiniteGroupHom hom_from_json(const Json& j, const OrbifoldSignature& sig) {
  auto target = FiniteGroup::from_spec(text(field(j, "target", "hom"), "hom target"));
  const Json& images = field(j, "images", "hom");
  if (!images.is_object()) throw InputError("hom: images must be an object");
  std::vector<std::pair<std::string, std::string>> named;
  for (const auto& [k, v] : images.items()) named.emplace_back(k, text(v, "hom image"));
  return make_hom(orbifold_presentation(sig), std::move(target), named);
}

Json to_json(const PantsDecomposition& pants, const FinitePresentation& pres) {
  Json out = Json::array();
  for (const auto& p : pants.pants) out.push_back({pres.format(p[0]), pres.format(p[1]), pres.format(p[2])});
  return {{"pants", out}};
}

PantsDecomposition pants_from_json(const Json& j, const FinitePresentation& pres) {
  const Json& ps = field(j, "pants", "pants decomposition");
  if (!ps.is_array()) throw InputError("pants decomposition: \"pants\" must be an array");
  PantsDecomposition out;
  for (const auto& p : ps) {
    if (!p.is_array() || p.size() != 3) throw InputError("pants decomposition: each pair of pants is three words");
    out.pants.push_back({pres.parse(text(p[0], "pants word")), pres.parse(text(p[1], "pants word")),
                         pres.parse(text(p[2], "pants word"))});
  }
  return out;
}

}  // namespace crig
