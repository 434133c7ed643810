#include "verify/serialize.hpp"

#include "core/errors.hpp"

namespace vmeasure::serial {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError("field '" + path + "': " + what);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

Index read_index(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) {
    if (j.is_number_integer()) fail(path, "index must be nonnegative");
    fail(path, "expected a nonnegative integer");
  }
  return j.get<Index>();
}

Index parse_index_key(const std::string& key, const std::string& path) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
    fail(path, "key '" + key + "' is not an index");
  return std::stoull(key);
}

std::vector<Index> read_indices(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of indices");
  std::vector<Index> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(read_index(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

NormExponent read_exponent(const Json& j, const std::string& path) {
  if (j == 1 || j == "1") return NormExponent::One;
  if (j == 2 || j == "2") return NormExponent::Two;
  if (j == "inf") return NormExponent::Infinity;
  fail(path, "norm exponent must be 1, 2 or \"inf\"");
}

FiniteDimVector read_vector(const Json& j, const FiniteDimSpace& space, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rationals");
  if (j.size() != space.dim)
    fail(path, "expected " + std::to_string(space.dim) + " coordinates, got " + std::to_string(j.size()));
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < j.size(); ++i)
    coords.push_back(read_rational(j[i], path + "[" + std::to_string(i) + "]"));
  return FiniteDimVector(space, std::move(coords));
}

}  // namespace

Rational read_rational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

ExtendedRational read_extended(const Json& j, const std::string& path) {
  if (j == "inf") return ExtendedRational::infinity();
  return read_rational(j, path);
}

GeometricSequence read_sequence(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected {exceptional, tail}");
  for (const auto& [key, _] : j.items())
    if (key != "exceptional" && key != "tail") fail(path + "." + key, "unknown field");
  std::map<Index, Rational> exceptional;
  if (auto it = j.find("exceptional"); it != j.end()) {
    if (!it->is_object()) fail(path + ".exceptional", "expected an object {t: value}");
    for (const auto& [key, value] : it->items()) {
      const std::string p = path + ".exceptional." + key;
      exceptional[parse_index_key(key, p)] = read_rational(value, p);
    }
  }
  Index start = exceptional.empty() ? 0 : exceptional.rbegin()->first + 1;
  Rational coeff = 0, ratio = 0;
  if (auto it = j.find("tail"); it != j.end()) {
    const std::string p = path + ".tail";
    start = read_index(field(*it, "start", p), p + ".start");
    coeff = read_rational(field(*it, "coeff", p), p + ".coeff");
    ratio = read_rational(field(*it, "ratio", p), p + ".ratio");
  }
  try {
    return GeometricSequence(std::move(exceptional), start, coeff, ratio);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

RepresentableSet read_set(const Json& j, const std::string& path) {
  if (j.is_object() && j.size() == 1) {
    if (j.contains("finite")) return RepresentableSet::finite(read_indices(j["finite"], path + ".finite"));
    if (j.contains("cofinite"))
      return RepresentableSet::cofinite(read_indices(j["cofinite"], path + ".cofinite"));
  }
  fail(path, "expected {\"finite\":[...]} or {\"cofinite\":[...]}");
}

AtomicMeasureSpace read_space(const Json& j, const std::string& path) {
  auto weights = read_sequence(field(j, "weights", path), path + ".weights");
  std::vector<Index> infinite;
  if (j.contains("infinite_atoms")) infinite = read_indices(j["infinite_atoms"], path + ".infinite_atoms");
  bool allow = false;
  if (j.contains("allow_infinite_atoms")) {
    if (!j["allow_infinite_atoms"].is_boolean()) fail(path + ".allow_infinite_atoms", "expected a boolean");
    allow = j["allow_infinite_atoms"].get<bool>();
  }
  try {
    return AtomicMeasureSpace(std::move(weights), std::move(infinite), allow);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Target read_target(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  Target t;
  if (kind == "c0") {
    t.c0 = true;
    return t;
  }
  if (kind != "finite") fail(path + ".kind", "expected \"finite\" or \"c0\"");
  const Json& dim = field(j, "dim", path);
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
    fail(path + ".dim", "expected a positive integer");
  t.finite.dim = dim.get<std::size_t>();
  t.finite.p = read_exponent(field(j, "p", path), path + ".p");
  return t;
}

VectorFunction read_function(const Json& j, const Target& target, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (kind == "diagonal") {
    if (!target.c0) fail(path + ".kind", "diagonal densities need the c0 target");
    return DiagonalFunction(read_sequence(field(j, "seq", path), path + ".seq"));
  }
  if (kind != "rank") fail(path + ".kind", "expected \"rank\" or \"diagonal\"");
  if (target.c0) fail(path + ".kind", "the c0 target needs a diagonal density");
  const Json& terms = field(j, "terms", path);
  if (!terms.is_array()) fail(path + ".terms", "expected an array");
  std::vector<RankTerm> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string p = path + ".terms[" + std::to_string(i) + "]";
    out.push_back({read_sequence(field(terms[i], "seq", p), p + ".seq"),
                   read_vector(field(terms[i], "vec", p), target.finite, p + ".vec")});
  }
  try {
    return RankDecomposedFunction(target.finite, std::move(out));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json write(const Rational& value) { return to_string(value); }

Json write(const ExtendedRational& value) { return value.str(); }

Json write(const ExtendedReal& value) { return value.str(); }

Json write(const GeometricSequence& s) {
  Json exceptional = Json::object();
  for (const auto& [t, v] : s.exceptional()) exceptional[std::to_string(t)] = to_string(v);
  return Json{{"exceptional", exceptional},
              {"tail", {{"start", s.tail_start()}, {"coeff", to_string(s.tail_coeff())},
                        {"ratio", to_string(s.tail_ratio())}}}};
}

Json write(const RepresentableSet& set) {
  return Json{{set.is_finite() ? "finite" : "cofinite", set.indices()}};
}

Json write(const AtomicMeasureSpace& space) {
  Json j{{"weights", write(space.weights())}};
  if (space.allow_infinite_atoms() || !space.infinite_atoms().empty()) {
    j["infinite_atoms"] = space.infinite_atoms();
    j["allow_infinite_atoms"] = space.allow_infinite_atoms();
  }
  return j;
}

Json write(const Target& target) {
  if (target.c0) return Json{{"kind", "c0"}};
  Json p = target.finite.p == NormExponent::Infinity ? Json("inf")
                                                     : Json(target.finite.p == NormExponent::One ? 1 : 2);
  return Json{{"kind", "finite"}, {"dim", target.finite.dim}, {"p", p}};
}

Json write(const FiniteDimVector& v) {
  Json out = Json::array();
  for (const auto& c : v.coords()) out.push_back(to_string(c));
  return out;
}

Json write(const Vector& v) {
  if (const auto* f = std::get_if<FiniteDimVector>(&v)) return write(*f);
  return Json{{"c0", write(std::get<C0DiagonalVector>(v).entries())}};
}

Json write(const VectorFunction& f) {
  if (const auto* d = std::get_if<DiagonalFunction>(&f))
    return Json{{"kind", "diagonal"}, {"seq", write(d->seq())}};
  Json terms = Json::array();
  for (const auto& term : std::get<RankDecomposedFunction>(f).terms())
    terms.push_back(Json{{"seq", write(term.seq)}, {"vec", write(term.vec)}});
  return Json{{"kind", "rank"}, {"terms", terms}};
}

Json write(const MultiplierVerdict& v) {
  Json j{{"in_L1w", v.in_L1w},
         {"in_L1", v.in_L1},
         {"in_L1_of_variation", v.in_L1_of_variation},
         {"nu_norm", write(v.nu_norm)},
         {"variation_norm", write(v.variation_norm)}};
  j["integral"] = v.integral ? write(*v.integral) : Json(nullptr);
  return j;
}

}  // namespace vmeasure::serial
