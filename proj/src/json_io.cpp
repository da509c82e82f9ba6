#include "quatinv/json_io.hpp"

#include <fstream>
#include <sstream>

#include "quatinv/errors.hpp"
#include "quatinv/scalar_parser.hpp"

namespace quatinv {

Field parse_field(const std::string& text) {
  if (text == "q" || text == "Q") return Field::rational();
  if (text.rfind("fp:", 0) == 0) {
    std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad field selector '" + text + "'", 3);
    }
    return Field::prime(std::stoull(digits));
  }
  throw ParseError("bad field selector '" + text + "' (expected q or fp:<p>)", 0);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t pos = e.byte == 0 ? 0 : e.byte - 1;
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < pos && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col), pos,
                     line, col);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

TowerNames tower_from_json(const Json& j, std::size_t default_arity) {
  if (j.contains("tower")) return j.at("tower").get<TowerNames>();
  return default_tower_names(default_arity);
}

namespace {

Field field_of(const Json& j, std::optional<Field> field) {
  if (field) return *field;
  if (j.contains("field")) return parse_field(j.at("field").get<std::string>());
  return Field::rational();
}

LaurentScalar scalar_at(const Json& j, const std::string& where, Field field, const TowerNames& names) {
  if (j.is_number_integer()) return LaurentScalar::from_int(field, names.size(), j.get<long>());
  if (!j.is_string()) throw ParseError(where + ": expected a scalar string", 0);
  std::string text = j.get<std::string>();
  try {
    return parse_scalar(text, field, names);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what(), e.position());
  }
}

std::string word(ClassMask a) {
  if (a == 0) return "1";
  std::string out;
  for (ClassMask r = a; r; r &= r - 1) out += "g" + std::to_string(__builtin_ctz(r) + 1);
  return out;
}

}  // namespace

Json presentation_to_json(const ArmaturePresentation& P, const TowerNames& names) {
  Json j;
  j["field"] = P.field().to_string();
  j["tower"] = names;
  Json squares = Json::array();
  for (const auto& s : P.squares()) squares.push_back(s.to_string(names));
  j["squares"] = squares;
  j["signs"] = P.signs();
  Json pairing = Json::array();
  for (std::size_t k = 0; k < P.generators(); ++k) {
    Json row = Json::array();
    for (std::size_t l = 0; l < P.generators(); ++l) row.push_back((P.minus_rows()[k] >> l) & 1u ? -1 : 1);
    pairing.push_back(row);
  }
  j["pairing"] = pairing;
  return j;
}

ArmaturePresentation presentation_from_json(const Json& j, std::optional<Field> field) {
  Field F = field_of(j, field);
  TowerNames names = tower_from_json(j);
  const Json& sq = j.at("squares");
  std::size_t n = sq.size();
  if (n == 0) return ArmaturePresentation(F, names.size());
  std::vector<LaurentScalar> squares;
  for (std::size_t k = 0; k < n; ++k) squares.push_back(scalar_at(sq[k], "squares[" + std::to_string(k) + "]", F, names));
  std::vector<int> signs(n, -1);
  if (j.contains("signs")) signs = j.at("signs").get<std::vector<int>>();
  std::vector<ClassMask> minus(n, 0);
  if (j.contains("pairing")) {
    const Json& m = j.at("pairing");
    if (m.size() != n) throw ParseError("pairing: expected " + std::to_string(n) + " rows", 0);
    for (std::size_t k = 0; k < n; ++k) {
      if (m[k].size() != n) throw ParseError("pairing: row " + std::to_string(k) + " has the wrong length", 0);
      for (std::size_t l = 0; l < n; ++l) {
        int v = m[k][l].get<int>();
        if (v != 1 && v != -1) throw ParseError("pairing: entries must be 1 or -1", 0);
        if (v == -1) minus[k] |= ClassMask{1} << l;
      }
    }
  } else {
    if (n % 2 != 0) throw ParseError("squares: the default pairing needs an even generator count", 0);
    for (std::size_t k = 0; k < n; k += 2) {
      minus[k] = ClassMask{1} << (k + 1);
      minus[k + 1] = ClassMask{1} << k;
    }
  }
  return ArmaturePresentation(std::move(squares), std::move(minus), std::move(signs));
}

Json element_to_json(const ArmatureElement& x, const TowerNames& names) {
  Json out = Json::array();
  for (ClassMask a : x.support()) {
    out.push_back({{"class", a}, {"word", word(a)}, {"coeff", x[a].to_string(names)}});
  }
  return out;
}

ArmatureElement element_from_json(const Json& j, const PresentationPtr& pres, const TowerNames& names) {
  ArmatureElement x(pres);
  for (const auto& term : j) {
    auto a = term.at("class").get<ClassMask>();
    if (a >= pres->group_size()) throw ParseError("class " + std::to_string(a) + " out of range", 0);
    x.coeff(a) = x[a] + scalar_at(term.at("coeff"), "coeff", pres->field(), names);
  }
  return x;
}

Json factor_to_json(const WitnessFactor& f, const TowerNames& names) {
  Json j;
  j["symbol"] = f.algebra.symbol(names);
  j["a"] = f.algebra.a.to_string(names);
  j["b"] = f.algebra.b.to_string(names);
  j["twist"] = twist_name(f.twist);
  j["signs"] = {f.sign_i, f.sign_j};
  j["split"] = is_split(f.algebra);
  j["i"] = element_to_json(f.i, names);
  j["j"] = element_to_json(f.j, names);
  return j;
}

Json witness_to_json(const DecompositionWitness& w, const TowerNames& names) {
  Json j;
  j["source"] = presentation_to_json(*w.source, names);
  Json factors = Json::array();
  for (const auto& f : w.factors) factors.push_back(factor_to_json(f, names));
  j["factors"] = factors;
  j["split_count"] = w.split_count();
  return j;
}

DecompositionWitness witness_from_json(const Json& j, std::optional<Field> field) {
  const Json& src = j.at("source");
  TowerNames names = tower_from_json(src);
  DecompositionWitness w;
  w.source = share(presentation_from_json(src, field));
  for (const auto& f : j.at("factors")) {
    w.factors.push_back(make_factor(element_from_json(f.at("i"), w.source, names),
                                    element_from_json(f.at("j"), w.source, names)));
  }
  return w;
}

QuatInput quat_from_json(const Json& j, std::optional<Field> field) {
  Field F = field_of(j, field);
  QuatInput q;
  q.names = tower_from_json(j, 1);
  q.algebra = QuatAlg(scalar_at(j.at("a"), "a", F, q.names), scalar_at(j.at("b"), "b", F, q.names));
  if (j.contains("twist")) {
    const Json& t = j.at("twist");
    if (t.size() != 4) throw ParseError("twist: expected four coordinates", 0);
    int index = -1;
    for (int k = 0; k < 4; ++k) {
      if (scalar_at(t[k], "twist[" + std::to_string(k) + "]", F, q.names).is_zero()) continue;
      if (index != -1) throw DomainError("twist must be a multiple of 1, i, j or ij");
      index = k;
    }
    if (index == -1) throw DomainError("twist must be nonzero");
    q.twist = index;
  }
  return q;
}

Json gauge_report_to_json(const GaugeCheckReport& r) {
  Json j;
  j["class_checks"] = r.class_checks;
  j["sample_checks"] = r.sample_checks;
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"check", x.check}, {"detail", x.detail}});
  j["violations"] = v;
  j["ok"] = r.ok();
  return j;
}

Json residue_to_json(const ArmatureGauge& G, const ResidueReport& R, const TowerNames& names) {
  Json j;
  Json grades = Json::array();
  for (ClassMask a = 0; a < G.grades().size(); ++a) {
    grades.push_back({{"class", a}, {"word", word(a)}, {"grade", G.grade(a).to_string()}});
  }
  j["grades"] = grades;
  j["kernel"] = R.kernel;
  j["kernel_basis"] = R.kernel_basis;
  j["image_size"] = R.image_size;
  j["cardinality_law"] = R.cardinality_law();
  j["residue"] = presentation_to_json(R.residue, {});
  (void)names;
  return j;
}

}  // namespace quatinv
