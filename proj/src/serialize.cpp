#include "hecke/serialize.hpp"

namespace hecke {

using nlohmann::json;

json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw FormatError("bad integer string");
    return x;
  }
  throw FormatError("expected integer, got " + j.dump());
}

json rational_to_json(const Rational& q) {
  return json::array({int_to_json(q.get_num()), int_to_json(q.get_den())});
}

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FormatError("rational must be [num, den]");
  Int num = int_from_json(j[0]);
  Int den = int_from_json(j[1]);
  if (den <= 0) throw FormatError("rational denominator must be positive");
  Int g = gcd(num, den);
  if (g != 1) throw FormatError("rational not in lowest terms");
  return Rational(num, den);
}

json matrix_to_json(const ProjMatrix& m) {
  return json::array({int_to_json(m.a()), int_to_json(m.b()), int_to_json(m.c()), int_to_json(m.d())});
}

json to_ringelt_json(const RingElement& x) {
  json entries = json::array();
  for (const auto& [m, q] : x.terms())
    entries.push_back({{"m", matrix_to_json(m)}, {"q", rational_to_json(q)}});
  return {{"format", "ringelt-v1"}, {"entries", entries}};
}

RingElement from_ringelt_json(const json& j) {
  if (!j.is_object() || !j.contains("format") || j["format"] != "ringelt-v1")
    throw FormatError("not a ringelt-v1 document");
  if (!j.contains("entries") || !j["entries"].is_array()) throw FormatError("missing entries array");
  RingElement out;
  const ProjMatrix* prev = nullptr;
  ProjMatrix last;
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("m") || !e.contains("q")) throw FormatError("bad entry");
    const auto& mj = e["m"];
    if (!mj.is_array() || mj.size() != 4) throw FormatError("matrix must be [a,b,c,d]");
    Int a = int_from_json(mj[0]), b = int_from_json(mj[1]), c = int_from_json(mj[2]),
        d = int_from_json(mj[3]);
    ProjMatrix m;
    try {
      m = ProjMatrix::from(a, b, c, d);
    } catch (const std::invalid_argument& ex) {
      throw FormatError(ex.what());
    }
    if (m.a() != a || m.b() != b || m.c() != c || m.d() != d)
      throw FormatError("matrix not in canonical sign: " + mj.dump());
    Rational q = rational_from_json(e["q"]);
    if (sgn(q) == 0) throw FormatError("zero coefficient stored");
    if (prev && !(*prev < m)) throw FormatError("entries not strictly sorted");
    out.add(m, q);
    last = m;
    prev = &last;
  }
  return out;
}

std::string dump_ringelt(const RingElement& x) { return to_ringelt_json(x).dump(); }

RingElement parse_ringelt(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw FormatError(std::string("invalid JSON: ") + ex.what());
  }
  return from_ringelt_json(j);
}

}  // namespace hecke
