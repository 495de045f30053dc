#include "qvol/serialize.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qvol {

namespace {

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw UsageError("rational must be a \"p/q\" string");
  return parse_rat(j.get<std::string>());
}

// significant digits of the decimal companions to exact report values
constexpr int kApproxDigits = 12;

unsigned uint_from_json(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_unsigned())
    throw UsageError(std::string("missing or invalid field '") + field + "'");
  return j.at(field).get<unsigned>();
}

}  // namespace

Json to_json(const RingElem& a) {
  Json terms = Json::array();
  for (const auto& [m, c] : a.terms()) {
    Json exps = Json::object();
    for (auto [k, e] : m) exps[std::to_string(k)] = e;
    terms.push_back(Json{{"exponents", exps}, {"coeff", to_string(c)}});
  }
  return Json{{"family", family_name(a.family())}, {"terms", terms}};
}

RingElem ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("terms"))
    throw UsageError("ring element JSON needs 'family' and 'terms'");
  RingElem out(parse_family(j.at("family").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    Monomial m;
    for (const auto& [k, e] : t.at("exponents").items()) {
      const unsigned idx = static_cast<unsigned>(std::stoul(k));
      if (e.get<unsigned>() > 0) m.emplace_back(idx, e.get<unsigned>());
    }
    std::sort(m.begin(), m.end());
    out.add_term(m, rat_from_json(t.at("coeff")));
  }
  return out;
}

Json to_json(const VolumeDoc& v) {
  Json terms = Json::array();
  for (const auto& [e, c] : v.poly.terms())
    terms.push_back(Json{{"L_exponents", e}, {"coeff", to_json(c)}});
  return Json{{"flavor", flavor_name(v.flavor)}, {"g", v.g}, {"n", v.n}, {"terms", terms}};
}

VolumeDoc volume_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("flavor") || !j.contains("terms"))
    throw UsageError("volume JSON needs 'flavor', 'g', 'n', 'terms'");
  VolumeDoc v;
  v.flavor = parse_flavor(j.at("flavor").get<std::string>());
  v.g = uint_from_json(j, "g");
  v.n = uint_from_json(j, "n");
  v.poly = VolumePoly(ring_family(v.flavor), v.n);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("L_exponents").get<std::vector<unsigned>>();
    if (e.size() != v.n) throw UsageError("L_exponents length differs from n");
    RingElem c = ring_from_json(t.at("coeff"));
    if (c.family() != ring_family(v.flavor)) throw UsageError("coefficient family does not match flavor");
    v.poly.add_term(e, c);
  }
  return v;
}

Json to_json(const SuperSeries& s) {
  Json parts = Json::array();
  for (const auto& [m, p] : s.parts) {
    if (p.is_zero()) continue;
    parts.push_back(Json{{"m", m}, {"part", to_json(VolumeDoc{s.flavor, s.g, s.n, p})}});
  }
  return Json{{"flavor", flavor_name(s.flavor)}, {"g", s.g}, {"n", s.n}, {"m_max", s.m_max},
              {"parts", parts}};
}

SuperSeries super_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("parts")) throw UsageError("super series JSON needs 'parts'");
  SuperSeries s;
  s.flavor = parse_flavor(j.at("flavor").get<std::string>());
  if (!is_super(s.flavor)) throw UsageError("super series JSON with a classical flavor");
  s.g = uint_from_json(j, "g");
  s.n = uint_from_json(j, "n");
  s.m_max = uint_from_json(j, "m_max");
  for (unsigned m = 0; m <= s.m_max; ++m) s.parts.emplace(m, VolumePoly(ring_family(s.flavor), s.n));
  for (const auto& p : j.at("parts")) {
    const unsigned m = uint_from_json(p, "m");
    if (m > s.m_max) throw UsageError("part index above m_max");
    s.parts.at(m) = volume_from_json(p.at("part")).poly;
  }
  return s;
}

Json to_json(const IdentityReport& r) {
  return Json{{"k", r.k},
              {"q", to_string(r.q)},
              {"N", r.N},
              {"lhs", to_string(r.lhs)},
              {"rhs", to_string(r.rhs)},
              {"discrepancy", to_string(r.discrepancy)},
              {"budget", to_string(r.budget)},
              {"approx_digits", kApproxDigits},
              {"discrepancy_approx", to_decimal(r.discrepancy, kApproxDigits)},
              {"budget_approx", to_decimal(r.budget, kApproxDigits)},
              {"pass", r.pass}};
}

Json to_json(const OracleReport& r) {
  return Json{{"flavor", flavor_name(r.flavor)},
              {"k", r.k},
              {"y", to_string(r.y)},
              {"r", to_string(r.r)},
              {"N", r.N},
              {"oracle", to_string(r.oracle)},
              {"symbolic", to_string(r.symbolic)},
              {"discrepancy", to_string(r.discrepancy)},
              {"budget", to_string(r.budget)},
              {"approx_digits", kApproxDigits},
              {"oracle_approx", to_decimal(r.oracle, kApproxDigits)},
              {"discrepancy_approx", to_decimal(r.discrepancy, kApproxDigits)},
              {"budget_approx", to_decimal(r.budget, kApproxDigits)},
              {"pass", r.pass}};
}

Json to_json(const TrendReport& r) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < r.r.size(); ++i)
    pts.push_back(Json{{"r", to_string(r.r[i])}, {"discrepancy", r.discrepancy[i]}});
  return Json{{"x", to_string(r.x)},
              {"y", to_string(r.y)},
              {"kernel", r.super ? "super" : "classical"},
              {"precision", r.precision},
              {"points", pts},
              {"strictly_decreasing", r.strictly_decreasing}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- LaTeX / text ---------------------------------------------------------

namespace {

struct Style {
  bool latex;
};

std::string generator(GenFamily f, unsigned k, unsigned e, Style st) {
  std::string base;
  if (f == GenFamily::PiSq) {
    const unsigned pw = 2 * e;
    return st.latex ? "\\pi^{" + std::to_string(pw) + "}" : "pi^" + std::to_string(pw);
  }
  if (st.latex) {
    base = f == GenFamily::QZeta ? "\\zeta_q(" : "\\zeta^{\\mathrm{odd}}_q(";
  } else {
    base = f == GenFamily::QZeta ? "zeta_q(" : "zeta_odd_q(";
  }
  base += std::to_string(2 * k) + ")";
  if (e > 1) base += st.latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  return base;
}

std::string variable(unsigned i, unsigned arity, unsigned power, Style st) {
  std::string v = arity == 1 ? "L" : (st.latex ? "L_{" + std::to_string(i + 1) + "}"
                                               : "L" + std::to_string(i + 1));
  if (power > 1) v += st.latex ? "^{" + std::to_string(power) + "}" : "^" + std::to_string(power);
  return v;
}

std::string abs_rational(const Rat& c, Style st) {
  const Rat a = abs(c);
  if (a.get_den() == 1) return a.get_num().get_str();
  if (st.latex) return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

// One fully distributed term: rational * ring monomial * L monomial.
void append_term(std::string& out, const Rat& c, const std::vector<std::string>& factors, Style st) {
  const bool first = out.empty();
  if (c < 0) {
    out += first ? "-" : " - ";
  } else if (!first) {
    out += " + ";
  }
  const bool unit = abs(c) == 1;
  if (factors.empty()) {
    out += abs_rational(c, st);
    return;
  }
  std::string sep = st.latex ? " " : "*";
  std::string body;
  if (!unit) body = abs_rational(c, st);
  for (const auto& f : factors) {
    if (!body.empty()) body += sep;
    body += f;
  }
  out += body;
}

std::vector<std::string> ring_factors(GenFamily fam, const Monomial& m, Style st) {
  std::vector<std::string> out;
  for (auto [k, e] : m) out.push_back(generator(fam, k, e, st));
  return out;
}

std::string render_ring(const RingElem& a, Style st) {
  std::string out;
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
    append_term(out, it->second, ring_factors(a.family(), it->first, st), st);
  return out.empty() ? "0" : out;
}

std::string render_volume(const VolumePoly& v, Style st) {
  // highest L-degree first, then by exponent vector descending
  std::vector<const VolumePoly::Terms::value_type*> order;
  for (const auto& t : v.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    unsigned da = 0, db = 0;
    for (unsigned x : a->first) da += x;
    for (unsigned x : b->first) db += x;
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::string out;
  for (const auto* t : order) {
    std::vector<std::string> lfactors;
    for (unsigned i = 0; i < t->first.size(); ++i)
      if (t->first[i] > 0) lfactors.push_back(variable(i, v.arity(), 2 * t->first[i], st));
    const RingElem& c = t->second;
    for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it) {
      auto factors = ring_factors(v.family(), it->first, st);
      factors.insert(factors.end(), lfactors.begin(), lfactors.end());
      append_term(out, it->second, factors, st);
    }
  }
  return out.empty() ? "0" : out;
}

std::string render_super(const SuperSeries& s, Style st) {
  std::string out;
  for (const auto& [m, p] : s.parts) {
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string body = render_volume(p, st);
    if (st.latex) {
      out += "\\frac{s^{" + std::to_string(m) + "}}{" + std::to_string(m) + "!}\\left(" + body + "\\right)";
    } else {
      out += "s^" + std::to_string(m) + "/" + std::to_string(m) + "! * (" + body + ")";
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string to_latex(const RingElem& a) { return render_ring(a, {true}); }
std::string to_latex(const VolumePoly& v) { return render_volume(v, {true}); }
std::string to_latex(const SuperSeries& s) { return render_super(s, {true}); }
std::string to_text(const RingElem& a) { return render_ring(a, {false}); }
std::string to_text(const VolumePoly& v) { return render_volume(v, {false}); }
std::string to_text(const SuperSeries& s) { return render_super(s, {false}); }

}  // namespace qvol
