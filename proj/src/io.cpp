#include "assoc_lab/io.hpp"

#include <fstream>
#include <set>

#include "assoc_lab/construct.hpp"

namespace assoc_lab {

json scalar_to_json(const Rational& x) { return Field<Rational>::to_string(x); }
json scalar_to_json(const Complex& x) { return json::array({x.real(), x.imag()}); }

template <>
Rational scalar_from_json<Rational>(const json& j) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("rational coefficient must be a \"p/q\" string, got " + j.dump());
}

template <>
Complex scalar_from_json<Complex>(const json& j) {
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return to_complex(scalar_from_json<Rational>(j));
  throw FormatError("complex coefficient must be [re, im], got " + j.dump());
}

namespace {

int get_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer()) throw FormatError(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

template <class K>
json series_to_json(const Series<K>& s) {
  json terms = json::array();
  const auto& L = s.layout();
  for (const auto& t : s.terms())
    terms.push_back({{"word", L.word(t.key)}, {"tpow", t.key.tpow}, {"coeff", scalar_to_json(t.coeff)}});
  return {{"m", s.m()}, {"truncation", s.truncation()}, {"mode", Field<K>::mode}, {"terms", terms}};
}

template <class K>
Series<K> series_from_json(const json& j) {
  int m = get_int(j, "m"), N = get_int(j, "truncation");
  if (m < 3 || N < 0) throw FormatError("series needs m >= 3 and truncation >= 0");
  std::string mode = j.value("mode", std::string(Field<K>::mode));
  if (mode != "rational" && mode != "complex") throw FormatError("unknown mode '" + mode + "'");
  if (Field<K>::exact && mode != "rational") throw FormatError("complex series cannot be read in rational mode");
  if (!j.contains("terms") || !j["terms"].is_array()) throw FormatError("series needs a 'terms' array");
  std::vector<typename Series<K>::Term> plain;
  Series<K> expanded(m, N);
  const auto& L = *Layout::get(m - 1, N);
  for (const auto& t : j["terms"]) {
    if (!t.contains("word") || !t["word"].is_array()) throw FormatError("term without a 'word' array");
    Word w;
    bool has_last = false;
    for (const auto& x : t["word"]) {
      if (!x.is_number_integer()) throw FormatError("word letters must be integers");
      int l = x.get<int>();
      if (l < 0 || l >= m) throw FormatError("word letter out of range");
      has_last |= (l == m - 1);
      w.push_back(l);
    }
    int tpow = t.value("tpow", 0);
    if (tpow < 0) throw FormatError("negative T power");
    if (!t.contains("coeff")) throw FormatError("term without 'coeff'");
    K c = scalar_from_json<K>(t["coeff"]);
    if (static_cast<int>(w.size()) + tpow > N) throw FormatError("term degree exceeds truncation");
    if (!has_last) {
      plain.push_back({L.make_key(w, tpow), c});
    } else {
      auto mono = Series<K>::scalar(m, N, c);
      for (int l : w) mono = mono * Series<K>::gen(m, N, l);
      for (int p = 0; p < tpow; ++p) mono = mono * Series<K>::t_central(m, N);
      expanded += mono;
    }
  }
  return Series<K>::from_terms(m, N, std::move(plain)) + expanded;
}

json w_to_json(WElem g) { return {{"s", g.s}, {"w", g.w}}; }

WElem w_from_json(const json& j, int m) {
  int s = get_int(j, "s"), w = get_int(j, "w");
  if (s != 0 && s != 1) throw FormatError("WElem s must be 0 or 1");
  return w_make(m, s, w);
}

template <class K>
json flat_to_json(const FlatElem<K>& x) {
  json out = json::array();
  for (const auto& [g, a] : x.parts()) out.push_back({{"welem", w_to_json(g)}, {"series", series_to_json(a)}});
  return out;
}

template <class K>
FlatElem<K> flat_from_json(const json& j, int m, int N) {
  if (!j.is_array()) throw FormatError("flat element must be an array");
  FlatElem<K> out(m, N);
  for (const auto& p : j) {
    if (!p.contains("welem") || !p.contains("series")) throw FormatError("flat part needs 'welem' and 'series'");
    auto a = series_from_json<K>(p["series"]);
    if (a.m() != m || a.truncation() != N) throw FormatError("flat part has the wrong algebra");
    out.add(w_from_json(p["welem"], m), a);
  }
  return out;
}

json report_to_json(const EquationReport& r) {
  json out{{"equation", r.equation}, {"pass", r.pass}};
  out["first_bad_degree"] = r.first_bad_degree ? json(*r.first_bad_degree) : json(nullptr);
  out["residual_norm"] = r.residual_norm ? json(*r.residual_norm) : json(nullptr);
  return out;
}

json check_to_json(const CheckLine& c) {
  return {{"equation", c.name}, {"pass", c.pass}, {"first_bad_degree", nullptr}, {"residual_norm", c.residual}};
}

template <class K>
json associator_to_json(const AssociatorCandidate<K>& c, const json& provenance) {
  json out{{"m", c.m},
           {"lambda", scalar_to_json(c.lambda)},
           {"truncation", c.truncation()},
           {"mode", Field<K>::mode},
           {"phi", series_to_json(c.phi)}};
  if (c.mu) out["mu"] = scalar_to_json(*c.mu);
  json lyn = json::array();
  try {
    auto coords = log_lyndon_coordinates(c.phi, Field<K>::exact ? 0.0 : 1e-8);
    for (int d = 1; d <= static_cast<int>(coords.size()); ++d) {
      auto words = lyndon_words(c.m - 1, d);
      for (std::size_t i = 0; i < words.size(); ++i)
        if (Field<K>::magnitude(coords[d - 1][i]) > (Field<K>::exact ? 0.0 : 1e-14))
          lyn.push_back({{"word", word_to_string(words[i])}, {"degree", d}, {"coeff", scalar_to_json(coords[d - 1][i])}});
    }
    out["lyndon"] = lyn;
  } catch (const std::exception&) {
    out["lyndon"] = nullptr;
  }
  json prov{{"m", c.m}, {"lambda", scalar_to_json(c.lambda)}, {"N", c.truncation()}};
  for (auto it = provenance.begin(); it != provenance.end(); ++it) prov[it.key()] = it.value();
  out["provenance"] = prov;
  return out;
}

AnyCandidate associator_from_json(const json& j) {
  int m = get_int(j, "m");
  if (!j.contains("phi")) throw FormatError("associator file needs 'phi'");
  if (!j.contains("lambda")) throw FormatError("associator file needs 'lambda'");
  std::string mode = j.value("mode", j["phi"].value("mode", std::string("rational")));
  auto fill = [&](auto tag) {
    using K = decltype(tag);
    AssociatorCandidate<K> c;
    c.m = m;
    c.lambda = scalar_from_json<K>(j["lambda"]);
    if (j.contains("mu") && !j["mu"].is_null()) c.mu = scalar_from_json<K>(j["mu"]);
    c.phi = series_from_json<K>(j["phi"]);
    if (c.phi.m() != m) throw FormatError("phi and associator disagree on m");
    if (!c.phi.is_tfree()) throw FormatError("phi must not involve T");
    return c;
  };
  if (mode == "rational") return fill(Rational());
  if (mode == "complex") return fill(Complex());
  throw FormatError("unknown mode '" + mode + "'");
}

AssociatorCandidate<Complex> as_complex(const AnyCandidate& any) {
  if (auto* z = std::get_if<AssociatorCandidate<Complex>>(&any)) return *z;
  const auto& q = std::get<AssociatorCandidate<Rational>>(any);
  AssociatorCandidate<Complex> c;
  c.m = q.m;
  c.lambda = to_complex(q.lambda);
  if (q.mu) c.mu = to_complex(*q.mu);
  c.phi = to_complex(q.phi);
  return c;
}

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {"grouplike", "duality", "demi_tour", "mirror", "artin", "center", "tables"};
  return names;
}

namespace {

std::string canonical_check(std::string name) {
  for (auto& ch : name)
    if (ch == '-') ch = '_';
  if (name == "o_image") name = "artin";
  for (const auto& c : all_check_names())
    if (c == name) return name;
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace

template <class K>
json run_checks(const AssociatorCandidate<K>& c, const std::vector<std::string>& checks, double tol) {
  json out = json::array();
  std::set<std::string> want;
  for (const auto& name : checks) want.insert(canonical_check(name));
  if (want.count("grouplike")) out.push_back(report_to_json(check_grouplike_report(c.phi, tol)));
  if (want.count("duality")) out.push_back(report_to_json(check_duality_report(c, tol)));
  if (want.count("demi_tour")) out.push_back(report_to_json(check_demi_tour_report(c, tol)));
  if (want.count("mirror")) out.push_back(report_to_json(check_mirror_report(c, tol)));
  if (want.count("artin") || want.count("center")) {
    auto M = build_morphism(c, true, false);
    if (want.count("artin"))
      for (const auto& l : verify_artin(M, tol)) out.push_back(check_to_json(l));
    if (want.count("center")) out.push_back(check_to_json(verify_center(M, tol)));
  }
  if (want.count("tables"))
    for (const auto& l : pure_braid_tables(c, tol)) out.push_back(check_to_json(l));
  return out;
}

json run_checks(const AnyCandidate& any, const std::vector<std::string>& checks, double tol) {
  return std::visit([&](const auto& c) { return run_checks(c, checks, tol); }, any);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

template json series_to_json(const Series<Rational>&);
template json series_to_json(const Series<Complex>&);
template Series<Rational> series_from_json(const json&);
template Series<Complex> series_from_json(const json&);
template json flat_to_json(const FlatElem<Rational>&);
template json flat_to_json(const FlatElem<Complex>&);
template FlatElem<Rational> flat_from_json(const json&, int, int);
template FlatElem<Complex> flat_from_json(const json&, int, int);
template json associator_to_json(const AssociatorCandidate<Rational>&, const json&);
template json associator_to_json(const AssociatorCandidate<Complex>&, const json&);
template json run_checks(const AssociatorCandidate<Rational>&, const std::vector<std::string>&, double);
template json run_checks(const AssociatorCandidate<Complex>&, const std::vector<std::string>&, double);

}  // namespace assoc_lab
