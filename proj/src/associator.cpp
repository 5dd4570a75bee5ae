#include "assoc_lab/associator.hpp"

namespace assoc_lab {

template <class K>
AssociatorCandidate<K> make_candidate(int m, const K& lambda, const Series<K>& phi) {
  if (phi.m() != m) throw std::invalid_argument("associator series has the wrong m");
  if (!phi.is_tfree()) throw std::invalid_argument("associator must be T-free");
  AssociatorCandidate<K> c;
  c.m = m;
  c.lambda = lambda;
  c.phi = phi;
  return c;
}

template <class K>
static Series<K> exp_gen(int m, int N, int r, const K& coeff) {
  return series_exp(Series<K>::gen(m, N, r) * coeff);
}

template <class K>
Series<K> make_P(const AssociatorCandidate<K>& c) {
  return c.phi * exp_gen(c.m, c.truncation(), 1, c.lambda);
}

template <class K>
Series<K> make_xi(const AssociatorCandidate<K>& c) {
  int m = c.m, N = c.truncation();
  auto phi_inv = series_inverse(c.phi);
  return c.phi * exp_gen(m, N, 1, c.mu_value()) * w_act_series(w_omega_s(m), phi_inv) * exp_gen(m, N, 2, c.lambda);
}

template <class K>
Series<K> duality_residual(const AssociatorCandidate<K>& c, Duality kind) {
  int m = c.m;
  if (kind == Duality::Automatic) kind = (m % 2) ? Duality::Odd : Duality::J;
  Series<K> image;
  if (kind == Duality::Odd) {
    if (m % 2 == 0) throw std::invalid_argument("odd duality needs odd m");
    image = w_act_series(w_make(m, 1, (m - 1) / 2), c.phi);
  } else {
    image = j_act_series(c.phi);
  }
  return image * c.phi - Series<K>::one(m, c.truncation());
}

template <class K>
Series<K> demi_tour_product(const AssociatorCandidate<K>& c) {
  int m = c.m, N = c.truncation();
  Series<K> prod = Series<K>::one(m, N);
  if (m % 2) {
    // Products run with increasing r, factors multiplied left to right.
    int h = (m - 1) / 2;
    auto P = make_P(c);
    for (int r = 0; r < h; ++r) {
      prod = prod * w_act_series(w_omega(m, r), P);
      prod = prod * w_act_series(w_omega(m, h + 1 + r), P);
    }
    prod = prod * w_act_series(w_omega(m, h), P);
  } else {
    auto xi = make_xi(c);
    for (int r = 0; r < m / 2; ++r) prod = prod * w_act_series(w_omega(m, r), xi);
  }
  return prod;
}

template <class K>
Series<K> demi_tour_residual(const AssociatorCandidate<K>& c) {
  return demi_tour_product(c) - Series<K>::one(c.m, c.truncation());
}

template <class K>
EquationReport residual_report(const std::string& name, const Series<K>& residual, double tol) {
  EquationReport r;
  r.equation = name;
  r.residual_norm = residual.max_abs();
  for (int d = 0; d <= residual.truncation(); ++d) {
    double a = residual.max_abs_degree(d);
    bool bad = Field<K>::exact ? a > 0.0 || !residual.degree_part(d).is_zero() : a > tol;
    if (bad) {
      r.first_bad_degree = d;
      r.pass = false;
      break;
    }
  }
  return r;
}

template <class K>
EquationReport check_grouplike_report(const Series<K>& phi, double tol) {
  EquationReport r;
  r.equation = "grouplike";
  auto diff = coproduct(phi);
  diff -= Tensor<K>::outer(phi, phi);
  const Layout& L = phi.layout();
  double worst = Field<K>::magnitude(phi.constant() - Field<K>::one());
  int first = -1;
  if (Field<K>::exact ? worst > 0.0 : worst > tol) first = 0;
  for (const auto& [ij, c] : diff.entries()) {
    double a = Field<K>::magnitude(c);
    worst = std::max(worst, a);
    bool bad = Field<K>::exact ? true : a > tol;
    if (bad) {
      int d = L.key(ij.first).deg + L.key(ij.second).deg;
      if (first < 0 || d < first) first = d;
    }
  }
  r.residual_norm = worst;
  if (first >= 0) {
    r.pass = false;
    r.first_bad_degree = first;
  }
  return r;
}

template <class K>
EquationReport check_duality_report(const AssociatorCandidate<K>& c, double tol, Duality kind) {
  return residual_report("duality", duality_residual(c, kind), tol);
}

template <class K>
EquationReport check_demi_tour_report(const AssociatorCandidate<K>& c, double tol) {
  return residual_report("demi_tour", demi_tour_residual(c), tol);
}

template <class K>
static AssociatorCandidate<K> mirrored(const AssociatorCandidate<K>& c) {
  auto d = c;
  d.lambda = -c.lambda;
  if (c.mu) d.mu = -*c.mu;
  return d;
}

template <class K>
EquationReport check_mirror_report(const AssociatorCandidate<K>& c, double tol, bool with_duality) {
  auto d = mirrored(c);
  auto dt = check_demi_tour_report(d, tol);
  EquationReport r = dt;
  r.equation = "mirror";
  if (with_duality) {
    auto du = check_duality_report(d, tol);
    if (!du.pass) {
      r.pass = false;
      if (!r.first_bad_degree || *du.first_bad_degree < *r.first_bad_degree) r.first_bad_degree = du.first_bad_degree;
    }
    r.residual_norm = std::max(*dt.residual_norm, *du.residual_norm);
  }
  return r;
}

template <class K>
bool check_duality(const AssociatorCandidate<K>& c, double tol, Duality kind) {
  return check_duality_report(c, tol, kind).pass;
}

template <class K>
bool check_demi_tour(const AssociatorCandidate<K>& c, double tol) {
  return check_demi_tour_report(c, tol).pass;
}

template <class K>
bool check_mirror(const AssociatorCandidate<K>& c, double tol, bool with_duality) {
  return check_mirror_report(c, tol, with_duality).pass;
}

template <class K>
std::vector<EquationReport> check_suite(const AssociatorCandidate<K>& c, double tol, bool with_duality) {
  std::vector<EquationReport> out;
  out.push_back(check_grouplike_report(c.phi, tol));
  if (with_duality) out.push_back(check_duality_report(c, tol));
  out.push_back(check_demi_tour_report(c, tol));
  return out;
}

bool all_pass(const std::vector<EquationReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return true;
}

template <class K>
AssociatorCandidate<K> twist(const AssociatorCandidate<K>& c, const K& alpha) {
  auto d = c;
  int N = c.truncation();
  d.phi = exp_gen(c.m, N, 0, K(-alpha)) * c.phi * exp_gen(c.m, N, 1, alpha);
  return d;
}

template <class K>
AssociatorCandidate<K> right_twist(const AssociatorCandidate<K>& c, const K& alpha) {
  auto d = c;
  d.phi = c.phi * exp_gen(c.m, c.truncation(), 1, alpha);
  return d;
}

template <class K>
AssociatorCandidate<K> scale(const AssociatorCandidate<K>& c, const K& factor) {
  auto d = c;
  std::vector<typename Series<K>::Term> terms;
  K power = Field<K>::one();
  int deg = 0;
  for (const auto& t : c.phi.terms()) {
    while (deg < t.key.deg) {
      power *= factor;
      ++deg;
    }
    terms.push_back({t.key, K(t.coeff * power)});
  }
  d.phi = Series<K>::from_terms(c.m, c.truncation(), std::move(terms));
  d.lambda = factor * c.lambda;
  if (c.mu) d.mu = factor * *c.mu;
  return d;
}

template <class K>
AssociatorCandidate<K> scale_pair(const AssociatorCandidate<K>& c, const K& alpha, const K& beta) {
  if (c.m % 2) throw std::invalid_argument("pair scaling needs even m");
  int m = c.m, N = c.truncation();
  std::vector<Series<K>> images;
  for (int i = 0; i < m - 1; ++i) images.push_back(Series<K>::gen(m, N, i) * (i % 2 ? beta : alpha));
  auto d = c;
  d.phi = substitute(c.phi, images, Series<K>::t_central(m, N));
  d.lambda = alpha * c.lambda;
  d.mu = beta * c.mu_value();
  return d;
}

#define ASSOC_LAB_INSTANTIATE(K)                                                                        \
  template AssociatorCandidate<K> make_candidate(int, const K&, const Series<K>&);                      \
  template Series<K> make_P(const AssociatorCandidate<K>&);                                             \
  template Series<K> make_xi(const AssociatorCandidate<K>&);                                            \
  template Series<K> duality_residual(const AssociatorCandidate<K>&, Duality);                          \
  template Series<K> demi_tour_product(const AssociatorCandidate<K>&);                                  \
  template Series<K> demi_tour_residual(const AssociatorCandidate<K>&);                                 \
  template EquationReport residual_report(const std::string&, const Series<K>&, double);                \
  template EquationReport check_grouplike_report(const Series<K>&, double);                             \
  template EquationReport check_duality_report(const AssociatorCandidate<K>&, double, Duality);         \
  template EquationReport check_demi_tour_report(const AssociatorCandidate<K>&, double);                \
  template EquationReport check_mirror_report(const AssociatorCandidate<K>&, double, bool);             \
  template bool check_duality(const AssociatorCandidate<K>&, double, Duality);                          \
  template bool check_demi_tour(const AssociatorCandidate<K>&, double);                                 \
  template bool check_mirror(const AssociatorCandidate<K>&, double, bool);                              \
  template std::vector<EquationReport> check_suite(const AssociatorCandidate<K>&, double, bool);        \
  template AssociatorCandidate<K> twist(const AssociatorCandidate<K>&, const K&);                       \
  template AssociatorCandidate<K> right_twist(const AssociatorCandidate<K>&, const K&);                 \
  template AssociatorCandidate<K> scale(const AssociatorCandidate<K>&, const K&);                       \
  template AssociatorCandidate<K> scale_pair(const AssociatorCandidate<K>&, const K&, const K&);

ASSOC_LAB_INSTANTIATE(Rational)
ASSOC_LAB_INSTANTIATE(Complex)

}  // namespace assoc_lab
