#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "assoc_lab/associator.hpp"
#include "assoc_lab/morphism.hpp"

namespace assoc_lab {

using json = nlohmann::json;

/// Malformed input files; the CLI maps this to exit code 2.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json scalar_to_json(const Rational& x);
json scalar_to_json(const Complex& x);
template <class K>
K scalar_from_json(const json& j);

template <class K>
json series_to_json(const Series<K>& s);
/// Accepts terms in any order; letter m-1 is expanded as −(t_0+…+t_{m-2}).
/// A rational-mode file may be read into a complex series.
template <class K>
Series<K> series_from_json(const json& j);

json w_to_json(WElem g);
WElem w_from_json(const json& j, int m);

template <class K>
json flat_to_json(const FlatElem<K>& x);
template <class K>
FlatElem<K> flat_from_json(const json& j, int m, int N);

json report_to_json(const EquationReport& r);
json check_to_json(const CheckLine& c);

template <class K>
json associator_to_json(const AssociatorCandidate<K>& c, const json& provenance = json::object());

using AnyCandidate = std::variant<AssociatorCandidate<Rational>, AssociatorCandidate<Complex>>;
AnyCandidate associator_from_json(const json& j);
AssociatorCandidate<Complex> as_complex(const AnyCandidate& c);

/// Check names accepted by run_checks: grouplike, duality, demi_tour, mirror,
/// artin (also emits o_image), center, tables.  '-' is read as '_'.
const std::vector<std::string>& all_check_names();
/// Runs the named checks and returns one report object per line.
template <class K>
json run_checks(const AssociatorCandidate<K>& c, const std::vector<std::string>& checks, double tol);
json run_checks(const AnyCandidate& c, const std::vector<std::string>& checks, double tol);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace assoc_lab
