#include "hyperprob/json_io.hpp"

#include <fstream>
#include <sstream>

#include "hyperprob/errors.hpp"

namespace hyperprob {

namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidDocument, what);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    invalid(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) invalid(std::string("field '") + what + "' must be a number");
  return j.get<double>();
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) invalid(std::string("field '") + what + "' must be a string");
  return j.get<std::string>();
}

Json pair_json(const Pair& p) { return Json::array({p[0], p[1]}); }

Json matrix2_json(const Matrix2& m) {
  return Json::array({pair_json(m[0]), pair_json(m[1])});
}

}  // namespace

std::string_view version() { return "hyperprob " HYPERPROB_VERSION; }

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    invalid("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

FiniteContextSpace load_space(const Json& document) {
  const Json& atoms_json = member(document, "atoms");
  if (!atoms_json.is_array()) invalid("'atoms' must be an array");
  std::vector<std::string> contexts;
  if (document.contains("contexts")) {
    const Json& cs = document.at("contexts");
    if (!cs.is_array()) invalid("'contexts' must be an array");
    for (const auto& c : cs) contexts.push_back(text(c, "contexts[]"));
  }
  std::vector<Atom> atoms;
  for (const auto& aj : atoms_json) {
    Atom atom;
    atom.id = text(member(aj, "id"), "id");
    atom.weight = number(member(aj, "weight"), "weight");
    const std::string a = text(member(aj, "a"), "a");
    const std::string b = text(member(aj, "b"), "b");
    if (a == "a1") atom.a = AOutcome::a1;
    else if (a == "a2") atom.a = AOutcome::a2;
    else invalid("atom '" + atom.id + "': a must be \"a1\" or \"a2\", got \"" + a + "\"");
    if (b == "b1") atom.b = BOutcome::b1;
    else if (b == "b2") atom.b = BOutcome::b2;
    else invalid("atom '" + atom.id + "': b must be \"b1\" or \"b2\", got \"" + b + "\"");
    if (aj.contains("in")) {
      const Json& in = aj.at("in");
      if (!in.is_array()) invalid("atom '" + atom.id + "': 'in' must be an array");
      for (const auto& c : in) atom.contexts.push_back(text(c, "in[]"));
    }
    atoms.push_back(std::move(atom));
  }
  return FiniteContextSpace(std::move(atoms), std::move(contexts));
}

FiniteContextSpace load_space_file(const std::filesystem::path& path) {
  return load_space(read_json_file(path));
}

Json space_to_json(const FiniteContextSpace& space) {
  Json atoms = Json::array();
  for (const auto& atom : space.atoms()) {
    Json a;
    a["id"] = atom.id;
    a["weight"] = atom.weight;
    a["a"] = atom.a == AOutcome::a1 ? "a1" : "a2";
    a["b"] = atom.b == BOutcome::b1 ? "b1" : "b2";
    a["in"] = atom.contexts;
    atoms.push_back(std::move(a));
  }
  Json doc;
  doc["atoms"] = std::move(atoms);
  doc["contexts"] = space.declared_contexts();
  return doc;
}

Json to_json(const HyperNumber& z) {
  Json j;
  j["x"] = z.x();
  j["y"] = z.y();
  return j;
}

HyperNumber hyper_number_from_json(const Json& j) {
  if (j.is_number()) return HyperNumber(j.get<double>());
  return HyperNumber(number(member(j, "x"), "x"), number(member(j, "y"), "y"));
}

Json to_json(const HyperState& s) {
  Json j;
  j["basis"] = s.basis;
  j["components"] = Json::array({to_json(s[0]), to_json(s[1])});
  return j;
}

HyperState state_from_json(const Json& j) {
  HyperState s;
  s.basis = text(member(j, "basis"), "basis");
  const Json& c = member(j, "components");
  if (!c.is_array() || c.size() != 2) invalid("'components' must hold two numbers");
  s[0] = hyper_number_from_json(c[0]);
  s[1] = hyper_number_from_json(c[1]);
  return s;
}

Json to_json(const GMatrix2& v) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < 2; ++i) {
    rows.push_back(Json::array({to_json(v(i, 0)), to_json(v(i, 1))}));
  }
  return rows;
}

GMatrix2 matrix_from_json(const Json& j) {
  if (j.is_object() && j.contains("V")) return matrix_from_json(j.at("V"));
  if (!j.is_array()) invalid("matrix must be an array");
  GMatrix2 v;
  if (j.size() == 4) {
    for (std::size_t n = 0; n < 4; ++n) v(n / 2, n % 2) = hyper_number_from_json(j[n]);
    return v;
  }
  if (j.size() != 2) invalid("matrix must have two rows");
  for (std::size_t i = 0; i < 2; ++i) {
    if (!j[i].is_array() || j[i].size() != 2) invalid("matrix rows must hold two numbers");
    for (std::size_t k = 0; k < 2; ++k) v(i, k) = hyper_number_from_json(j[i][k]);
  }
  return v;
}

Json to_json(const ContextStatistics& s) {
  Json j;
  j["context"] = s.context;
  j["empirical"] = s.empirical;
  j["p_a"] = pair_json(s.p_a);
  j["p_b"] = pair_json(s.p_b);
  j["transition"] = matrix2_json(s.transition);
  j["double_stochastic"] = is_double_stochastic(s.transition);
  return j;
}

Json interference_fragment(const ContextStatistics& s,
                           const DisturbanceProfile& profile) {
  Json j;
  j["lambda"] = pair_json(profile.lambda);
  j["epsilon"] = Json::array({profile.epsilon[0], profile.epsilon[1]});
  j["theta"] = pair_json(profile.theta);
  j["class"] = std::string(to_string(profile.context_class));
  j["balance_residual"] = balance_check(s, profile.lambda);
  return j;
}

Json to_json(const Representation& rep) {
  Json j = interference_fragment(rep.stats, rep.profile);
  j["amplitude"] = to_json(rep.amplitude);
  j["born_residual_b"] = born_residual_b(rep);
  if (rep.a_basis) {
    j["a_basis"] = Json::array({to_json(rep.a_basis->vectors[0]),
                                to_json(rep.a_basis->vectors[1])});
    j["V"] = to_json(rep.a_basis->transition);
    j["born_residual_a"] = born_residual_a(rep);
  } else {
    j["a_basis"] = nullptr;
    j["a_basis_note"] = rep.a_basis_note;
  }
  return j;
}

Json to_json(const TrialCounts& c) {
  Json j;
  j["context"] = c.context;
  j["seed"] = c.seed;
  std::ostringstream fp;
  fp << std::hex << c.fingerprint;
  j["space_fingerprint"] = fp.str();
  j["n_total"] = c.n_total;
  j["n_context"] = c.n_context();
  j["n_a_in_context"] = Json::array(
      {c.n_a_in_context(AOutcome::a1), c.n_a_in_context(AOutcome::a2)});
  j["n_b_in_context"] = Json::array(
      {c.n_b_in_context(BOutcome::b1), c.n_b_in_context(BOutcome::b2)});
  j["n_joint"] = Json::array(
      {Json::array({c.n_joint(AOutcome::a1, BOutcome::b1),
                    c.n_joint(AOutcome::a1, BOutcome::b2)}),
       Json::array({c.n_joint(AOutcome::a2, BOutcome::b1),
                    c.n_joint(AOutcome::a2, BOutcome::b2)})});
  return j;
}

Json to_json(const RegimeReport& r) {
  Json j;
  j["stats"] = to_json(r.stats);
  j["lambda_hat"] = pair_json(r.lambda_hat);
  j["stderr"] = pair_json(r.stderr_hat);
  j["error_method"] = std::string(to_string(r.method));
  j["bootstrap_resamples"] = r.resamples;
  j["dropped_resamples"] = r.dropped_resamples;
  j["n_effective"] = r.n_effective;
  j["verdict"] = std::string(to_string(r.verdict));
  return j;
}

Json to_json(const ForwardResult& r) {
  Json j;
  j["b_state"] = to_json(r.b_state);
  j["probabilities"] = pair_json(r.probabilities);
  if (r.closed_form) j["closed_form"] = pair_json(*r.closed_form);
  if (r.phase_gap) j["phase_gap"] = *r.phase_gap;
  return j;
}

}  // namespace hyperprob
