#include "hyperprob/kolmogorov.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <unordered_set>

#include "hyperprob/errors.hpp"

namespace hyperprob {

namespace {

constexpr std::array<std::string_view, 5> kReserved = {"OMEGA", "A1", "A2",
                                                       "B1", "B2"};

class Fnv1a {
 public:
  void bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      hash_ ^= p[i];
      hash_ *= 0x100000001b3ULL;
    }
  }
  void str(std::string_view s) {
    bytes(s.data(), s.size());
    const char sep = '\0';
    bytes(&sep, 1);
  }
  void f64(double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    bytes(&bits, sizeof bits);
  }
  std::uint64_t value() const { return hash_; }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace

bool Atom::in(std::string_view context) const {
  return std::find(contexts.begin(), contexts.end(), context) != contexts.end();
}

bool Event::empty() const {
  return std::none_of(members_.begin(), members_.end(), [](bool b) { return b; });
}

Event operator&(const Event& lhs, const Event& rhs) {
  Event out(lhs.size());
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs.members_[i] && rhs.members_[i]) out.members_[i] = true;
  }
  return out;
}

double ContextStatistics::u_a(std::size_t i) const { return std::sqrt(p_a[i]); }
double ContextStatistics::u_b(std::size_t j) const { return std::sqrt(p_b[j]); }
double ContextStatistics::u(std::size_t i, std::size_t j) const {
  return std::sqrt(transition[i][j]);
}

bool is_reserved_context(std::string_view name) {
  return std::find(kReserved.begin(), kReserved.end(), name) != kReserved.end();
}

FiniteContextSpace::FiniteContextSpace(std::vector<Atom> atoms,
                                       std::vector<std::string> contexts)
    : atoms_(std::move(atoms)), contexts_(std::move(contexts)) {
  if (atoms_.empty()) {
    throw Error(ErrorCode::InvalidDocument, "space has no atoms");
  }
  std::set<std::string, std::less<>> declared;
  for (const auto& name : contexts_) {
    if (is_reserved_context(name)) {
      throw Error(ErrorCode::InvalidDocument,
                  "context name '" + name + "' is reserved");
    }
    if (!declared.insert(name).second) {
      throw Error(ErrorCode::InvalidDocument,
                  "context '" + name + "' declared twice");
    }
  }
  std::unordered_set<std::string> ids;
  double total = 0.0;
  for (const auto& atom : atoms_) {
    if (!ids.insert(atom.id).second) {
      throw Error(ErrorCode::DuplicateAtomId, "atom id '" + atom.id + "'");
    }
    if (!std::isfinite(atom.weight) || atom.weight < 0.0) {
      throw Error(ErrorCode::InvalidDocument,
                  "atom '" + atom.id + "' has invalid weight");
    }
    for (const auto& c : atom.contexts) {
      if (!declared.contains(c)) {
        throw Error(ErrorCode::UnknownContextName,
                    "atom '" + atom.id + "' refers to undeclared context '" + c +
                        "'");
      }
    }
    total += atom.weight;
  }
  if (std::abs(total - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorCode::WeightSumError,
                "weights sum to " + std::to_string(total) + ", expected 1");
  }
}

FiniteContextSpace FiniteContextSpace::normalized(
    std::vector<Atom> atoms, std::vector<std::string> contexts) {
  double total = 0.0;
  for (const auto& atom : atoms) total += atom.weight;
  if (!(total > 0.0)) {
    throw Error(ErrorCode::WeightSumError, "total weight must be positive");
  }
  for (auto& atom : atoms) atom.weight /= total;
  return FiniteContextSpace(std::move(atoms), std::move(contexts));
}

std::vector<std::string> FiniteContextSpace::all_context_names() const {
  std::vector<std::string> names = contexts_;
  names.insert(names.end(), kReserved.begin(), kReserved.end());
  return names;
}

Event FiniteContextSpace::omega() const { return Event(atoms_.size(), true); }
Event FiniteContextSpace::none() const { return Event(atoms_.size(), false); }

Event FiniteContextSpace::a_event(AOutcome a) const {
  Event e(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].a == a) e.insert(i);
  }
  return e;
}

Event FiniteContextSpace::b_event(BOutcome b) const {
  Event e(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].b == b) e.insert(i);
  }
  return e;
}

Event FiniteContextSpace::context(std::string_view name) const {
  if (name == kOmega) return omega();
  if (name == "A1") return a_event(AOutcome::a1);
  if (name == "A2") return a_event(AOutcome::a2);
  if (name == "B1") return b_event(BOutcome::b1);
  if (name == "B2") return b_event(BOutcome::b2);
  if (std::find(contexts_.begin(), contexts_.end(), name) == contexts_.end()) {
    throw Error(ErrorCode::UnknownContextName,
                "no context named '" + std::string(name) + "'");
  }
  Event e(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].in(name)) e.insert(i);
  }
  return e;
}

double FiniteContextSpace::prob(const Event& e) const {
  double p = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (e.contains(i)) p += atoms_[i].weight;
  }
  return p;
}

double FiniteContextSpace::cond_prob(const Event& a, const Event& c) const {
  const double pc = prob(c);
  if (!(pc > 0.0)) {
    throw Error(ErrorCode::ZeroConditioningContext,
                "conditioning context has probability zero");
  }
  return prob(a & c) / pc;
}

bool FiniteContextSpace::is_nondegenerate(const Event& c) const {
  if (!(prob(c) > 0.0)) {
    throw Error(ErrorCode::ZeroConditioningContext,
                "context has probability zero");
  }
  return prob(a_event(AOutcome::a1) & c) > 0.0 &&
         prob(a_event(AOutcome::a2) & c) > 0.0;
}

bool FiniteContextSpace::are_incompatible() const {
  for (auto a : {AOutcome::a1, AOutcome::a2}) {
    for (auto b : {BOutcome::b1, BOutcome::b2}) {
      if (!(prob(a_event(a) & b_event(b)) > 0.0)) return false;
    }
  }
  return true;
}

Matrix2 FiniteContextSpace::transition() const {
  Matrix2 p{};
  for (auto a : {AOutcome::a1, AOutcome::a2}) {
    const Event ea = a_event(a);
    for (auto b : {BOutcome::b1, BOutcome::b2}) {
      p[index(a)][index(b)] = cond_prob(b_event(b), ea);
    }
  }
  return p;
}

ContextStatistics FiniteContextSpace::context_stats(std::string_view name) const {
  return context_stats(context(name), std::string(name));
}

ContextStatistics FiniteContextSpace::context_stats(const Event& c,
                                                    std::string name) const {
  if (!is_nondegenerate(c)) {
    throw Error(ErrorCode::DegenerateContext,
                "context '" + name + "' gives zero mass to an a-value");
  }
  if (!are_incompatible()) {
    throw Error(ErrorCode::CompatibleVariables,
                "reference variables a and b are compatible (an (a, b) cell is empty)");
  }
  ContextStatistics s;
  s.context = std::move(name);
  for (auto a : {AOutcome::a1, AOutcome::a2}) {
    s.p_a[index(a)] = cond_prob(a_event(a), c);
  }
  for (auto b : {BOutcome::b1, BOutcome::b2}) {
    s.p_b[index(b)] = cond_prob(b_event(b), c);
  }
  s.transition = transition();
  return s;
}

std::uint64_t FiniteContextSpace::fingerprint() const {
  Fnv1a h;
  for (const auto& name : contexts_) h.str(name);
  for (const auto& atom : atoms_) {
    h.str(atom.id);
    h.f64(atom.weight);
    const unsigned char labels[2] = {static_cast<unsigned char>(atom.a),
                                     static_cast<unsigned char>(atom.b)};
    h.bytes(labels, 2);
    for (const auto& c : atom.contexts) h.str(c);
  }
  return h.value();
}

bool is_row_stochastic(const Matrix2& p, double tol) {
  for (const auto& row : p) {
    if (row[0] < 0.0 || row[1] < 0.0) return false;
    if (std::abs(row[0] + row[1] - 1.0) > tol) return false;
  }
  return true;
}

bool is_double_stochastic(const Matrix2& p, double tol) {
  return std::abs(p[0][0] + p[1][0] - 1.0) <= tol &&
         std::abs(p[0][1] + p[1][1] - 1.0) <= tol;
}

}  // namespace hyperprob
