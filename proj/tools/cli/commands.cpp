#include "cli/commands.hpp"

#include <cmath>
#include <functional>

#include "cli/text_table.hpp"
#include "hyperprob/errors.hpp"

namespace hyperprob::cli {

namespace {

Json header(const char* command) {
  Json j;
  j["version"] = std::string(version());
  j["command"] = command;
  return j;
}

std::string pair_text(const Json& p, int precision = 6) {
  return "(" + fixed(p[0].get<double>(), precision) + ", " +
         fixed(p[1].get<double>(), precision) + ")";
}

std::string number_text(const Json& z) {
  const double x = z["x"].get<double>();
  const double y = z["y"].get<double>();
  return fixed(x) + (y < 0 ? " - " : " + ") + fixed(std::abs(y)) + "j";
}

void print_stats(const Json& s, std::ostream& out) {
  TextTable t({"quantity", "value"});
  t.add_row({"context", s["context"].get<std::string>()});
  t.add_row({"p_a", pair_text(s["p_a"])});
  t.add_row({"p_b", pair_text(s["p_b"])});
  t.add_row({"transition row a1", pair_text(s["transition"][0])});
  t.add_row({"transition row a2", pair_text(s["transition"][1])});
  t.add_row({"double stochastic", s["double_stochastic"].get<bool>() ? "yes" : "no"});
  t.print(out);
}

void print_interference(const Json& f, std::ostream& out) {
  TextTable t({"outcome", "lambda", "epsilon", "theta"});
  for (std::size_t x = 0; x < 2; ++x) {
    t.add_row({"b" + std::to_string(x + 1), fixed(f["lambda"][x].get<double>()),
               f["epsilon"].is_null() ? "-" : std::to_string(f["epsilon"][x].get<int>()),
               f["theta"].is_null() ? "-" : fixed(f["theta"][x].get<double>())});
  }
  t.print(out);
  out << "class: " << f["class"].get<std::string>() << "\n"
      << "balance residual: " << f["balance_residual"].get<double>() << "\n";
}

void print_state(const std::string& label, const Json& s, TextTable& t) {
  t.add_row({label, s["basis"].get<std::string>(), number_text(s["components"][0]),
             number_text(s["components"][1])});
}

void render_text(const Json& r, std::ostream& out) {
  out << r["version"].get<std::string>() << " " << r["command"].get<std::string>()
      << "\n\n";
  const std::string cmd = r["command"];
  if (cmd == "classify" || cmd == "represent") {
    print_stats(r["stats"], out);
    out << "\n";
    print_interference(r["interference"], out);
  }
  if (cmd == "represent") {
    const Json& rep = r["representation"];
    out << "\n";
    TextTable t({"vector", "basis", "coordinate 1", "coordinate 2"});
    print_state("amplitude", rep["amplitude"], t);
    if (!rep["a_basis"].is_null()) {
      print_state("e1^a", rep["a_basis"][0], t);
      print_state("e2^a", rep["a_basis"][1], t);
    }
    t.print(out);
    out << "born residual b: " << rep["born_residual_b"].get<double>() << "\n";
    if (rep.contains("born_residual_a")) {
      out << "born residual a: " << rep["born_residual_a"].get<double>() << "\n";
    } else {
      out << "a-basis: " << rep["a_basis_note"].get<std::string>() << "\n";
    }
  }
  if (cmd == "verify") {
    const Json& rows = r["contexts"];
    std::vector<std::string> head{"context", "class"};
    for (const auto& [name, _] : rows[0]["checks"].items()) head.push_back(name);
    TextTable t(head);
    for (const auto& row : rows) {
      std::vector<std::string> cells{row["context"].get<std::string>(),
                                     row["class"].get<std::string>()};
      for (const auto& [_, v] : row["checks"].items()) cells.push_back(v["status"]);
      t.add_row(cells);
    }
    t.print(out);
    out << "\nall passed: " << (r["all_passed"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (cmd == "forward") {
    const Json& f = r["forward"];
    TextTable t({"vector", "basis", "coordinate 1", "coordinate 2"});
    print_state("input", r["input"], t);
    print_state("output", f["b_state"], t);
    t.print(out);
    out << "\nprobabilities: " << pair_text(f["probabilities"], 10) << "\n";
    if (f.contains("closed_form")) {
      out << "closed form:   " << pair_text(f["closed_form"], 10) << "\n"
          << "phase gap:     " << f["phase_gap"].get<double>() << "\n";
    }
  }
  if (cmd == "simulate") {
    const Json& c = r["counts"];
    const Json& g = r["regime"];
    TextTable t({"quantity", "value"});
    t.add_row({"trials", std::to_string(c["n_total"].get<std::uint64_t>())});
    t.add_row({"in context", std::to_string(c["n_context"].get<std::uint64_t>())});
    t.add_row({"seed", std::to_string(c["seed"].get<std::uint64_t>())});
    t.add_row({"p_a (empirical)", pair_text(g["stats"]["p_a"])});
    t.add_row({"p_b (empirical)", pair_text(g["stats"]["p_b"])});
    t.add_row({"lambda hat", pair_text(g["lambda_hat"])});
    t.add_row({"stderr (" + g["error_method"].get<std::string>() + ")",
               pair_text(g["stderr"])});
    t.add_row({"verdict", g["verdict"].get<std::string>()});
    t.print(out);
  }
}

void write(const Json& report, const CommonOptions& opts, std::ostream& out) {
  if (opts.format == Format::json) {
    out << emit(report);
  } else {
    render_text(report, out);
  }
}

int run(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
}

Json check(bool applicable, bool ok, double value) {
  Json j;
  j["status"] = !applicable ? "n/a" : (ok ? "pass" : "fail");
  j["value"] = applicable ? Json(value) : Json(nullptr);
  return j;
}

}  // namespace

std::string emit(const Json& report) { return report.dump(2) + "\n"; }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHyperbolicContext:
      return kNotHyperbolic;
    case ErrorCode::MixedClassUnsupported:
    case ErrorCode::NotDoubleStochastic:
    case ErrorCode::NotDecomposable:
    case ErrorCode::NotDecomposableOutput:
    case ErrorCode::NotGUnitary:
    case ErrorCode::InsufficientData:
    case ErrorCode::NotInGroup:
    case ErrorCode::NotInvertible:
    case ErrorCode::ZeroDenominator:
    case ErrorCode::RangeError:
      return kDomainError;
    default:
      return kValidationError;
  }
}

Json classify_report(const FiniteContextSpace& space, const std::string& context) {
  const ContextStatistics stats = space.context_stats(context);
  const Pair lambda = lambda_coefficients(stats);
  Json report = header("classify");
  report["stats"] = to_json(stats);
  if (classify(lambda) == ContextClass::mixed) {
    DisturbanceProfile p;
    p.lambda = lambda;
    p.context_class = ContextClass::mixed;
    p.epsilon = {sign_of(lambda[0]), sign_of(lambda[1])};
    Json f = interference_fragment(stats, p);
    f["theta"] = nullptr;
    report["interference"] = std::move(f);
  } else {
    report["interference"] = interference_fragment(stats, phases(lambda));
  }
  return report;
}

Json represent_report(const FiniteContextSpace& space, const std::string& context) {
  const ContextStatistics stats = space.context_stats(context);
  const Representation rep = represent(stats);
  Json report = header("represent");
  report["stats"] = to_json(stats);
  report["interference"] = interference_fragment(stats, rep.profile);
  report["representation"] = to_json(rep);
  return report;
}

Json verify_report(const FiniteContextSpace& space, double tol, bool& all_passed) {
  all_passed = true;
  Json rows = Json::array();
  const bool incompatible = space.are_incompatible();
  const bool ds = incompatible && is_double_stochastic(space.transition(), tol);

  for (const auto& name : space.all_context_names()) {
    Json row;
    row["context"] = name;
    const Event c = space.context(name);
    const bool usable = incompatible && space.prob(c) > 0.0 && space.is_nondegenerate(c);

    std::optional<ContextStatistics> stats;
    Pair lambda{};
    ContextClass cls = ContextClass::classical;
    if (usable) {
      stats = space.context_stats(c, name);
      lambda = lambda_coefficients(*stats);
      cls = classify(lambda);
      row["class"] = std::string(to_string(cls));
    } else {
      row["class"] = incompatible ? "degenerate" : "compatible";
    }

    const bool hyp_family = usable && (cls == ContextClass::hyperbolic ||
                                       cls == ContextClass::boundary) &&
                            std::abs(lambda[0]) >= 1.0 - kClassTolerance &&
                            std::abs(lambda[1]) >= 1.0 - kClassTolerance;
    std::optional<Representation> rep;
    if (hyp_family) rep = represent(*stats);

    Json checks;
    {
      const double r = usable ? std::abs(balance_check(*stats, lambda)) : 0.0;
      checks["balance"] = check(usable, r <= tol, r);
    }
    {
      double r = 0.0;
      if (usable && cls != ContextClass::mixed) {
        const Pair p = reconstruct_total_probability(*stats, phases(lambda));
        r = std::max(std::abs(p[0] - stats->p_b[0]), std::abs(p[1] - stats->p_b[1]));
      }
      checks["total_probability"] =
          check(usable && cls != ContextClass::mixed, r <= tol, r);
    }
    {
      const bool applies = usable && cls == ContextClass::hyperbolic;
      const double s = applies ? sign_of(lambda[0]) + sign_of(lambda[1]) : 0.0;
      checks["opposite_signs"] = check(applies, s == 0.0, s);
    }
    {
      const bool applies = usable && ds;
      const double d = applies ? std::abs(std::abs(lambda[0]) - std::abs(lambda[1])) : 0.0;
      const double scale = std::max({1.0, std::abs(lambda[0]), std::abs(lambda[1])});
      checks["equal_magnitudes"] = check(applies, d <= tol * scale, d);
    }
    {
      const double r = rep ? born_residual_b(*rep) : 0.0;
      checks["born_b"] = check(rep.has_value(), r <= tol, r);
    }
    {
      const bool applies = rep && rep->a_basis;
      const double r = applies ? born_residual_a(*rep) : 0.0;
      checks["born_a"] = check(applies, r <= tol, r);
    }
    {
      const bool applies = rep && rep->a_basis;
      double r = 0.0;
      bool ok = applies;
      if (applies) {
        try {
          const Decomposition d = decompose(rep->amplitude, rep->a_basis->vectors, tol);
          const Pair p = forward_probabilities(d.coefficients, rep->a_basis->transition, tol);
          r = std::max(std::abs(p[0] - stats->p_b[0]), std::abs(p[1] - stats->p_b[1]));
          ok = d.decomposable && r <= tol;
        } catch (const Error&) {
          ok = false;
        }
      }
      checks["forward_round_trip"] = check(applies, ok, r);
    }
    {
      // Basic contexts are hyperbolic only under a double stochastic transition.
      const bool basic = name == "B1" || name == "B2";
      const bool applies = usable && basic && ds;
      const double l = applies ? lambda[name == "B1" ? 0 : 1] : 0.0;
      checks["basic_context"] = check(applies, l >= 1.0 - tol, l);
    }
    for (const auto& [_, v] : checks.items()) {
      if (v["status"] == "fail") all_passed = false;
    }
    row["checks"] = std::move(checks);
    rows.push_back(std::move(row));
  }

  Json report = header("verify");
  report["tolerance"] = tol;
  report["incompatible"] = incompatible;
  report["double_stochastic"] = ds;
  report["contexts"] = std::move(rows);
  report["all_passed"] = all_passed;
  return report;
}

Json forward_report(const HyperState& v_a, const GMatrix2& v, double tol) {
  if (v_a.basis != v.source) {
    throw Error(ErrorCode::BasisMismatch,
                "state must be given in basis '" + v.source + "', got '" +
                    v_a.basis + "'");
  }
  Json report = header("forward");
  report["input"] = to_json(v_a);
  report["forward"] = to_json(forward(v_a.components, v, tol));
  return report;
}

Json simulate_report(const FiniteContextSpace& space, const SimulateOptions& opts) {
  const TrialCounts counts =
      sample(space, opts.context, opts.trials, opts.seed, opts.shards);
  RegimeOptions ro;
  if (opts.bootstrap == 0) {
    ro.method = ErrorMethod::delta;
  } else {
    ro.resamples = opts.bootstrap;
  }
  Json report = header("simulate");
  report["trials"] = opts.trials;
  report["shards"] = opts.shards;
  report["counts"] = to_json(counts);
  report["regime"] = to_json(detect_regime(counts, ro));
  return report;
}

int classify_cmd(const std::string& space_file, const std::string& context,
                 const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  return run(err, [&] {
    write(classify_report(load_space_file(space_file), context), opts, out);
    return kOk;
  });
}

int represent_cmd(const std::string& space_file, const std::string& context,
                  const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  return run(err, [&] {
    write(represent_report(load_space_file(space_file), context), opts, out);
    return kOk;
  });
}

int verify_cmd(const std::string& space_file, const CommonOptions& opts,
               std::ostream& out, std::ostream& err) {
  return run(err, [&] {
    bool all_passed = true;
    write(verify_report(load_space_file(space_file), opts.tolerance, all_passed),
          opts, out);
    return all_passed ? kOk : kChecksFailed;
  });
}

int forward_cmd(const std::string& state_file, const std::string& matrix_file,
                const CommonOptions& opts, std::ostream& out, std::ostream& err) {
  return run(err, [&] {
    const HyperState v_a = state_from_json(read_json_file(state_file));
    const GMatrix2 v = matrix_from_json(read_json_file(matrix_file));
    write(forward_report(v_a, v, opts.tolerance), opts, out);
    return kOk;
  });
}

int simulate_cmd(const SimulateOptions& sim, const CommonOptions& opts,
                 std::ostream& out, std::ostream& err) {
  return run(err, [&] {
    write(simulate_report(load_space_file(sim.space_file), sim), opts, out);
    return kOk;
  });
}

}  // namespace hyperprob::cli
