#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "arctube/notation.hpp"
#include "arctube/serialize.hpp"
#include "arctube/triangulation.hpp"
#include "arctube/tubes.hpp"

namespace arctube::cli {

/// Raised by handlers for errors in how the tool was invoked, as opposed to
/// domain errors in the data. Reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct ArcOptions {
  std::string arc;
  std::string arc2;
  int m = 0;
  std::string notation = "canonical";

  std::optional<int> m_opt() const { return m > 0 ? std::optional<int>(m) : std::nullopt; }
};

struct TubeOptions {
  std::string which;
  int m = 0;
  int levels = 0;
  std::string format = "text";
  std::string notation = "canonical";
};

struct VerifyOptions {
  int levels = 10;
  int m = 0;
};

struct QuiverOptions {
  std::string file;
  std::string format = "json";
};

inline std::string peripheral_label(const PeripheralArc& a, const std::string& notation, int m) {
  if (notation == "gamma") {
    if (m <= 0) throw UsageError("--notation gamma needs --m");
    return format_gamma(a, m);
  }
  return format(a);
}

inline std::string run_normalize(const ArcOptions& o) {
  const ParsedArc parsed = parse_arc(o.arc, o.m_opt());
  if (const auto* raw = std::get_if<RawInteriorArc>(&parsed)) {
    if (o.notation == "gamma") throw UsageError("--notation gamma applies to peripheral arcs");
    return format(normalize(*raw)) + "\n";
  }
  return peripheral_label(std::get<PeripheralArc>(parsed), o.notation, o.m) + "\n";
}

inline std::string run_tau(const ArcOptions& o) {
  const ParsedArc parsed = parse_arc(o.arc, o.m_opt());
  if (const auto* raw = std::get_if<RawInteriorArc>(&parsed)) {
    if (o.notation == "gamma") throw UsageError("--notation gamma applies to peripheral arcs");
    return format(normalize(*raw).tau()) + "\n";
  }
  if (o.m <= 0) throw UsageError("tau on a peripheral arc needs --m");
  return peripheral_label(tau_peripheral(std::get<PeripheralArc>(parsed), o.m), o.notation, o.m) +
         "\n";
}

/// Returns the printed verdict and the exit code (0 equal, 1 different).
inline std::pair<std::string, int> run_equiv(const ArcOptions& o) {
  const ParsedArc pa = parse_arc(o.arc, o.m_opt());
  const ParsedArc pb = parse_arc(o.arc2, o.m_opt());
  bool same = false;
  if (const auto* ra = std::get_if<RawInteriorArc>(&pa)) {
    if (const auto* rb = std::get_if<RawInteriorArc>(&pb)) same = equivalent(*ra, *rb);
  } else if (const auto* qa = std::get_if<PeripheralArc>(&pa)) {
    if (const auto* qb = std::get_if<PeripheralArc>(&pb)) same = *qa == *qb;
  }
  return {same ? "true\n" : "false\n", same ? 0 : 1};
}

inline std::string tube_output(const TubeOptions& o) {
  StringWindow sw;
  if (o.which == "t1") {
    if (o.m < 2) throw UsageError("tube t1 needs --m (at least 2)");
    const auto w = build_t1(o.m, o.levels);
    const std::string title =
        "t1 m=" + std::to_string(o.m) + " levels=" + std::to_string(o.levels);
    if (o.notation == "gamma")
      sw = string_window(w, [&](const PeripheralArc& a) { return format_gamma(a, o.m); }, title);
    else
      sw = string_window(w, [](const PeripheralArc& a) { return format(a); }, title);
  } else {
    if (o.notation == "gamma") throw UsageError("--notation gamma applies to t1 windows");
    const int which = o.which == "gamma0" ? 0 : 1;
    const auto w = build_gamma(which, o.levels);
    sw = string_window(w, [](const InteriorArc& a) { return format(a); },
                       o.which + " levels=" + std::to_string(o.levels));
  }
  if (o.format == "text") return window_text(sw);
  if (o.format == "dot") return window_dot(sw);
  return window_json(sw).dump(2) + "\n";
}

inline std::pair<std::string, int> run_verify(const VerifyOptions& o) {
  if (o.levels < 2) throw UsageError("--levels must be at least 2");
  VerificationReport rep = verify_theorem(o.levels);
  std::vector<int> ms;
  if (o.m > 0) ms.push_back(o.m);
  else
    for (int m = 2; m <= 10; ++m) ms.push_back(m);
  for (int m : ms) {
    const VerificationReport t1 = verify_t1(m, o.levels);
    for (const CheckResult& c : t1.checks) rep.add(c.name, c.passed, c.detail);
  }
  std::ostringstream os;
  int passed = 0;
  for (const CheckResult& c : rep.checks) {
    os << (c.passed ? "ok: " : "FAIL: ") << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
    passed += c.passed ? 1 : 0;
  }
  os << "summary: " << passed << "/" << rep.checks.size() << " checks passed\n";
  return {os.str(), rep.ok ? 0 : 1};
}

inline std::string run_quiver_from_triangulation(const QuiverOptions& o) {
  std::ifstream in(o.file);
  if (!in) throw std::runtime_error("cannot open " + o.file);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw TriangulationError("triangulation JSON: " + std::string(e.what()));
  }
  const Quiver<int> q = quiver_from_triangulation(triangulation_from_json(j));
  if (o.format == "dot") return emit_dot(q);
  if (o.format == "text") return quiver_text(q);
  return quiver_json(q).dump(2) + "\n";
}

inline void add_tube_options(CLI::App* sub, TubeOptions& o, bool with_format) {
  sub->add_option("which", o.which, "tube to build")
      ->required()
      ->check(CLI::IsMember({"t1", "gamma0", "gamma1"}));
  sub->add_option("-m,--m", o.m, "number of boundary marked points (t1 only)");
  sub->add_option("-l,--levels", o.levels, "window height")
      ->required()
      ->check(CLI::PositiveNumber);
  if (with_format)
    sub->add_option("-f,--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "dot", "json"}));
  sub->add_option("--notation", o.notation, "label notation for peripheral arcs")
      ->check(CLI::IsMember({"canonical", "gamma"}));
}

inline void add_quiver_options(CLI::App* sub, QuiverOptions& o, bool with_format) {
  sub->add_option("file", o.file, "triangulation JSON file")->required();
  if (with_format)
    sub->add_option("-f,--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
}

}  // namespace detail

/// Runs the command line given by args (without the program name), writing
/// results to out and diagnostics to err. Returns the exit code: 0 on
/// success, 1 for domain errors or a negative verdict, 2 for usage errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"arcs and tubes of the twice-punctured disk"};
  app.name("arctube");
  app.require_subcommand(1);

  detail::ArcOptions norm_opts;
  CLI::App* norm = app.add_subcommand("normalize", "rewrite an arc in canonical form");
  norm->add_option("arc", norm_opts.arc, "arc notation")->required();
  norm->add_option("-m,--m", norm_opts.m, "number of boundary marked points");
  norm->add_option("--notation", norm_opts.notation, "output notation for peripheral arcs")
      ->check(CLI::IsMember({"canonical", "gamma"}));

  detail::ArcOptions equiv_opts;
  CLI::App* equiv = app.add_subcommand("equiv", "decide whether two notations denote the same arc");
  equiv->add_option("a", equiv_opts.arc, "first arc")->required();
  equiv->add_option("b", equiv_opts.arc2, "second arc")->required();
  equiv->add_option("-m,--m", equiv_opts.m, "number of boundary marked points");

  detail::ArcOptions tau_opts;
  CLI::App* tau = app.add_subcommand("tau", "apply the Auslander-Reiten translate");
  tau->add_option("arc", tau_opts.arc, "arc notation")->required();
  tau->add_option("-m,--m", tau_opts.m, "number of boundary marked points");
  tau->add_option("--notation", tau_opts.notation, "output notation for peripheral arcs")
      ->check(CLI::IsMember({"canonical", "gamma"}));

  detail::TubeOptions tube_opts;
  CLI::App* tube = app.add_subcommand("tube", "generate a tube window");
  detail::add_tube_options(tube, tube_opts, true);

  detail::VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand("verify", "run the structural tube checks");
  verify->add_option("-l,--levels", verify_opts.levels, "window height (default 10)");
  verify->add_option("-m,--m", verify_opts.m, "check a single boundary count instead of 2..10");

  detail::QuiverOptions quiver_opts;
  CLI::App* quiver =
      app.add_subcommand("quiver-from-triangulation", "build the quiver of a triangulation");
  detail::add_quiver_options(quiver, quiver_opts, true);

  CLI::App* render = app.add_subcommand("render", "emit DOT for a tube window or a triangulation quiver");
  render->require_subcommand(1);
  detail::TubeOptions render_tube_opts;
  CLI::App* render_tube = render->add_subcommand("tube", "render a tube window");
  detail::add_tube_options(render_tube, render_tube_opts, false);
  detail::QuiverOptions render_quiver_opts;
  CLI::App* render_quiver =
      render->add_subcommand("quiver-from-triangulation", "render the quiver of a triangulation");
  detail::add_quiver_options(render_quiver, render_quiver_opts, false);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (norm->parsed()) {
      out << detail::run_normalize(norm_opts);
      return 0;
    }
    if (equiv->parsed()) {
      const auto [text, code] = detail::run_equiv(equiv_opts);
      out << text;
      return code;
    }
    if (tau->parsed()) {
      out << detail::run_tau(tau_opts);
      return 0;
    }
    if (tube->parsed()) {
      out << detail::tube_output(tube_opts);
      return 0;
    }
    if (verify->parsed()) {
      const auto [text, code] = detail::run_verify(verify_opts);
      out << text;
      return code;
    }
    if (quiver->parsed()) {
      out << detail::run_quiver_from_triangulation(quiver_opts);
      return 0;
    }
    if (render->parsed()) {
      if (render_tube->parsed()) {
        render_tube_opts.format = "dot";
        out << detail::tube_output(render_tube_opts);
      } else if (render_quiver->parsed()) {
        render_quiver_opts.format = "dot";
        out << detail::run_quiver_from_triangulation(render_quiver_opts);
      }
      return 0;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace arctube::cli
