/// @file hyperslice.cpp
/// @brief Command-line front end: parse polynomials, apply operators, run
/// decompositions and identity suites, emit text, LaTeX or JSON.
///
/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <hyperslice/hyperslice.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hyperslice;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct Globals {
  std::string algebra = "quaternion";
  std::string subspace;
  std::string format = "text";
  std::uint64_t seed = 1;
};

std::string default_selector(const std::string& algebra) {
  return algebra.rfind("clifford:", 0) == 0 ? "paravector" : "full";
}

SubspacePtr active_subspace(const Globals& g) {
  return make_subspace(g.algebra, g.subspace.empty() ? default_selector(g.algebra) : g.subspace);
}

std::vector<Rational> rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("invalid JSON in '" + path + "': " + e.what());
  }
}

template <class P>
std::string render(const P& p, const std::string& format) {
  if (format == "latex") return to_latex(p);
  if (format == "json") return to_json(p).dump();
  return to_text(p);
}

void print_poly(const CoordPoly& p, const std::string& format) {
  if (format == "json")
    std::cout << poly_document(p).dump(2) << "\n";
  else
    std::cout << render(p, format) << "\n";
}

void print_poly(const SlicePoly& f, const std::string& format) {
  if (format == "json")
    std::cout << poly_document(f).dump(2) << "\n";
  else
    std::cout << render(f, format) << "\n";
}

int print_decomposition(const Decomposition& d, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(d).dump(2) << "\n";
  } else {
    const bool tex = format == "latex";
    std::cout << "method: " << d.method << "\n";
    std::cout << "input: " << (tex ? to_latex(d.input) : to_text(d.input)) << "\n";
    if (d.center) {
      std::cout << "center:";
      for (const auto& q : *d.center) std::cout << " " << to_string(q);
      std::cout << "\n";
    }
    for (const auto& c : d.components)
      std::cout << c.role << " = " << (tex ? to_latex(c.poly) : to_text(c.poly)) << "\n";
    for (const auto& c : d.certificates)
      std::cout << "certificate [" << (c.ok ? "ok" : "FAILED") << "] " << c.name << "\n";
  }
  return d.certified() ? kOk : kVerificationFailure;
}

void print_report(const SuiteReport& r) {
  if (!r.skipped.empty()) {
    std::cout << "SKIP " << r.suite << ": " << r.skipped << "\n";
    return;
  }
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " seed=" << r.seed
            << " trials=" << r.trials << " failures=" << r.failure_count << " contexts=";
  for (std::size_t i = 0; i < r.contexts.size(); ++i) std::cout << (i ? "," : "") << r.contexts[i];
  std::cout << "\n";
  for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  for (const auto& f : r.failures)
    std::cout << "  trial " << f.trial << " [" << f.context << "] " << f.check << ": input " << f.input
              << "; expected " << f.expected << "; got " << f.got << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact slice-function computations over hypercomplex algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--algebra", g.algebra, "quaternion | octonion | clifford:<n>");
  app.add_option("--subspace", g.subspace, "full | paravector | indices:<labels> (default by algebra)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--seed", g.seed, "Random seed for sampling");

  std::function<int()> action;

  auto* apply = app.add_subcommand("apply", "Apply an operator to a polynomial");
  std::string op, poly_text;
  apply->add_option("--op", op, "cr | cr-conj | laplacian | gamma | sd | ext-even")
      ->required()
      ->check(CLI::IsMember({"cr", "cr-conj", "laplacian", "gamma", "sd", "ext-even"}));
  apply->add_option("--poly", poly_text, "Polynomial expression")->required();
  apply->callback([&] {
    action = [&] {
      const auto sub = active_subspace(g);
      if (op == "ext-even") {
        print_poly(harmonic_extension_even(parse_slice(poly_text, sub)), g.format);
        return kOk;
      }
      const CoordPoly p = parse_coord(poly_text, sub);
      CoordPoly out(sub);
      if (op == "cr") out = cr(p);
      else if (op == "cr-conj") out = cr_conj(p);
      else if (op == "laplacian") out = laplacian(p);
      else if (op == "gamma") out = spherical_dirac(p);
      else out = spherical_derivative_op(p);
      print_poly(out, g.format);
      return kOk;
    };
  });

  auto* decompose = app.add_subcommand("decompose", "Decompose a slice polynomial");
  std::string method = "zonal", from_json;
  std::vector<std::string> center;
  decompose->add_option("--method", method, "zonal | ddelta | fueter | primitive | pzd | bvp")
      ->check(CLI::IsMember(decomposition_methods()));
  decompose->add_option("--poly", poly_text, "Slice polynomial expression");
  decompose->add_option("--center", center, "Centre y in M for the local ddelta form")->delimiter(',');
  decompose->add_option("--from-json", from_json, "Re-ingest a decomposition document");
  decompose->callback([&] {
    action = [&] {
      if (!from_json.empty()) return print_decomposition(decomposition_from_json(read_json_file(from_json)), g.format);
      if (poly_text.empty()) throw Error("decompose needs --poly or --from-json");
      const SlicePoly f = parse_slice(poly_text, active_subspace(g));
      std::optional<std::vector<Rational>> c;
      if (!center.empty()) c = rationals(center);
      return print_decomposition(run_decomposition(method, f, c), g.format);
    };
  });

  auto* star = app.add_subcommand("star", "Slice (star) product of two slice polynomials");
  std::string lhs, rhs;
  star->add_option("--lhs", lhs)->required();
  star->add_option("--rhs", rhs)->required();
  star->callback([&] {
    action = [&] {
      const auto sub = active_subspace(g);
      print_poly(star_product(parse_slice(lhs, sub), parse_slice(rhs, sub)), g.format);
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run randomized identity suites");
  std::string suite = "all";
  int trials = 100;
  verify->add_option("--suite", suite, "Suite name or 'all'");
  verify->add_option("--trials", trials, "Trials per suite")->check(CLI::NonNegativeNumber);
  verify->add_flag("--list", [](std::int64_t) {
    for (const auto& n : suite_names()) std::cout << n << "\n";
    std::exit(kOk);
  }, "List suite names");
  verify->callback([&] {
    action = [&] {
      std::optional<SuiteContext> ctx;
      if (app.count("--algebra") > 0 || app.count("--subspace") > 0) {
        const auto sub = active_subspace(g);
        ctx = SuiteContext{sub->table()->spec(), sub->selector()};
      }
      std::vector<SuiteReport> reports;
      if (suite == "all")
        reports = run_all_suites(g.seed, trials, ctx);
      else
        reports.push_back(run_suite(suite, g.seed, trials, ctx));
      bool ok = true;
      Json all = Json::array();
      for (const auto& r : reports) {
        ok = ok && r.failure_count == 0;
        if (g.format == "json")
          all.push_back(to_json(r));
        else
          print_report(r);
      }
      if (g.format == "json") std::cout << all.dump(2) << "\n";
      return ok ? kOk : kVerificationFailure;
    };
  });

  auto* moments = app.add_subcommand("moments", "Sphere moment of zeta^alpha");
  std::vector<int> alpha;
  moments->add_option("--alpha", alpha, "Exponents, comma separated")->required()->delimiter(',');
  moments->callback([&] {
    action = [&] {
      const Rational v = sphere_moment(alpha);
      if (g.format == "json")
        std::cout << Json{{"kind", "moment"}, {"alpha", alpha}, {"value", to_json(v)}}.dump(2) << "\n";
      else if (g.format == "latex")
        std::cout << detail::latex_rational(v) << "\n";
      else
        std::cout << to_string(v) << "\n";
      return kOk;
    };
  });

  auto* meanvalue = app.add_subcommand("meanvalue", "Quaternionic mean value formula");
  std::vector<std::string> mv_center;
  std::string radius;
  meanvalue->add_option("--poly", poly_text)->required();
  meanvalue->add_option("--center", mv_center)->required()->delimiter(',');
  meanvalue->add_option("--radius", radius)->required();
  meanvalue->callback([&] {
    action = [&] {
      const SlicePoly f = parse_slice(poly_text, active_subspace(g));
      const MeanValueReport r = mean_value_check(f, rationals(mv_center), parse_rational(radius));
      if (g.format == "json") {
        std::cout << Json{{"kind", "meanvalue"},
                          {"value_at_center", to_json(r.value_at_center)},
                          {"sphere_average", to_json(r.sphere_average)},
                          {"correction", to_json(r.correction)},
                          {"convention", r.convention},
                          {"holds", r.holds}}
                         .dump(2)
                  << "\n";
      } else {
        auto show = [&](const AlgElement& a) { return g.format == "latex" ? to_latex(a) : to_text(a); };
        std::cout << "f(a) = " << show(r.value_at_center) << "\n"
                  << "sphere average = " << show(r.sphere_average) << "\n"
                  << "correction = " << show(r.correction) << "\n"
                  << "convention: " << r.convention << "\n"
                  << (r.holds ? "holds" : "FAILS") << "\n";
      }
      return r.holds ? kOk : kVerificationFailure;
    };
  });

  auto* table = app.add_subcommand("table", "Dump the multiplication table");
  table->callback([&] {
    action = [&] {
      const auto t = make_algebra(g.algebra);
      if (g.format == "json") {
        std::cout << table_document(*t).dump(2) << "\n";
        return kOk;
      }
      for (std::size_t a = 0; a < t->dim(); ++a)
        for (std::size_t b = 0; b < t->dim(); ++b) {
          AlgElement p(t);
          for (const auto& term : t->product(a, b)) p[term.index] = term.coeff;
          std::cout << t->label(a) << " * " << t->label(b) << " = "
                    << (g.format == "latex" ? to_latex(p) : to_text(p)) << "\n";
        }
      return kOk;
    };
  });

  auto* show = app.add_subcommand("show", "Parse and re-emit a polynomial or document");
  std::string mode = "slice";
  show->add_option("--poly", poly_text, "Polynomial expression");
  show->add_option("--mode", mode, "slice | coord")->check(CLI::IsMember({"slice", "coord"}));
  show->add_option("--from-json", from_json, "Document of kind slice, coord or decomposition");
  show->callback([&] {
    action = [&] {
      if (!from_json.empty()) {
        const Json j = read_json_file(from_json);
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "decomposition") return print_decomposition(decomposition_from_json(j), g.format);
        const auto sub = subspace_from_document(j);
        if (kind == "slice") print_poly(slice_from_json(j.at("poly"), sub), g.format);
        else if (kind == "coord") print_poly(coord_from_json(j.at("poly"), sub), g.format);
        else throw Error("cannot show a document of kind '" + kind + "'");
        return kOk;
      }
      if (poly_text.empty()) throw Error("show needs --poly or --from-json");
      const auto sub = active_subspace(g);
      if (mode == "slice") print_poly(parse_slice(poly_text, sub), g.format);
      else print_poly(parse_coord(poly_text, sub), g.format);
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  try {
    return action();
  } catch (const SelfCheckError& e) {
    std::cerr << "self-check failed: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed document: " << e.what() << "\n";
    return kUsageError;
  }
}
