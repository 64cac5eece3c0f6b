#pragma once

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "kfk/kfk.hpp"
#include "kfk/serialize.hpp"

namespace kfk::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kFalsification = 3 };

/// Worker count for `sweep`: KFK_THREADS if set and positive, else 1.
inline unsigned sweep_threads() {
  if (const char* env = std::getenv("KFK_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

namespace detail {

inline void print_positions(std::ostream& os, const std::vector<std::size_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
}

inline void print_fibration(std::ostream& os, const BraidParams& params, const Slope& r,
                            const FibrationVerdict& v) {
  os << "braid " << params << " slope q*mu1 + p*lambda1 with (p,q)=(" << r.p() << ',' << r.q()
     << ")\n";
  os << "phi(x) = " << v.weight.wx << ", phi(y) = " << v.weight.wy << '\n';
  os << "max " << v.brown.max_value << " at ";
  print_positions(os, v.brown.max_positions);
  os << "; min " << v.brown.min_value << " at ";
  print_positions(os, v.brown.min_positions);
  os << '\n';
  os << "fibred: " << (v.fibred ? "yes" : "no") << ", fibre meets dV in "
     << v.boundary_components << " curves\n";
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Data goes to
/// out, diagnostics to err.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibredness of 1-bridge braid exteriors and related slope arithmetic", "kfk"};
  app.require_subcommand(1);

  std::int64_t n = 0, b = 0, t = 0, p = 0, q = 0;
  bool as_json = false;

  auto* fiber = app.add_subcommand("fiber", "Brown-criterion fibration verdict for a boundary slope");
  fiber->add_option("--n", n, "braid index")->required();
  fiber->add_option("--b", b, "bridge index")->required();
  fiber->add_option("--t", t, "twisting number")->required();
  fiber->add_option("--p", p, "winding number of the slope")->required();
  fiber->add_option("--q", q, "meridian coefficient of the slope")->required();
  fiber->add_flag("--json", as_json, "emit JSON");

  auto* rel = app.add_subcommand("relator", "print the relator of the braid exterior");
  rel->add_option("--n", n)->required();
  rel->add_option("--b", b)->required();
  rel->add_option("--t", t)->required();

  std::int64_t max_n = 12, max_slope = 15;
  std::string csv_path;
  bool no_alexander = false;
  auto* sweep = app.add_subcommand("sweep", "exhaustive fibration verification");
  sweep->add_option("--max-n", max_n, "largest braid index")->capture_default_str();
  sweep->add_option("--max-slope", max_slope, "bound on p and |q|")->capture_default_str();
  sweep->add_option("--csv", csv_path, "write per-case rows to this file ('-' for stdout)");
  sweep->add_flag("--no-alexander", no_alexander, "skip the Alexander cross-check");

  std::int64_t w = 0, m = 0;
  auto* surg = app.add_subcommand("surgery", "lens space order after cosmetic surgery");
  surg->add_option("--p", p)->required();
  surg->add_option("--q", q)->required();
  surg->add_option("--w", w, "winding number")->required();
  surg->add_option("--m", m, "surgery parameter")->required();
  surg->add_flag("--json", as_json);

  std::int64_t a1 = 1, a2 = 1, alpha1 = 1, alpha2 = 1;
  auto* orbi = app.add_subcommand("orbilens", "quotient data of a cyclic action on S^3");
  orbi->add_option("--a1", a1)->required();
  orbi->add_option("--a2", a2)->required();
  orbi->add_option("--alpha1", alpha1)->capture_default_str();
  orbi->add_option("--alpha2", alpha2)->capture_default_str();
  orbi->add_flag("--json", as_json);

  auto* slope = app.add_subcommand("slope", "slope arithmetic");
  slope->require_subcommand(1);
  std::int64_t p2 = 0, q2 = 0, bound = 1;
  auto* dist = slope->add_subcommand("dist", "distance between two slopes");
  dist->add_option("--p", p)->required();
  dist->add_option("--q", q)->required();
  dist->add_option("--p2", p2)->required();
  dist->add_option("--q2", q2)->required();
  auto* parity = slope->add_subcommand("parity", "distance to the image under the involution");
  parity->add_option("--p", p)->required();
  parity->add_option("--q", q)->required();
  auto* clique = slope->add_subcommand("clique", "largest set of pairwise close slopes");
  clique->add_option("--bound", bound)->required();

  std::int64_t u = 0, v = 0, m_max = 0;
  auto* cone = app.add_subcommand("cone", "fibre classes approximating a ray");
  cone->add_option("--u", u)->required();
  cone->add_option("--v", v)->required();
  cone->add_option("--n", n)->required();
  cone->add_option("--m-max", m_max)->required();

  auto* alex = app.add_subcommand("alexander", "specialized Alexander polynomial");
  alex->add_option("--n", n)->required();
  alex->add_option("--b", b)->required();
  alex->add_option("--t", t)->required();
  alex->add_option("--p", p)->required();
  alex->add_option("--q", q)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*fiber) {
      const BraidParams params(n, b, t);
      const Slope r(p, q);
      const auto verdict = evaluate_fibration(params, r);
      if (as_json) {
        json j = document(verdict);
        j["params"] = {{"n", params.n()}, {"b", params.b()}, {"t", params.t()}};
        j["slope"] = {{"p", r.p()}, {"q", r.q()}};
        out << j.dump() << '\n';
      } else {
        detail::print_fibration(out, params, r, verdict);
      }
      if (!verdict.fibred) {
        err << "Falsification: Brown criterion failed on admissible input\n";
        return kFalsification;
      }
    } else if (*rel) {
      out << relator(BraidParams(n, b, t)).str() << '\n';
    } else if (*sweep) {
      SweepConfig cfg;
      cfg.max_n = max_n;
      cfg.max_slope = max_slope;
      cfg.threads = sweep_threads();
      cfg.check_alexander = !no_alexander;
      const auto summary = run_sweep(cfg);
      if (csv_path == "-") {
        write_csv(out, summary);
      } else if (!csv_path.empty()) {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) {
          err << "cannot open " << csv_path << '\n';
          return kUsageError;
        }
        write_csv(f, summary);
      }
      std::ostream& report = csv_path == "-" ? err : out;
      report << "braids " << summary.braids << ", cases " << summary.cases << ", fibred "
             << summary.fibred << ", falsifications " << summary.falsifications
             << ", skipped (zero weight) " << summary.skipped_zero_weight << '\n';
      report << "mixed-sign cases " << summary.mixed_sign_cases << ", localization violations "
             << summary.localization_violations << ", mod-n violations "
             << summary.modular_violations << ", Fox identity violations "
             << summary.fox_identity_violations << '\n';
      if (cfg.check_alexander) {
        report << "Alexander monicity agrees with Brown in " << summary.alexander_agreements << " of "
               << summary.alexander_checked << " cases\n";
      }
      if (summary.falsifications || summary.localization_violations ||
          summary.modular_violations || summary.fox_identity_violations) {
        err << "Falsification: sweep found counterexamples\n";
        return kFalsification;
      }
    } else if (*surg) {
      const auto res = cosmetic_surgery_lens({p, q, w, m});
      if (as_json) {
        out << document(res).dump() << '\n';
      } else {
        out << res.p_prime << '\n';
      }
    } else if (*orbi) {
      const auto data = quotient_data({a1, alpha1, a2, alpha2});
      if (as_json) {
        out << document(data).dump() << '\n';
      } else {
        out << "n " << data.n << " abar1 " << data.abar1 << " abar2 " << data.abar2
            << " base_order " << data.base_order << '\n';
      }
    } else if (*slope) {
      if (*dist) {
        out << distance(Slope(p, q), Slope(p2, q2)) << '\n';
      } else if (*parity) {
        out << involution_distance(Slope(p, q)) << '\n';
      } else if (*clique) {
        const auto res = max_close_clique(bound);
        out << res.size;
        for (const auto& s : res.witness) out << ' ' << s;
        out << '\n';
      }
    } else if (*cone) {
      out << "m,c1,c2,error\n";
      for (const auto& a : approximate_fibre_classes({u, v}, n, m_max)) {
        out << a.m << ',' << a.cls.c1 << ',' << a.cls.c2 << ',' << a.error << '\n';
      }
    } else if (*alex) {
      const BraidParams params(n, b, t);
      const WeightHom hom = weight_for_slope(params, Slope(p, q));
      const auto poly = alexander_specialized(relator(params), hom);
      out << "polynomial " << poly.pretty() << '\n';
      out << "terms " << poly.str() << '\n';
      out << "monic " << (!poly.is_zero() && monic_check(poly) ? "true" : "false") << '\n';
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::Falsification ? kFalsification : kDomainError;
  }
  return kOk;
}

}  // namespace kfk::cli
