#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "declab/errors.hpp"
#include "declab/exponent_system.hpp"
#include "declab/expsum.hpp"
#include "declab/formulas.hpp"
#include "declab/simplex.hpp"
#include "json.hpp"

namespace declab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_real(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", std::clamp(digits, 1, 17), v);
  return buf;
}

Rat parse_rat_flag(const char* flag, const std::string& text) {
  try {
    return Rat::parse(text);
  } catch (const ParseError&) {
    throw UsageError(std::string(flag) + ": expected a rational p/q, got \"" + text + "\"");
  }
}

Regime pick_regime(const std::string& name, const Rat& alpha) {
  if (name == "auto") return alpha <= Rat(1, 2) ? Regime::SmallAlpha : Regime::LargeAlpha;
  return regime_from_string(name);
}

// Row values carry their type into JSON; the CSV writer renders them.
class Emitter {
 public:
  Emitter(const SweepConfig& cfg, std::vector<std::string> header, std::string schema)
      : cfg_(cfg), header_(std::move(header)), schema_(std::move(schema)) {}

  ordered_json& new_row() {
    rows_.push_back(ordered_json::object());
    return rows_.back();
  }

  void put_rat(ordered_json& row, const std::string& key, const Rat& r) const {
    if (cfg_.output == OutputKind::Csv && cfg_.decimal_rationals)
      row[key] = r.decimal(cfg_.digits);
    else
      row[key] = r.str();
  }
  void put_real(ordered_json& row, const std::string& key, double v) const {
    if (cfg_.output == OutputKind::Csv)
      row[key] = fmt_real(v, cfg_.digits);
    else
      row[key] = v;
  }

  void write(std::ostream& out) const {
    if (cfg_.output == OutputKind::Json) {
      ordered_json doc;
      doc["schema"] = schema_;
      doc["rows"] = rows_;
      out << doc.dump(2) << "\n";
      return;
    }
    for (std::size_t c = 0; c < header_.size(); ++c)
      out << (c ? "," : "") << header_[c];
    out << "\n";
    for (const ordered_json& row : rows_) {
      for (std::size_t c = 0; c < header_.size(); ++c) {
        if (c) out << ",";
        if (!row.contains(header_[c])) continue;
        out << csv_cell(row[header_[c]]);
      }
      out << "\n";
    }
  }

 private:
  static std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  }
  static std::string csv_cell(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return csv_escape(v.get<std::string>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    return csv_escape(v.dump());
  }

  const SweepConfig& cfg_;
  std::vector<std::string> header_;
  std::string schema_;
  std::vector<ordered_json> rows_;
};

void cmd_lp(const SweepConfig& cfg, std::ostream& out) {
  if (cfg.emit_program && cfg.output != OutputKind::Json)
    throw UsageError("--emit-program: requires --output json");
  Emitter em(cfg, {"alpha", "K", "regime", "optimum"}, "declab.lp/1");
  for (const Rat& alpha : cfg.alpha_list) {
    for (int K : cfg.K_list) {
      const Regime regime = pick_regime(cfg.regime, alpha);
      auto& row = em.new_row();
      em.put_rat(row, "alpha", alpha);
      row["K"] = K;
      row["regime"] = to_string(regime);
      em.put_rat(row, "optimum", optimal_exponent(alpha, K, regime));
      if (cfg.emit_program)
        row["program"] = ordered_json::parse(build_system(alpha, K, regime).program.to_json());
    }
  }
  em.write(out);
}

void cmd_lp_verify(const SweepConfig& cfg, std::ostream& out) {
  Emitter em(cfg,
             {"alpha", "K", "regime", "optimum", "certificate_bound", "closed_form", "terminal",
              "matches_closed_form", "saturating_value", "violations"},
             "declab.lp-verify/1");
  for (const Rat& alpha : cfg.alpha_list) {
    for (int K : cfg.K_list) {
      const Regime regime = pick_regime(cfg.regime, alpha);
      if (regime == Regime::KakeyaOnly)
        throw UsageError("--regime: kakeya has no certificate scheme; admissible: small, large, auto");
      auto& row = em.new_row();
      em.put_rat(row, "alpha", alpha);
      row["K"] = K;
      row["regime"] = to_string(regime);
      em.put_rat(row, "optimum", optimal_exponent(alpha, K, regime));
      const CertificateCheck chk = verify_paper_certificate(alpha, K, regime);
      em.put_rat(row, "certificate_bound", chk.bound);
      em.put_rat(row, "closed_form", chk.closed_form);
      em.put_rat(row, "terminal", chk.terminal);
      row["matches_closed_form"] = chk.matches_closed_form;
      if (regime == Regime::SmallAlpha) {
        const ExponentAssignment point = saturating_point(alpha, K);
        em.put_rat(row, "saturating_value", point.at("b"));
        ordered_json vio = ordered_json::array();
        for (const LpViolation& v : check_feasible(build_system(alpha, K, regime).program, point)) {
          ordered_json o;
          o["label"] = v.label;
          o["lhs"] = v.lhs.str();
          o["rhs"] = v.rhs.str();
          vio.push_back(o);
        }
        row["violations"] = vio;
      } else {
        row["saturating_value"] = nullptr;
        row["violations"] = ordered_json::array();
      }
    }
  }
  em.write(out);
}

void cmd_exponents(const SweepConfig& cfg, std::ostream& out) {
  Emitter em(cfg,
             {"p", "alpha", "xi", "eta", "gamma8", "phi", "gamma_p", "gamma_dec", "c_exp", "psi1",
              "rho", "a_const", "e_const"},
             "declab.exponents/1");
  for (const Rat& p : cfg.p_list) {
    if (!(p > Rat(4))) throw UsageError("--p: expected a rational > 4");
    for (const Rat& alpha : cfg.alpha_list) {
      const FormulaParams fp = make_params(p, alpha);
      auto& row = em.new_row();
      em.put_rat(row, "p", fp.p);
      em.put_rat(row, "alpha", fp.alpha);
      em.put_rat(row, "xi", fp.xi);
      em.put_rat(row, "eta", fp.eta);
      em.put_rat(row, "gamma8", fp.gamma8);
      if (fp.phi)
        em.put_rat(row, "phi", *fp.phi);
      else
        row["phi"] = nullptr;
      em.put_rat(row, "gamma_p", fp.gamma_p);
      if (fp.gamma_dec)
        em.put_rat(row, "gamma_dec", *fp.gamma_dec);
      else
        row["gamma_dec"] = nullptr;
      if (fp.c_exp)
        em.put_rat(row, "c_exp", *fp.c_exp);
      else
        row["c_exp"] = nullptr;
      em.put_rat(row, "psi1", fp.psi1);
      em.put_rat(row, "rho", fp.rho);
      em.put_rat(row, "a_const", fp.a_const);
      em.put_rat(row, "e_const", fp.e_const);
    }
  }
  em.write(out);
}

void cmd_bootstrap(const SweepConfig& cfg, std::ostream& out) {
  Emitter em(cfg, {"p", "alpha", "s", "scale", "psi", "closed", "bildec"}, "declab.bootstrap/1");
  const int s_max = cfg.K_list.empty() ? 30 : cfg.K_list.front();
  for (const Rat& p : cfg.p_list) {
    if (!(p > Rat(6))) throw UsageError("--p: expected a rational > 6 for the bootstrap");
    for (const Rat& alpha : cfg.alpha_list) {
      const Rat psi1 = gamma_p(p, alpha);
      for (const BootstrapRow& r : bootstrap_iterate(p, alpha, psi1, s_max)) {
        auto& row = em.new_row();
        em.put_rat(row, "p", p);
        em.put_rat(row, "alpha", alpha);
        row["s"] = r.s;
        em.put_rat(row, "scale", r.scale);
        em.put_rat(row, "psi", r.psi);
        em.put_rat(row, "closed", r.closed);
        em.put_rat(row, "bildec", r.bildec);
      }
    }
  }
  em.write(out);
}

Limits limits_from(const SweepConfig& cfg) {
  return Limits{cfg.size_limit, 10 * cfg.size_limit};
}

void cmd_cantor(const SweepConfig& cfg, std::ostream& out) {
  Emitter em(cfg,
             {"k", "n", "i", "alpha", "E_p", "dp_lower", "cs_lower", "sumset_card", "c_ad",
              "ratio", "theoretical_cap"},
             "declab.cantor/1");
  const Limits limits = limits_from(cfg);
  for (const CantorSpec& spec : cfg.cantor_specs) {
    for (const Rat& p : cfg.p_list) {
      if (!p.is_integer() || p.num() % 2 != 0 || p < Rat(2))
        throw UsageError("--p: cantor requires an even integer >= 2");
      const long pl = static_cast<long>(p.num().get_si());
      const CantorLevel level = build_cantor(spec, limits);
      const EnergyReport er = energy(level.points, pl, limits);
      const RegularityReport reg = check_ad_regular(level);
      const DpLowerReport dp = d_p_lower_from_energy(level, pl, limits);
      const DecLowerReport dec = empirical_dec_lower(level, p, cfg.grid);
      auto& row = em.new_row();
      row["k"] = spec.k();
      row["n"] = spec.base();
      row["i"] = spec.level();
      em.put_real(row, "alpha", spec.alpha());
      row["E_p"] = er.energy.get_str();
      em.put_real(row, "dp_lower", dp.dp_lower);
      em.put_rat(row, "cs_lower", er.cs_lower);
      row["sumset_card"] = er.support;  // the (p/2)-fold sumset is the convolution support
      em.put_rat(row, "c_ad", reg.c_ad);
      em.put_real(row, "ratio", dec.ratio);
      if (dec.theoretical_cap)
        em.put_real(row, "theoretical_cap", *dec.theoretical_cap);
      else
        row["theoretical_cap"] = nullptr;
    }
  }
  em.write(out);
}

void cmd_expsum(const SweepConfig& cfg, std::ostream& out) {
  Emitter em(cfg,
             {"k", "n", "i", "alpha", "p", "grid", "quality", "norm", "ratio", "theoretical_cap"},
             "declab.expsum/1");
  const Limits limits = limits_from(cfg);
  for (const CantorSpec& spec : cfg.cantor_specs) {
    for (const Rat& p : cfg.p_list) {
      if (p < Rat(2)) throw UsageError("--p: expected a rational >= 2");
      const CantorLevel level = build_cantor(spec, limits);
      std::int64_t grid = cfg.grid;
      if (grid <= 0) {
        std::int64_t max_abs = 0;
        for (const Vec2& f : parabola_lift(level))
          max_abs = std::max({max_abs, std::abs(f[0]), std::abs(f[1])});
        grid = default_grid(max_abs, p.dbl());
      }
      const DecLowerReport dec = empirical_dec_lower(level, p, grid);
      auto& row = em.new_row();
      row["k"] = spec.k();
      row["n"] = spec.base();
      row["i"] = spec.level();
      em.put_real(row, "alpha", spec.alpha());
      em.put_rat(row, "p", p);
      row["grid"] = grid;
      row["quality"] = dec.exact ? "exact" : "estimate";
      em.put_real(row, "norm",
                  dec.ratio * std::sqrt(static_cast<double>(level.points.size())));
      em.put_real(row, "ratio", dec.ratio);
      if (dec.theoretical_cap)
        em.put_real(row, "theoretical_cap", *dec.theoretical_cap);
      else
        row["theoretical_cap"] = nullptr;
    }
  }
  em.write(out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact exponent LPs and Cantor-set decoupling experiments"};
  app.require_subcommand(1);

  std::vector<std::string> alpha_raw, p_raw;
  std::vector<int> k_raw;
  std::vector<int> level_raw;
  std::string regime = "auto", output = "csv", alphabet_raw;
  std::int64_t base = 0, grid = 0, size_limit = 1'000'000;
  int digits = 0;
  bool emit_program = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--digits", digits, "decimal rendering precision, >= 1; opts rationals into decimals");
    sub->add_option("--size-limit", size_limit, "point-count cap, >= 1");
  };
  const auto add_alpha = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--alpha", alpha_raw, "dimension parameter, rational in (0,1), repeatable");
    if (required) opt->required();
  };
  const auto add_p = [&](CLI::App* sub) {
    sub->add_option("--p", p_raw, "moment exponent, rational, repeatable")->required();
  };
  const auto add_cantor_flags = [&](CLI::App* sub) {
    sub->add_option("--base", base, "Cantor base n, integer >= 2")->required();
    sub->add_option("--alphabet", alphabet_raw, "comma-separated digits, e.g. 0,2")->required();
    sub->add_option("--level", level_raw, "Cantor level i, integer >= 0, repeatable")->required();
    sub->add_option("--grid", grid, "quadrature grid per dimension, >= 1; 0 derives it");
  };

  CLI::App* lp = app.add_subcommand("lp", "optimal exponent over (alpha, K)");
  add_alpha(lp, true);
  lp->add_option("--K", k_raw, "scale count, integer >= 1, repeatable")->required();
  lp->add_option("--regime", regime, "constraint regime")
      ->check(CLI::IsMember({"kakeya", "small", "large", "auto"}));
  lp->add_flag("--emit-program", emit_program, "embed the LP in JSON output");
  add_common(lp);

  CLI::App* lpv = app.add_subcommand("lp-verify", "certificate and saturating-point report");
  add_alpha(lpv, true);
  lpv->add_option("--K", k_raw, "scale count, integer >= 1, repeatable")->required();
  lpv->add_option("--regime", regime, "constraint regime")
      ->check(CLI::IsMember({"small", "large", "auto"}));
  add_common(lpv);

  CLI::App* expo = app.add_subcommand("exponents", "closed-form exponent table");
  add_alpha(expo, true);
  add_p(expo);
  add_common(expo);

  CLI::App* boot = app.add_subcommand("bootstrap", "bilinear-to-linear iteration");
  add_alpha(boot, true);
  add_p(boot);
  boot->add_option("--K", k_raw, "iteration count, integer >= 1 (default 30)");
  add_common(boot);

  CLI::App* cantor = app.add_subcommand("cantor", "energy, regularity, and sumset report");
  add_cantor_flags(cantor);
  add_p(cantor);
  add_common(cantor);

  CLI::App* expsum = app.add_subcommand("expsum", "exponential-sum norms and the decoupling ratio");
  add_cantor_flags(expsum);
  add_p(expsum);
  add_common(expsum);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    SweepConfig cfg;
    cfg.regime = regime;
    cfg.grid = grid;
    cfg.emit_program = emit_program;
    cfg.output = output == "json" ? OutputKind::Json : OutputKind::Csv;
    if (digits != 0) {
      if (digits < 1) throw UsageError("--digits: expected an integer >= 1");
      cfg.digits = digits;
      cfg.decimal_rationals = true;
    }
    if (size_limit < 1) throw UsageError("--size-limit: expected an integer >= 1");
    cfg.size_limit = size_limit;
    if (grid < 0) throw UsageError("--grid: expected an integer >= 1, or 0 to derive");
    for (const std::string& a : alpha_raw) {
      const Rat v = parse_rat_flag("--alpha", a);
      if (!(v > Rat(0)) || !(v < Rat(1)))
        throw UsageError("--alpha: expected a rational in (0,1)");
      cfg.alpha_list.push_back(v);
    }
    for (const std::string& s : p_raw) cfg.p_list.push_back(parse_rat_flag("--p", s));
    for (int K : k_raw) {
      if (K < 1) throw UsageError("--K: expected an integer >= 1");
      cfg.K_list.push_back(K);
    }
    if (cantor->parsed() || expsum->parsed()) {
      if (base < 2) throw UsageError("--base: expected an integer >= 2");
      std::vector<std::int64_t> digits_list;
      std::stringstream ss(alphabet_raw);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t pos = 0;
          const long long v = std::stoll(item, &pos);
          if (pos != item.size()) throw std::invalid_argument(item);
          digits_list.push_back(v);
        } catch (const std::exception&) {
          throw UsageError("--alphabet: expected comma-separated integers in [0, base-1]");
        }
      }
      for (int lvl : level_raw) {
        if (lvl < 0) throw UsageError("--level: expected an integer >= 0");
        try {
          cfg.cantor_specs.emplace_back(base, digits_list, lvl);
        } catch (const DomainError& e) {
          throw UsageError(std::string("--alphabet: ") + e.what());
        }
      }
    }

    if (lp->parsed()) cmd_lp(cfg, out);
    if (lpv->parsed()) cmd_lp_verify(cfg, out);
    if (expo->parsed()) cmd_exponents(cfg, out);
    if (boot->parsed()) cmd_bootstrap(cfg, out);
    if (cantor->parsed()) cmd_cantor(cfg, out);
    if (expsum->parsed()) cmd_expsum(cfg, out);
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantViolation& e) {
    err << "internal invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const NotACertificate& e) {
    err << "internal invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace declab::cli
