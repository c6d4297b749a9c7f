// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgame/cli_commands.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "qgame/oracle.hpp"
#include "qgame/phase_analysis.hpp"

namespace qgame::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string opt_number(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string("undefined");
}

Json num(double x) {
  if (!std::isfinite(x)) return format_number(x);
  return round12(x);
}

Json r_value(const EntanglementAngle& ent) {
  const auto r = ent.r();
  return r ? num(*r) : Json("inf");
}

std::string to_string(const ContinuumCurve::Shape s) {
  switch (s) {
    case ContinuumCurve::Shape::TypeIIIArc: return "type3_arc";
    case ContinuumCurve::Shape::TypeIIISeparableLines: return "type3_lines";
    case ContinuumCurve::Shape::SumLine: return "sum_line";
    case ContinuumCurve::Shape::DiffLine: return "diff_line";
  }
  return "?";
}

std::string to_string(NoteKind k) {
  switch (k) {
    case NoteKind::MaximalEntanglementDegeneracy: return "maximal_entanglement_degeneracy";
    case NoteKind::AllStrategiesDegenerate: return "all_strategies";
    case NoteKind::NearA33Zero: return "near_a33_zero";
    case NoteKind::NearA30Zero: return "near_a30_zero";
    case NoteKind::NearSpecialS: return "near_special_s";
    case NoteKind::NearMaximalGamma: return "near_maximal_gamma";
    case NoteKind::NearSeparableGamma: return "near_separable_gamma";
    case NoteKind::Type2SingularAtMaximal: return "type2_singular_at_maximal";
  }
  return "?";
}

Json tag_list(const std::vector<DilemmaTag>& tags) {
  Json arr = Json::array();
  for (auto t : tags) arr.push_back(qgame::to_string(t));
  return arr;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += sep;
    s += parts[i];
  }
  return s;
}

std::string profile_text(const StrategyProfile& p) {
  return "(" + format_number(p.alpha1) + ", " + format_number(p.beta1) + ", " +
         format_number(p.phi) + ")";
}

}  // namespace

int cmd_classify(const GameSpec& spec, std::ostream& out) {
  const auto c = coefficients(spec.matrix);
  const auto fam = classify_family(spec.matrix);
  if (!spec.name.empty()) out << "name: " << spec.name << "\n";
  out << qgame::to_string(fam) << "; a00=" << format_number(c.a00) << "; a03=" << format_number(c.a03)
      << "; a30=" << format_number(c.a30) << "; a33=" << format_number(c.a33)
      << "; s=" << opt_number(c.s) << "; t=" << opt_number(c.t) << "; u=" << opt_number(c.u)
      << "; v=" << opt_number(c.v) << "\n";

  switch (fam.tag) {
    case FamilyTag::Degenerate_bothZero:
      out << "Degenerate: a33=0, a30=0 - all strategies are QNE at every gamma\n";
      break;
    case FamilyTag::Degenerate_a33Zero:
      out << "Degenerate: a33=0 - Type I (0,0) where a30 cos(gamma) > 0, (1,1) where "
             "a30 cos(gamma) < 0, all strategies at gamma = pi/2\n";
      break;
    case FamilyTag::Degenerate_a30Zero:
      out << "Degenerate: a30=0 - H+ = H- = a33 at every gamma\n";
      break;
    case FamilyTag::SpecialTypeIII:
      out << "Special payoffs: s=" << (fam.sigma == 0 ? "+1" : "-1")
          << " with a33<0 - a continuum of Type III equilibria at every gamma\n";
      break;
    default: break;
  }

  auto warn = [&](const char* what, double v) {
    if (std::abs(v) <= tol::kWarningBand && !near_zero(v)) {
      out << "warning: " << what << " = " << format_number(v)
          << " is within the warning band of a classification boundary\n";
    }
  };
  warn("a33", c.a33);
  warn("a30", c.a30);
  if (c.s) {
    warn("s - 1", *c.s - 1.0);
    warn("s + 1", *c.s + 1.0);
  }
  return kExitOk;
}

int cmd_analyze(const GameSpec& spec, double gamma, const Options& opt, std::ostream& out) {
  const EntanglementAngle ent(gamma);
  const auto rep = classify_dilemma_typeI(spec.matrix, ent, opt.include_rejected_typeiv);
  const auto fam = classify_family(spec.matrix);

  Json header;
  header["record"] = "header";
  header["name"] = spec.name;
  header["family"] = qgame::to_string(fam);
  header["gamma"] = num(ent.gamma());
  header["r"] = r_value(ent);
  header["all_strategies"] = rep.qne_set.all_strategies;
  header["dilemma_tags"] = tag_list(rep.tags);
  header["table_tags"] = tag_list(rep.table_tags);
  header["payoff_dominant"] = rep.payoff_dominant ? Json(*rep.payoff_dominant) : Json(nullptr);
  header["H_plus"] = num(rep.indicators.H_plus);
  header["H_minus"] = num(rep.indicators.H_minus);
  header["F"] = num(rep.indicators.F);
  header["G"] = num(rep.indicators.G);
  out << header.dump() << "\n";

  for (const auto& sol : rep.qne_set.operational(opt.include_rejected_typeiv)) {
    const auto p = resolve_phases(sol.profile, sol.kind);
    Json rec;
    rec["record"] = "qne";
    rec["label"] = sol.label();
    rec["kind"] = qgame::to_string(sol.kind);
    rec["alpha1"] = num(p.alpha1);
    rec["beta1"] = num(p.beta1);
    rec["phi"] = num(p.phi);
    rec["phi_unconstrained"] = sol.phi_unconstrained;
    rec["alpha2"] = num(*p.resolved_alpha2);
    rec["beta2"] = num(*p.resolved_beta2);
    rec["payoff_a"] = num(sol.payoff_a);
    rec["payoff_b"] = num(sol.payoff_b);
    rec["lambda_a"] = {num(sol.hessian_a.plus), num(sol.hessian_a.minus)};
    rec["lambda_b"] = {num(sol.hessian_b.plus), num(sol.hessian_b.minus)};
    rec["convexity_ok"] = sol.convexity_ok;
    rec["rejected"] = sol.rejected;
    for (const auto& [label, ok] : rep.pareto_flags) {
      if (label == sol.label()) rec["pareto_vs_corners"] = ok;
    }
    if (sol.curve) {
      Json cj;
      cj["shape"] = to_string(sol.curve->shape);
      if (sol.kind == SolutionKind::TypeIII) cj["sigma"] = sol.curve->sigma;
      cj["phi"] = num(sol.curve->phi);
      rec["curve"] = cj;
    }
    rec["dilemma_tags"] = tag_list(rep.tags);
    out << rec.dump() << "\n";
  }

  for (const auto& n : rep.qne_set.notes) {
    Json rec;
    rec["record"] = "note";
    rec["kind"] = to_string(n.kind);
    rec["message"] = n.message;
    out << rec.dump() << "\n";
  }

  if (fam.tag == FamilyTag::StagHunt) {
    const auto rd = sh_risk_dominance(spec.matrix, ent);
    Json rec;
    rec["record"] = "risk_dominance";
    rec["maximal_degenerate"] = rd.maximal_degenerate;
    if (!rd.maximal_degenerate) {
      rec["type2_exists"] = rd.type2_exists;
      rec["Q_plus"] = num(rd.Q_plus);
      rec["Q_minus"] = num(rd.Q_minus);
      rec["R_plus"] = num(rd.R_plus);
      rec["R_minus"] = num(rd.R_minus);
      rec["avg_k0"] = num(rd.avg_k0);
      rec["avg_k1"] = num(rd.avg_k1);
      rec["avg_typeII"] = num(rd.avg_typeII);
      rec["criterion_vs_11"] = num(rd.criterion_vs_11);
      rec["criterion_vs_typeII"] = num(rd.criterion_vs_typeII);
      rec["integral_avg_gaps"] = {num(rd.integral_avg_gaps.first), num(rd.integral_avg_gaps.second)};
      rec["ordering"] = to_string(rd.ordering);
      rec["integral_ordering"] = to_string(rd.integral_ordering);
    }
    out << rec.dump() << "\n";
  }
  return kExitOk;
}

std::string sweep_csv(const GameSpec& spec, const Options& opt) {
  if (spec.gammas.size() < 2) {
    throw UsageError("sweep needs at least two gamma values; use 'analyze --gamma <value>' for one");
  }
  const auto res = sweep(spec.matrix, spec.gammas, opt.include_rejected_typeiv);
  std::ostringstream os;
  os << "gamma,r,H_plus,H_minus,F,G,I00,I01,I10,I11,II,III,IV,qne,dilemmas,boundary\n";
  for (const auto& rec : res.records) {
    std::string cols[7];  // I00 I01 I10 I11 II III IV
    std::vector<std::string> labels;
    for (const auto& sol : rec.qne_set.operational(opt.include_rejected_typeiv)) {
      labels.push_back(sol.label());
      const std::string v = format_number(sol.payoff_a);
      switch (sol.kind) {
        case SolutionKind::TypeI: cols[2 * sol.k_alpha + sol.k_beta] = v; break;
        case SolutionKind::TypeII: cols[4] = v; break;
        case SolutionKind::TypeIII: cols[5] = v; break;
        case SolutionKind::TypeIVSum:
        case SolutionKind::TypeIVDiffRejected: cols[6] = v; break;
      }
    }
    if (rec.qne_set.all_strategies) labels.push_back("all_strategies");
    std::vector<std::string> tags;
    for (auto t : rec.tags) tags.push_back(qgame::to_string(t));
    std::vector<std::string> crossings;
    for (const auto& b : res.boundaries) {
      if (b.gamma_hi == rec.gamma) crossings.push_back(b.quantity);
    }
    os << format_number(rec.gamma) << ',' << (rec.r ? format_number(*rec.r) : "inf") << ','
       << format_number(rec.indicators.H_plus) << ',' << format_number(rec.indicators.H_minus)
       << ',' << format_number(rec.indicators.F) << ',' << format_number(rec.indicators.G);
    for (const auto& c : cols) os << ',' << c;
    os << ',' << join(labels, ";") << ',' << join(tags, ";") << ',' << join(crossings, ";") << '\n';
  }
  return os.str();
}

int cmd_sweep(const GameSpec& spec, const std::string& out_path, const Options& opt,
              std::ostream& out, std::ostream& err) {
  std::string csv;
  try {
    csv = sweep_csv(spec, opt);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << csv) || !f.flush()) {
    err << "error: cannot write '" << out_path << "'\n";
    return kExitInputError;
  }
  out << "wrote " << spec.gammas.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

int cmd_verify(const GameSpec& spec, double gamma, int grid_n, const Options& opt,
               const std::vector<StrategyProfile>& extra_profiles, std::ostream& out) {
  if (grid_n < 16) throw UsageError("--grid must be at least 16");
  const EntanglementAngle ent(gamma);
  const auto& a = spec.matrix;
  const auto set = enumerate_qne(a, ent);
  int failures = 0;

  auto check = [&](const std::string& what, const StrategyProfile& p) {
    const auto d = verify_qne_detail(a, ent, p, opt.tol, grid_n);
    out << what << " " << profile_text(p) << ": " << (d.ok ? "PASS" : "FAIL")
        << " gain_a=" << format_number(d.improvement_a) << " gain_b=" << format_number(d.improvement_b)
        << "\n";
    if (!d.ok) ++failures;
  };

  out << "gamma=" << format_number(ent.gamma()) << " grid=" << grid_n << " tol=" << format_number(opt.tol)
      << "\n";
  if (set.all_strategies) {
    out << "note: all strategies are QNE here; spot-checking fixed profiles\n";
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> th(0.0, kPi), ph(0.0, kTwoPi);
    for (int k = 0; k < 5; ++k) {
      const StrategyProfile p{th(rng), th(rng), ph(rng), {}, {}};
      check("all_strategies[" + std::to_string(k) + "]", p);
    }
  }
  for (const auto& sol : set.solutions) {
    if (sol.curve) {
      const auto samples = sol.curve->sample(9);
      for (std::size_t k = 0; k < samples.size(); ++k) {
        check(sol.label() + "[" + std::to_string(k) + "]", samples[k]);
      }
    } else {
      check(sol.label(), resolve_phases(sol.profile, sol.kind));
    }
  }
  for (const auto& p : extra_profiles) {
    if (!(p.alpha1 >= 0.0 && p.alpha1 <= kPi && p.beta1 >= 0.0 && p.beta1 <= kPi)) {
      throw RangeError("extra profile angles alpha1, beta1 must lie in [0, pi]");
    }
    check("extra", p);
  }

  const auto audit = completeness_audit(a, ent, grid_n);
  const bool audit_ok = audit.uncovered.empty();
  out << "completeness scan: hits=" << audit.hits
      << " max_distance_steps=" << format_number(audit.max_distance_steps) << ": "
      << (audit_ok ? "PASS" : "FAIL") << "\n";
  for (std::size_t k = 0; k < audit.uncovered.size() && k < 10; ++k) {
    out << "  uncovered " << profile_text(audit.uncovered[k]) << "\n";
  }
  if (!audit_ok) ++failures;

  if (failures == 0) {
    out << "verify: PASS\n";
    return kExitOk;
  }
  out << "verify: FAIL (" << failures << " checks)\n";
  return kExitVerifyFailed;
}

}  // namespace qgame::cli
