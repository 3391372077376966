#include "glc/cli.hpp"

#include "glc/bsdinv.hpp"
#include "glc/heights.hpp"
#include "glc/monodromy.hpp"
#include "glc/points_descent.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

namespace glc {

namespace {

using ojson = nlohmann::ordered_json;

std::string dec(const bigint& x) { return x.str(); }

ojson rat(const bigrat& x) {
  return ojson{{"num", dec(numerator(x))}, {"den", dec(denominator(x))}};
}

ojson poly(const std::vector<bigint>& coeffs) {
  ojson arr = ojson::array();
  for (const bigint& c : coeffs) arr.push_back(dec(c));
  return arr;
}

struct Options {
  int64_t p = 0, q = 0;
  int r = 0, d = 0;
  int64_t ell = 0;
  int max_n = 0;
  bool csv = false;
  std::string cache_dir;
  int64_t field_cap = int64_t(1) << 22;
};

struct Instance {
  int64_t p = 0, q = 0;
  int r = 0, d = 0;
  int nu = 0;  // 0 when d != p^nu + 1
  bool r_divides_d = false;
  bool d_is_p_nu_plus_1 = false;
  bool d_divides_q_minus_1 = false;
};

Instance resolve_instance(const Options& o, bool need_q) {
  Instance I;
  I.r = o.r;
  I.d = o.d;
  if (need_q) {
    if (o.q <= 1) throw std::domain_error("q must be a prime power >= 2");
    auto [p0, a] = split_prime_power(o.q);
    if (o.p != 0 && o.p != p0)
      throw std::domain_error("q is not a power of p (q = " + std::to_string(o.q) +
                              ", p = " + std::to_string(o.p) + ")");
    I.p = p0;
    I.q = o.q;
  } else {
    I.p = o.p;
    I.q = o.q;
  }
  if (I.p != 0 && I.r > 0 && I.d > 0 && (I.r % I.p == 0 || I.d % I.p == 0))
    throw std::domain_error("p must not divide r*d");
  if (I.r > 0 && I.d > 0) I.r_divides_d = I.d % I.r == 0;
  if (I.p >= 2 && I.d >= 2) {
    int64_t pw = 1;
    for (int nu = 1; nu < 62; ++nu) {
      if (pw > (int64_t(I.d) - 1) / I.p) break;
      pw *= I.p;
      if (pw + 1 == I.d) {
        I.nu = nu;
        I.d_is_p_nu_plus_1 = true;
        break;
      }
    }
  }
  if (I.q >= 2 && I.d >= 1) I.d_divides_q_minus_1 = (I.q - 1) % I.d == 0;
  return I;
}

ojson instance_block(const Instance& I, int64_t ell = 0) {
  ojson j;
  if (I.p) j["p"] = I.p;
  if (I.q) j["q"] = I.q;
  if (I.r) j["r"] = I.r;
  if (I.d) j["d"] = I.d;
  if (I.nu) j["nu"] = I.nu;
  if (ell) j["ell"] = ell;
  ojson flags;
  flags["r_divides_d"] = I.r_divides_d;
  flags["d_is_p_nu_plus_1"] = I.d_is_p_nu_plus_1;
  flags["d_divides_q_minus_1"] = I.d_divides_q_minus_1;
  j["flags"] = flags;
  return j;
}

FieldRegistry make_registry(const Options& o) {
  std::string dir = o.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("GLC_CACHE_DIR")) dir = env;
  return FieldRegistry(o.field_cap, dir);
}

// ---- subcommand bodies ----------------------------------------------------

void run_lfunction(const Options& o, ojson& results, ojson& checks, std::ostream& csv) {
  Instance I = resolve_instance(o, true);
  FieldRegistry reg = make_registry(o);
  LPoly L = closed_form_L(reg, I.q, I.d, I.r);
  int64_t deg = l_degree(I.d, I.r);
  int N = std::max<int>(o.max_n, int(deg));
  LPoly B = brute_force_L(reg, I.q, I.d, I.r, N);

  bool dual = true;
  for (size_t k = 0; k < B.coeffs.size(); ++k) {
    bigint closed = k < L.coeffs.size() ? L.coeffs[k] : bigint(0);
    dual = dual && closed == B.coeffs[k];
  }
  results["L"] = poly(L.coeffs);
  results["degree"] = L.degree();
  results["orbit_count"] = orbit_decomposition(I.q, I.d, I.r).orbits.size();
  checks["dual_path_equal"] = dual;
  checks["degree_law"] = int64_t(L.degree()) == deg;

  if (o.csv) {
    csv << "n,coefficient\n";
    for (size_t k = 0; k < L.coeffs.size(); ++k) csv << k << "," << dec(L.coeffs[k]) << "\n";
  }
}

void run_rank(const Options& o, ojson& results, ojson& checks, ojson& notes) {
  Instance I = resolve_instance(o, true);
  FieldRegistry reg = make_registry(o);
  RankInfo ri = analytic_rank(closed_form_L(reg, I.q, I.d, I.r));
  results["rho"] = ri.rho;
  results["leading"] = rat(ri.leading);
  try {
    int64_t rf = rank_formula(I.q, I.d, I.r);
    results["rank_formula"] = rf;
    checks["rank_concordance"] = rf == ri.rho;
  } catch (const std::exception& e) {
    notes.push_back(std::string("rank_formula inapplicable: ") + e.what());
  }
}

void run_module(const Options& o, ojson& results, ojson& checks, std::ostream& csv) {
  if (o.d < 3 || o.r < 2 || o.d % o.r != 0)
    throw std::domain_error("module: needs r | d with d >= 3, r >= 2");
  ModuleStructure M = module_structure(o.d, o.r);
  ojson tor = ojson::array();
  bigint order = 1;
  for (const bigint& t : M.torsion) {
    tor.push_back(dec(t));
    order *= t;
  }
  results["torsion"] = tor;
  results["torsion_order"] = dec(order);
  results["unit_factor_count"] = M.unit_factor_count;
  results["free_rank"] = int((o.r - 1) * (o.d - 2));
  bigint r3 = bigint(o.r) * o.r * o.r;
  checks["torsion_order_r3"] = order == r3;
  checks["free_rank"] = int(M.free_basis.size()) == (o.r - 1) * (o.d - 2);
  checks["torsion_identities"] = check_torsion_identities(o.d, o.r);

  if (o.csv) {
    csv << "k,invariant_factor\n";
    for (size_t k = 0; k < M.torsion.size(); ++k) csv << k << "," << dec(M.torsion[k]) << "\n";
  }
}

void run_heights(const Options& o, ojson& results, ojson& checks, std::ostream& csv) {
  if (o.d < 3 || o.r < 2 || o.d % o.r != 0)
    throw std::domain_error("heights: needs r | d with d >= 3, r >= 2");
  results["disc_ideal"] = dec(disc_ideal(o.d, o.r));
  results["det_W_mod_torsion"] = rat(disc_W_mod_torsion(o.d, o.r));
  results["det_V_mod_torsion"] = rat(disc_V_mod_torsion(o.d, o.r));
  checks["proportionality"] = proportionality_check(o.d, o.r);
  if (o.p >= 2) results["constant_regime"] = height_regime(o.p, o.d);

  if (o.csv) {
    csv << "i,j,num,den\n";
    HeightTable H = height_table(o.d, o.r);
    for (int j = 0; j < o.r; ++j)
      for (int i = 0; i < o.d; ++i) {
        bigrat h = H.at(i, j);
        csv << i << "," << j << "," << dec(numerator(h)) << "," << dec(denominator(h)) << "\n";
      }
  }
}

void run_descent(const Options& o_in, ojson& results, ojson& checks) {
  Options o = o_in;
  if (o.p < 2 && o.q >= 2) o.p = split_prime_power(o.q).first;
  if (o.p < 2) throw std::domain_error("descent: needs --p or --q");
  int nu = 1;
  if (o.d > 0) {
    Instance I = resolve_instance(o, false);
    if (!I.d_is_p_nu_plus_1)
      throw std::domain_error("descent: needs d = p^nu + 1 for some nu >= 1");
    nu = I.nu;
  }
  FieldRegistry reg = make_registry(o);
  DescentInstance inst = make_descent_instance(reg, o.p, nu, o.r);
  results["d"] = inst.d;
  results["nu"] = nu;
  results["ambient_q"] = inst.F->q;
  DescentRank dr = descent_rank_bound(inst);
  results["zeta_rank"] = dr.zeta_rank;
  results["z_rank"] = dr.z_rank;
  results["conditional"] = dr.conditional;
  checks["pr_identity"] = dr.pr_identity;
  checks["torsion_image_independent"] = dr.torsion_independent;
  checks["vanishing_table"] = vanishing_checks(inst);
  checks["torsion_consistent"] = torsion_consistency(inst);
  bool norms = norm_relation_ok(inst, xT_q1(inst));
  for (int i = 0; i < inst.d; ++i) norms = norms && norm_relation_ok(inst, xT_point(inst, i, 0));
  checks["norm_relation"] = norms;
}

void run_bsd(const Options& o, ojson& results, ojson& checks) {
  Instance I = resolve_instance(o, true);
  if (!I.d_is_p_nu_plus_1) throw std::domain_error("bsd: needs d = p^nu + 1 for some nu >= 1");
  if (!I.r_divides_d) throw std::domain_error("bsd: needs r | d");
  if (!I.d_divides_q_minus_1) throw std::domain_error("bsd: needs d | q - 1");
  BsdReport rep = bsd_consistency(I.p, I.nu, I.q, I.d, I.r);
  results["rho"] = rep.rho;
  results["leading"] = rat(rep.m_value);
  results["tau"] = rat(rep.tau);
  results["det_V_mod_torsion"] = rat(rep.det_v);
  results["torsion_order"] = dec(rep.tor_order);
  results["sha_index_ratio"] = rat(rep.ratio);
  results["integrality_quantity"] = dec(integrality_quantity(I.d, I.r));
  results["conductor_degree"] = conductor_degree_check(I.d, I.r);
  checks["bsd_identity"] = rep.ok;
  checks["sha_trivial_over_Kd"] = I.q == int64_t(I.d - 1) * (I.d - 1) ? rep.ratio == 1 : true;
}

void run_monodromy(const Options& o, ojson& results, ojson& checks, std::ostream& csv) {
  if (o.r < 2) throw std::domain_error("monodromy: needs --r >= 2");
  if (o.ell < 2) throw std::domain_error("monodromy: needs --ell");
  auto levels = lambda_decomposition(o.r, o.ell);
  ojson larr = ojson::array();
  for (const LambdaPrime& P : levels) {
    ojson row;
    row["level"] = P.level;
    row["count"] = P.count;
    row["residue_degree"] = P.residue_degree;
    row["plus_count"] = P.plus_count;
    row["plus_residue_degree"] = P.plus_residue_degree;
    row["split_type"] = P.split_type == SplitType::inert ? "inert" : "split";
    larr.push_back(row);
  }
  results["lambda_levels"] = larr;
  MonodromyPrediction M = predicted_monodromy(o.r, o.ell);
  results["structure"] = M.structure;
  results["order"] = dec(M.order);
  ojson farr = ojson::array();
  for (const bigint& f : M.factors) farr.push_back(dec(f));
  results["factors"] = farr;
  if (o.ell != 3 || o.r % 3 != 0) results["flambda_f3_count"] = flambda_f3_count(o.r);
  results["torsion_vanishing_abelian"] = torsion_vanishing(o.r, o.ell, ExtensionClass::abelian);
  results["torsion_vanishing_solvable"] = torsion_vanishing(o.r, o.ell, ExtensionClass::solvable);
  results["refined_criterion"] = new_torsion_refinement(o.r, o.ell);
  ojson dims;
  int dim_sum = 0;
  for (auto [s, dim] : new_part_dimensions(o.r)) {
    dims[std::to_string(s)] = dim;
    dim_sum += dim;
  }
  results["new_part_dimensions"] = dims;
  int degree_total = 0;
  for (const LambdaPrime& P : levels) degree_total += P.count * P.residue_degree;
  checks["degree_bookkeeping"] = degree_total == o.r - 1;
  checks["dimensions_sum_to_genus"] = dim_sum == o.r - 1;

  if (o.csv) {
    csv << "level,count,residue_degree,plus_count,plus_residue_degree,split_type\n";
    for (const LambdaPrime& P : levels)
      csv << P.level << "," << P.count << "," << P.residue_degree << "," << P.plus_count << ","
          << P.plus_residue_degree << "," << (P.split_type == SplitType::inert ? "inert" : "split")
          << "\n";
  }
}

void run_report(const Options& o, ojson& results, ojson& checks, ojson& notes) {
  Instance I = resolve_instance(o, true);
  std::ostringstream sink;
  Options sub = o;
  sub.csv = false;

  {
    ojson res, chk;
    run_lfunction(sub, res, chk, sink);
    results["lfunction"] = res;
    for (auto& [k, v] : chk.items()) checks["lfunction." + k] = v;
  }
  {
    ojson res, chk;
    run_rank(sub, res, chk, notes);
    results["rank"] = res;
    for (auto& [k, v] : chk.items()) checks["rank." + k] = v;
  }
  if (I.r_divides_d && I.d >= 3) {
    ojson res, chk;
    run_module(sub, res, chk, sink);
    results["module"] = res;
    for (auto& [k, v] : chk.items()) checks["module." + k] = v;

    ojson hres, hchk;
    run_heights(sub, hres, hchk, sink);
    results["heights"] = hres;
    for (auto& [k, v] : hchk.items()) checks["heights." + k] = v;
  } else {
    notes.push_back("module/heights skipped: needs r | d with d >= 3");
  }
  if (I.r_divides_d && I.d_is_p_nu_plus_1 && I.d_divides_q_minus_1 && I.d >= 3) {
    ojson res, chk;
    run_bsd(sub, res, chk);
    results["bsd"] = res;
    for (auto& [k, v] : chk.items()) checks["bsd." + k] = v;
  } else {
    notes.push_back("bsd skipped: needs r | d, d = p^nu + 1 and d | q - 1");
  }
  bool r_odd_prime = o.r >= 3 && o.r % 2 == 1;
  for (int f = 3; f * f <= o.r && r_odd_prime; f += 2) r_odd_prime = o.r % f != 0;
  if (r_odd_prime && I.d_is_p_nu_plus_1 && I.r_divides_d) {
    ojson res, chk;
    run_descent(sub, res, chk);
    results["descent"] = res;
    for (auto& [k, v] : chk.items()) checks["descent." + k] = v;
  } else {
    notes.push_back("descent skipped: needs r an odd prime dividing d = p^nu + 1");
  }
  if (o.ell >= 2) {
    ojson res, chk;
    run_monodromy(sub, res, chk, sink);
    results["monodromy"] = res;
    for (auto& [k, v] : chk.items()) checks["monodromy." + k] = v;
  }
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"arithmetic of Jacobians of y^r = x^(r-1)(x+1)(x+t) over F_q(t^(1/d))"};
  app.require_subcommand(1);

  Options o;
  bool json_flag = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "characteristic");
    sub->add_option("--q", o.q, "constant field size");
    sub->add_option("--r", o.r, "exponent r of the curve");
    sub->add_option("--d", o.d, "Kummer degree d");
    sub->add_option("--ell", o.ell, "torsion prime for monodromy");
    sub->add_option("--max-n", o.max_n, "series truncation override");
    sub->add_flag("--json", json_flag, "JSON output (default)");
    sub->add_flag("--csv", o.csv, "CSV output (tabular subcommands)");
    sub->add_option("--cache-dir", o.cache_dir, "field table cache directory");
    sub->add_option("--field-cap", o.field_cap, "largest field table size");
  };
  static const std::pair<const char*, const char*> kSubcommands[] = {
      {"lfunction", "L-function coefficients, two independent ways"},
      {"rank", "analytic rank and the rank formula"},
      {"heights", "height pairing lattice and its determinants"},
      {"module", "Mordell-Weil group as a module over the group ring"},
      {"descent", "descent map images and the resulting rank bound"},
      {"bsd", "local invariants and the BSD identity"},
      {"monodromy", "mod-ell monodromy and torsion vanishing"},
      {"report", "every applicable section for one instance"},
  };
  for (auto [name, desc] : kSubcommands) add_common(app.add_subcommand(name, desc));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  ojson report;
  report["schema"] = 1;
  report["command"] = cmd;
  ojson results = ojson::object();
  ojson checks = ojson::object();
  ojson notes = ojson::array();
  std::ostringstream csv;

  try {
    if (cmd == "lfunction") {
      report["instance"] = instance_block(resolve_instance(o, true));
      run_lfunction(o, results, checks, csv);
    } else if (cmd == "rank") {
      report["instance"] = instance_block(resolve_instance(o, true));
      run_rank(o, results, checks, notes);
    } else if (cmd == "module") {
      report["instance"] = instance_block(resolve_instance(o, false));
      run_module(o, results, checks, csv);
    } else if (cmd == "heights") {
      report["instance"] = instance_block(resolve_instance(o, false));
      run_heights(o, results, checks, csv);
    } else if (cmd == "descent") {
      report["instance"] = instance_block(resolve_instance(o, false));
      run_descent(o, results, checks);
    } else if (cmd == "bsd") {
      report["instance"] = instance_block(resolve_instance(o, true));
      run_bsd(o, results, checks);
    } else if (cmd == "monodromy") {
      report["instance"] = instance_block(resolve_instance(o, false), o.ell);
      run_monodromy(o, results, checks, csv);
    } else {
      report["instance"] = instance_block(resolve_instance(o, true), o.ell);
      run_report(o, results, checks, notes);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (!notes.empty()) results["annotations"] = notes;
  report["results"] = results;
  report["checks"] = checks;

  bool all_pass = true;
  for (auto& [k, v] : checks.items()) all_pass = all_pass && v.is_boolean() && v.get<bool>();

  if (o.csv) {
    std::string table = csv.str();
    if (table.empty()) {
      err << "usage error: --csv is only available for lfunction, heights, module, monodromy\n";
      return 2;
    }
    out << table;
  } else {
    out << report.dump(2) << "\n";
  }
  return all_pass ? 0 : 1;
}

}  // namespace glc
