#include <compbal/compbal.hpp>

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using compbal::BigInt;
using compbal::CompositionPoly;
using compbal::PartSet;
using compbal::TableLimits;
using json = nlohmann::json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json parts_json(const PartSet& s) { return json(s.parts); }

json dist_json(const compbal::ResidueDistribution& d) {
  json out;
  out["q"] = d.q;
  out["total"] = d.total.str();
  json counts = json::array();
  for (const auto& c : d.counts) counts.push_back(c.str());
  out["counts"] = counts;
  if (d.has_probs()) {
    json probs = json::array();
    for (const auto& p : d.probs) probs.push_back(compbal::to_string(p));
    out["probs"] = probs;
  }
  return out;
}

json root_report_json(const compbal::RootReport& r) {
  json out;
  out["alpha"] = fmt_double(r.alpha);
  out["beta"] = fmt_double(r.beta);
  out["gap_holds"] = r.gap_holds;
  out["gap_ratio"] = fmt_double(r.gap_ratio);
  out["q"] = r.q;
  out["tolerance"] = fmt_double(r.tolerance);
  json by_t = json::array();
  for (const auto& roots : r.roots_by_t) {
    json list = json::array();
    for (const auto& root : roots) {
      json entry;
      entry["im"] = fmt_double(root.value.imag());
      entry["modulus"] = fmt_double(root.modulus());
      entry["multiplicity"] = root.multiplicity;
      entry["re"] = fmt_double(root.value.real());
      list.push_back(entry);
    }
    by_t.push_back(list);
  }
  out["roots_by_t"] = by_t;
  return out;
}

struct Payload {
  json body;
  std::string csv;
};

TableLimits limits_from_env() {
  TableLimits limits;
  if (const char* env = std::getenv("COMPBAL_MAX_CELLS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw compbal::input_error(compbal::errc::invalid_modulus,
                                 "COMPBAL_MAX_CELLS must be a positive integer");
    limits.max_cells = v;
  }
  return limits;
}

Payload run_validate(const std::vector<int>& parts) {
  const PartSet s = compbal::validate_part_set(parts);
  json body;
  body["balanced_candidate"] = s.balanced_candidate;
  body["gcd_all"] = s.gcd_all;
  body["gcd_prefix"] = s.gcd_prefix;
  body["k"] = s.k();
  body["largest"] = s.largest();
  body["parts"] = parts_json(s);

  std::ostringstream csv;
  csv << "k,largest,gcd_all,gcd_prefix,balanced_candidate\n";
  csv << s.k() << ',' << s.largest() << ',' << s.gcd_all << ',' << s.gcd_prefix << ','
      << (s.balanced_candidate ? 1 : 0) << '\n';
  return {body, csv.str()};
}

Payload run_table(const std::vector<int>& parts, std::int64_t n_max,
                  std::optional<double> at, const TableLimits& limits) {
  const PartSet s = compbal::validate_part_set(parts);
  const auto table = compbal::polynomial_table(s, n_max, limits);

  json body;
  body["n_max"] = n_max;
  body["parts"] = parts_json(s);
  std::ostringstream csv;

  if (at) {
    const double z = *at;
    const bool exact = z == -1.0 || z == 0.0 || z == 1.0;
    body["at"] = fmt_double(z);
    body["exact_eval"] = exact;
    json rows = json::array();
    csv << "n,value\n";
    for (const auto& p : table) {
      std::string value;
      if (exact)
        value = compbal::eval_exact_small(p, static_cast<int>(z)).str();
      else
        value = fmt_double(compbal::eval_at(p, {z, 0.0}).real());
      json row;
      row["n"] = p.n;
      row["value"] = value;
      rows.push_back(row);
      csv << p.n << ',' << value << '\n';
    }
    body["rows"] = rows;
  } else {
    json rows = json::array();
    csv << "n,d,coeff\n";
    for (const auto& p : table) {
      json row;
      row["n"] = p.n;
      row["degree"] = p.degree();
      json coeffs = json::array();
      for (std::size_t d = 0; d < p.coeffs.size(); ++d) {
        coeffs.push_back(p.coeffs[d].str());
        csv << p.n << ',' << d << ',' << p.coeffs[d].str() << '\n';
      }
      row["coeffs"] = coeffs;
      rows.push_back(row);
    }
    body["rows"] = rows;
  }
  return {body, csv.str()};
}

std::string series_csv(const PartSet& s, std::int64_t q, std::int64_t n_max,
                       std::optional<std::int64_t> only_r) {
  const auto series = compbal::residue_series(s, q, n_max);
  std::ostringstream csv;
  csv << "n,r,count,probability,deviation\n";
  for (std::size_t n = 0; n < series.size(); ++n) {
    const auto& dist = series[n];
    if (!dist.has_probs()) continue;
    for (std::int64_t r = 0; r < q; ++r) {
      if (only_r && r != *only_r) continue;
      const compbal::BigRat dev =
          boost::multiprecision::abs(dist.probs[static_cast<std::size_t>(r)] -
                                     compbal::BigRat(1, q));
      csv << n << ',' << r << ',' << dist.counts[static_cast<std::size_t>(r)].str() << ','
          << compbal::to_string(dist.probs[static_cast<std::size_t>(r)]) << ','
          << fmt_double(compbal::to_double(dev)) << '\n';
    }
  }
  return csv.str();
}

Payload run_balance(const std::vector<int>& parts, std::int64_t q,
                    std::optional<std::int64_t> r, std::int64_t n_max, std::int64_t n_min,
                    double tol) {
  const PartSet s = compbal::validate_part_set(parts);

  if (r) {
    const auto series = compbal::convergence_series(s, q, *r, n_min, n_max);
    json body;
    body["fitted_K"] = fmt_double(series.fitted_K);
    body["fitted_rho"] = fmt_double(series.fitted_rho);
    body["gap_ratio"] = fmt_double(series.gap_ratio);
    body["n_max"] = series.n_max;
    body["n_min"] = series.n_min;
    body["parts"] = parts_json(s);
    body["q"] = series.q;
    body["r"] = series.r;
    body["rows_used"] = series.rows_used;
    json rows = json::array();
    for (const auto& row : series.rows) {
      json entry;
      entry["deviation"] = fmt_double(row.deviation);
      entry["n"] = row.n;
      entry["p"] = compbal::to_string(row.p);
      rows.push_back(entry);
    }
    body["rows"] = rows;
    return {body, series_csv(s, q, n_max, *r)};
  }

  const auto verdict = compbal::balance_verdict(s, q, n_max, tol);
  json body;
  body["balanced"] = verdict.balanced;
  body["candidate"] = verdict.candidate;
  body["gcd_all"] = verdict.gcd_all;
  body["gcd_prefix"] = verdict.gcd_prefix;
  body["growth_constant"] = fmt_double(verdict.growth_constant);
  body["max_deviation"] = fmt_double(verdict.max_deviation);
  body["n_max"] = verdict.n_max;
  body["q"] = verdict.q;
  body["reason"] = verdict.reason;
  body["tol"] = fmt_double(verdict.tol);
  body["at_n_max"] = verdict.at_n_max ? dist_json(*verdict.at_n_max) : json();
  body["spectral"] = verdict.spectral ? root_report_json(*verdict.spectral) : json();
  if (!verdict.degenerate.empty()) {
    json rows = json::array();
    for (const auto& row : verdict.degenerate) {
      json entry;
      entry["n"] = row.n;
      entry["residue"] = row.residue;
      entry["unique"] = row.unique;
      rows.push_back(entry);
    }
    body["degenerate"] = rows;
    body["degenerate_uniform"] = verdict.degenerate_uniform;
  }
  return {body, series_csv(s, q, n_max, std::nullopt)};
}

Payload run_roots(const std::vector<int>& parts, std::int64_t q, double tol) {
  const PartSet s = compbal::validate_part_set(parts);
  const auto report = compbal::modulus_gap(s, q, tol);
  json body = root_report_json(report);
  body["parts"] = parts_json(s);

  std::ostringstream csv;
  csv << "t,re,im,modulus,multiplicity\n";
  for (std::size_t t = 0; t < report.roots_by_t.size(); ++t)
    for (const auto& root : report.roots_by_t[t])
      csv << t << ',' << fmt_double(root.value.real()) << ',' << fmt_double(root.value.imag())
          << ',' << fmt_double(root.modulus()) << ',' << root.multiplicity << '\n';
  return {body, csv.str()};
}

const char* interlacing_name(compbal::Interlacing v) {
  switch (v) {
    case compbal::Interlacing::interlaces:
      return "interlaces";
    case compbal::Interlacing::fails:
      return "fails";
    default:
      return "inconclusive";
  }
}

Payload run_properties(const std::vector<int>& parts, std::int64_t n_max, std::int64_t mod,
                       const TableLimits& limits) {
  if (mod < 1)
    throw compbal::input_error(compbal::errc::invalid_modulus, "--mod must be >= 1");
  const PartSet s = compbal::validate_part_set(parts);
  const auto table = compbal::polynomial_table(s, n_max, limits);

  json body;
  body["mod"] = mod;
  body["n_max"] = n_max;
  body["parts"] = parts_json(s);

  std::ostringstream csv;
  csv << "n,degree,distinct_real_roots,all_real,log_concave,unimodal,peaks\n";
  json rows = json::array();
  for (const auto& p : table) {
    if (p.is_zero()) continue;
    const auto rr = compbal::real_rooted(p);
    const auto lc = compbal::log_concavity(p);
    json row;
    row["all_real"] = rr.all_real;
    row["degree"] = p.degree();
    row["distinct_real_roots"] = rr.distinct_real_roots;
    row["first_violation"] = lc.first_violation ? json(*lc.first_violation) : json();
    row["log_concave"] = lc.log_concave;
    row["n"] = p.n;
    row["peaks"] = json(lc.peaks);
    row["unimodal"] = lc.unimodal;
    rows.push_back(row);

    csv << p.n << ',' << p.degree() << ',' << rr.distinct_real_roots << ','
        << (rr.all_real ? 1 : 0) << ',' << (lc.log_concave ? 1 : 0) << ','
        << (lc.unimodal ? 1 : 0) << ',';
    for (std::size_t i = 0; i < lc.peaks.size(); ++i)
      csv << (i ? ";" : "") << lc.peaks[i];
    csv << '\n';
  }
  body["rows"] = rows;

  json pairs = json::array();
  for (std::int64_t r = 0; r < mod; ++r) {
    std::vector<const CompositionPoly*> family;
    for (const auto& p : table)
      if (p.n % mod == r && !p.is_zero()) family.push_back(&p);
    for (std::size_t i = 0; i + 1 < family.size(); ++i) {
      json entry;
      entry["n_from"] = family[i]->n;
      entry["n_to"] = family[i + 1]->n;
      entry["r"] = r;
      try {
        entry["verdict"] = interlacing_name(compbal::interlacing_check(*family[i], *family[i + 1]));
      } catch (const compbal::input_error&) {
        entry["verdict"] = "skipped";
      }
      pairs.push_back(entry);
    }
  }
  body["interlacing"] = pairs;
  body["minus_one_zeros"] = json(compbal::minus_one_zeros(s, n_max));
  return {body, csv.str()};
}

Payload run_minrec(const std::vector<int>& parts, std::int64_t terms) {
  if (terms < 1)
    throw compbal::input_error(compbal::errc::too_short, "--terms must be >= 1");
  const PartSet s = compbal::validate_part_set(parts);
  std::vector<BigInt> seq;
  for (std::int64_t n = 0; n < terms; ++n) seq.push_back(compbal::total_count(s, n));
  const auto fit = compbal::minimal_recurrence(seq);

  json body;
  json coeffs = json::array();
  for (const auto& c : fit.coefficients) coeffs.push_back(compbal::to_string(c));
  body["coefficients"] = coeffs;
  body["order"] = fit.order;
  body["parts"] = parts_json(s);
  body["terms"] = terms;
  body["verified_prefix"] = fit.verified_prefix;

  std::ostringstream csv;
  csv << "lag,coefficient\n";
  for (std::size_t i = 0; i < fit.coefficients.size(); ++i)
    csv << i + 1 << ',' << compbal::to_string(fit.coefficients[i]) << '\n';
  return {body, csv.str()};
}

Payload run_oracle_check(const std::vector<int>& parts, std::int64_t n_max,
                         const TableLimits& limits) {
  const PartSet s = compbal::validate_part_set(parts);
  const auto table = compbal::polynomial_table(s, n_max, limits);

  json mismatches = json::array();
  std::ostringstream csv;
  csv << "n,match\n";
  for (const auto& p : table) {
    const bool match = compbal::brute_force_polynomial(s, p.n) == p;
    if (!match) mismatches.push_back(p.n);
    csv << p.n << ',' << (match ? 1 : 0) << '\n';
  }

  json body;
  body["all_match"] = mismatches.empty();
  body["checked"] = table.size();
  body["mismatches"] = mismatches;
  body["n_max"] = n_max;
  body["parts"] = parts_json(s);
  return {body, csv.str()};
}

json dispatch_job(const json& job, const TableLimits& limits) {
  const std::string analysis = job.at("analysis").get<std::string>();
  const std::vector<int> parts = job.at("parts").get<std::vector<int>>();
  auto i64 = [&](const char* key, std::int64_t fallback) {
    return job.contains(key) ? job.at(key).get<std::int64_t>() : fallback;
  };
  auto f64 = [&](const char* key, double fallback) {
    return job.contains(key) ? job.at(key).get<double>() : fallback;
  };

  if (analysis == "validate") return run_validate(parts).body;
  if (analysis == "table") {
    std::optional<double> at;
    if (job.contains("at")) at = job.at("at").get<double>();
    return run_table(parts, i64("n_max", 10), at, limits).body;
  }
  if (analysis == "balance") {
    std::optional<std::int64_t> r;
    if (job.contains("r")) r = job.at("r").get<std::int64_t>();
    return run_balance(parts, i64("q", 2), r, i64("n_max", 200), i64("n_min", 1),
                       f64("tol", 1e-3))
        .body;
  }
  if (analysis == "roots") return run_roots(parts, i64("q", 2), f64("tol", 1e-9)).body;
  if (analysis == "properties")
    return run_properties(parts, i64("n_max", 30), i64("mod", 1), limits).body;
  if (analysis == "minrec") return run_minrec(parts, i64("terms", 20)).body;
  if (analysis == "oracle-check")
    return run_oracle_check(parts, i64("n_max", 12), limits).body;
  throw compbal::input_error(compbal::errc::invalid_modulus,
                             "unknown analysis \"" + analysis + "\"");
}

Payload run_scan(const std::string& config_path, const TableLimits& limits) {
  std::ifstream in(config_path);
  if (!in)
    throw compbal::input_error(compbal::errc::empty_input,
                               "cannot open config file " + config_path);
  json config;
  try {
    in >> config;
  } catch (const json::exception& e) {
    throw compbal::input_error(compbal::errc::empty_input,
                               std::string("config is not valid JSON: ") + e.what());
  }
  if (!config.contains("jobs") || !config.at("jobs").is_array())
    throw compbal::input_error(compbal::errc::empty_input,
                               "config must contain a \"jobs\" array");
  const json& jobs = config.at("jobs");

  std::vector<std::future<json>> futures;
  for (const auto& job : jobs)
    futures.push_back(std::async(std::launch::async, [&job, &limits]() -> json {
      json entry;
      try {
        entry["result"] = dispatch_job(job, limits);
        entry["status"] = "ok";
      } catch (const compbal::error& e) {
        entry["message"] = e.what();
        entry["status"] = "error";
      } catch (const json::exception& e) {
        entry["message"] = e.what();
        entry["status"] = "error";
      }
      return entry;
    }));

  json body;
  json rows = json::array();
  std::ostringstream csv;
  csv << "index,analysis,parts,status\n";
  for (std::size_t i = 0; i < futures.size(); ++i) {
    json entry = futures[i].get();
    entry["index"] = i;
    if (jobs[i].contains("analysis")) entry["analysis"] = jobs[i].at("analysis");
    if (jobs[i].contains("parts")) entry["parts"] = jobs[i].at("parts");

    csv << i << ',';
    csv << (jobs[i].contains("analysis") ? jobs[i].at("analysis").get<std::string>() : "") << ',';
    if (jobs[i].contains("parts") && jobs[i].at("parts").is_array()) {
      const auto parts = jobs[i].at("parts");
      for (std::size_t j = 0; j < parts.size(); ++j)
        csv << (j ? ";" : "") << parts[j].get<int>();
    }
    csv << ',' << entry.at("status").get<std::string>() << '\n';
    rows.push_back(std::move(entry));
  }
  body["jobs"] = rows;
  return {body, csv.str()};
}

void emit(const Payload& payload, const std::string& format, const std::string& out_path) {
  const std::string text =
      format == "csv" ? payload.csv : payload.body.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out)
      throw compbal::input_error(compbal::errc::empty_input,
                                 "cannot open output file " + out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generating polynomials and balance analysis of restricted compositions"};
  app.require_subcommand(1);

  std::vector<int> parts;
  std::int64_t n_max = 10;
  std::int64_t q = 2;
  std::int64_t n_min = 1;
  std::int64_t terms = 20;
  std::int64_t mod = 1;
  double tol_balance = 1e-3;
  double tol_roots = 1e-9;
  double at_value = 0.0;
  std::int64_t r_value = 0;
  std::string format = "json";
  std::string out_path;
  std::string config_path;

  auto add_common = [&](CLI::App* cmd, bool needs_parts) {
    if (needs_parts)
      cmd->add_option("--parts", parts, "comma-separated part values")
          ->required()
          ->delimiter(',');
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
  };

  CLI::App* validate = app.add_subcommand("validate", "normalize and describe a part set");
  add_common(validate, true);

  CLI::App* table = app.add_subcommand("table", "generating polynomials A_n for n <= n-max");
  add_common(table, true);
  table->add_option("--n-max", n_max, "largest n")->required();
  CLI::Option* at_opt = table->add_option("--at", at_value, "evaluate each A_n at this point");

  CLI::App* balance = app.add_subcommand("balance", "balance verdict or convergence series");
  add_common(balance, true);
  balance->add_option("--q", q, "modulus")->required();
  CLI::Option* r_opt =
      balance->add_option("--r", r_value, "residue class: emit its convergence series");
  balance->add_option("--n-max", n_max, "largest n")->required();
  balance->add_option("--n-min", n_min, "first n of the convergence fit window");
  balance->add_option("--tol", tol_balance, "verdict deviation tolerance");

  CLI::App* roots = app.add_subcommand("roots", "characteristic roots and the spectral gap");
  add_common(roots, true);
  roots->add_option("--q", q, "modulus")->required();
  roots->add_option("--tol", tol_roots, "gap certification tolerance");

  CLI::App* properties =
      app.add_subcommand("properties", "real-rootedness, log-concavity, interlacing");
  add_common(properties, true);
  properties->add_option("--n-max", n_max, "largest n")->required();
  properties->add_option("--mod", mod, "interlace within residue classes of n mod M");

  CLI::App* minrec = app.add_subcommand("minrec", "minimal recurrence of the total counts");
  add_common(minrec, true);
  minrec->add_option("--terms", terms, "number of leading terms to synthesize from")
      ->required();

  CLI::App* oracle =
      app.add_subcommand("oracle-check", "compare the recurrence against brute-force counts");
  add_common(oracle, true);
  oracle->add_option("--n-max", n_max, "largest n")->required();

  CLI::App* scan = app.add_subcommand("scan", "run a batch of analyses from a JSON config");
  add_common(scan, false);
  scan->add_option("--config", config_path, "JSON file with a \"jobs\" array")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const TableLimits limits = limits_from_env();
    Payload payload;
    if (app.got_subcommand(validate)) {
      payload = run_validate(parts);
    } else if (app.got_subcommand(table)) {
      std::optional<double> at;
      if (at_opt->count() > 0) at = at_value;
      payload = run_table(parts, n_max, at, limits);
    } else if (app.got_subcommand(balance)) {
      std::optional<std::int64_t> r;
      if (r_opt->count() > 0) r = r_value;
      payload = run_balance(parts, q, r, n_max, n_min, tol_balance);
    } else if (app.got_subcommand(roots)) {
      payload = run_roots(parts, q, tol_roots);
    } else if (app.got_subcommand(properties)) {
      payload = run_properties(parts, n_max, mod, limits);
    } else if (app.got_subcommand(minrec)) {
      payload = run_minrec(parts, terms);
    } else if (app.got_subcommand(oracle)) {
      payload = run_oracle_check(parts, n_max, limits);
    } else {
      payload = run_scan(config_path, limits);
    }
    emit(payload, format, out_path);
  } catch (const compbal::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const compbal::numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 2;
  } catch (const compbal::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
