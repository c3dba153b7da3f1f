#include "supercong/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <deque>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <thread>

#include "supercong/checks.hpp"
#include "supercong/cli/report_json.hpp"
#include "supercong/cli/store.hpp"
#include "supercong/modular_series.hpp"
#include "supercong/recurrence.hpp"

namespace supercong::cli {

namespace {

int status_code(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return kCheckFailed;
  return kPass;
}

std::string witness_text(const WitnessValue& v) {
  if (const auto* x = std::get_if<ExactRational>(&v)) return to_string(*x);
  return std::get<Valuation>(v).to_string();
}

void print_matrix(std::ostream& os, const ValuationMatrix& m) {
  for (const auto& row : m) {
    os << "    (";
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].to_string();
    os << ")\n";
  }
}

void print_human(std::ostream& os, const CheckReport& r, bool with_witnesses) {
  os << (r.status == CheckStatus::pass ? "PASS " : r.status == CheckStatus::fail ? "FAIL " : "ERROR") << " "
     << r.name;
  for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
  if (r.min_valuation) os << "  min v_p=" << r.min_valuation->to_string();
  os << "\n";
  if (r.matrix) print_matrix(os, *r.matrix);
  if (with_witnesses)
    for (const auto& w : r.witnesses) os << "    " << w.label << " = " << witness_text(w.value) << "\n";
  for (const auto& n : r.notes) os << "    note: " << n << "\n";
}

// Opens cfg.out or falls back to the given stream.
template <class Fn>
int with_output(const RunConfig& cfg, std::ostream& fallback, std::ostream& err, Fn&& write) {
  if (cfg.out.empty()) {
    write(fallback);
    return kPass;
  }
  std::ofstream f(cfg.out, std::ios::trunc);
  if (!f) {
    err << "error: cannot open " << cfg.out << " for writing\n";
    return kUsageError;
  }
  write(f);
  if (!f) {
    err << "error: write to " << cfg.out << " failed\n";
    return kUsageError;
  }
  return kPass;
}

int emit(const RunConfig& cfg, const ParamList& params, const std::vector<CheckReport>& reports, std::ostream& out,
         std::ostream& err, const std::function<void(std::ostream&)>& human) {
  const int io = with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::json)
      os << make_document(cfg.command, params, reports).dump(2) << "\n";
    else
      human(os);
  });
  return io != kPass ? io : status_code(reports);
}

CheckReport run_guarded(const std::string& name, const std::function<CheckReport()>& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    CheckReport r;
    r.name = name;
    r.error(e.what());
    return r;
  }
}

}  // namespace

int cmd_fixed_primes(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = *cfg.pmin; p <= *cfg.pmax; ++p)
    if (is_prime(p)) primes.push_back(p);

  SweepStore store;
  try {
    store = SweepStore::load(cfg.store_path);
  } catch (const StoreError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  std::vector<std::uint64_t> todo;
  for (auto p : primes)
    if (!store.has(p, delta_precision(p))) todo.push_back(p);
  std::sort(todo.rbegin(), todo.rend());  // largest first: they dominate the runtime

  std::mutex mu;
  std::condition_variable cv;
  std::deque<std::pair<std::uint64_t, CheckReport>> done;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) {
      const std::uint64_t p = todo[i];
      CheckReport r = run_guarded("fixed_prime", [p] { return check_fixed_prime(p); });
      std::lock_guard lock(mu);
      done.emplace_back(p, std::move(r));
      cv.notify_one();
    }
  };
  const unsigned n_workers = std::min<std::size_t>(cfg.jobs, std::max<std::size_t>(todo.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n_workers && !todo.empty(); ++i) pool.emplace_back(worker);

  // Single writer: merge results as they arrive so an interrupted sweep resumes.
  bool io_failed = false;
  for (std::size_t merged = 0; merged < todo.size();) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return !done.empty(); });
    auto [p, r] = std::move(done.front());
    done.pop_front();
    lock.unlock();
    store.put(p, StoreEntry{kArtifactVersion, delta_precision(p), {std::move(r)}});
    ++merged;
    if (!io_failed) {
      try {
        store.save(cfg.store_path);
      } catch (const StoreError& e) {
        err << "error: " << e.what() << "\n";
        io_failed = true;
      }
    }
  }
  for (auto& t : pool) t.join();
  if (io_failed) return kUsageError;

  std::vector<CheckReport> reports;
  for (auto p : primes) {
    const auto* e = store.find(p);
    reports.insert(reports.end(), e->reports.begin(), e->reports.end());
  }
  std::size_t sub_checks = 0, sub_pass = 0;
  for (const auto& r : reports)
    for (const auto& w : r.witnesses)
      if (const auto* v = std::get_if<Valuation>(&w.value)) {
        ++sub_checks;
        if (*v >= 4) ++sub_pass;
      }

  const ParamList params{{"pmin", std::to_string(*cfg.pmin)},
                         {"pmax", std::to_string(*cfg.pmax)},
                         {"jobs", std::to_string(cfg.jobs)},
                         {"store", cfg.store_path}};
  const int io = with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::json) {
      auto doc = make_document(cfg.command, params, reports);
      doc["summary"] = {{"primes", primes.size()},
                        {"computed", todo.size()},
                        {"sub_checks", sub_checks},
                        {"sub_checks_passed", sub_pass}};
      os << doc.dump(2) << "\n";
    } else if (cfg.format == OutputFormat::csv) {
      os << "p,r,s,delta_decimal,vp,pass\n";
      for (const auto& r : reports) {
        const std::string p = *r.find_param("p");
        for (int rr = 1; rr <= 3; ++rr)
          for (int s = 1; s <= rr; ++s) {
            const std::string idx = "[r=" + std::to_string(rr) + ",s=" + std::to_string(s) + "]";
            const auto* d = r.find_witness("delta" + idx);
            const auto* v = r.find_witness("v_p(delta)" + idx);
            if (!d || !v) continue;
            const Valuation val = std::get<Valuation>(v->value);
            os << p << "," << rr << "," << s << "," << witness_text(d->value) << "," << val.to_string() << ","
               << (val >= 4 ? "true" : "false") << "\n";
          }
      }
    } else {
      for (const auto& r : reports) {
        os << "p=" << *r.find_param("p") << "  " << to_string(r.status) << "  v_p(delta) =";
        for (const auto& w : r.witnesses)
          if (std::holds_alternative<Valuation>(w.value)) os << " " << witness_text(w.value);
        os << "\n";
      }
      os << primes.size() << " primes (" << todo.size() << " computed, " << primes.size() - todo.size()
         << " from store), " << sub_pass << "/" << sub_checks << " sub-checks passed\n";
    }
  });
  return io != kPass ? io : status_code(reports);
}

int cmd_window(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<CheckReport> reports{check_supercongruence_window(*cfg.pmax, *cfg.nmax)};
  const ParamList params{{"pmax", std::to_string(*cfg.pmax)}, {"nmax", std::to_string(*cfg.nmax)}};
  return emit(cfg, params, reports, out, err, [&](std::ostream& os) { print_human(os, reports[0], true); });
}

namespace {

using Job = std::pair<std::string, std::function<CheckReport()>>;

std::vector<Job> battery(bool quick) {
  std::vector<Job> jobs;
  const std::vector<std::uint64_t> primes = quick ? std::vector<std::uint64_t>{5, 7} : std::vector<std::uint64_t>{5, 7, 11};
  const std::int64_t N = quick ? 60 : 200;
  jobs.emplace_back("modular_identity", [N] { return check_modular_identity(N); });
  jobs.emplace_back("C_eisenstein", [N] { return check_C_eisenstein(N); });
  jobs.emplace_back("lagrange_burmann", [quick] { return check_lagrange_burmann(quick ? 30 : 100); });
  jobs.emplace_back("ore_factorization", [quick] { return check_ore_factorization(quick ? 100 : 500); });
  for (std::uint64_t p : quick ? std::vector<std::uint64_t>{5, 7} : std::vector<std::uint64_t>{5, 7, 11, 13})
    jobs.emplace_back("eisenstein_tower", [p] { return check_tower(p, 20, 2); });
  for (auto p : primes) {
    jobs.emplace_back("main_frobenius", [p] { return check_main_frobenius(p, 3); });
    jobs.emplace_back("generalized_frobenius", [p] { return check_generalized_frobenius(p, 5, 5); });
    jobs.emplace_back("F_defects", [p] { return check_F_defects(p, 5); });
    jobs.emplace_back("reconstruction", [p] { return check_reconstruction(p, 5); });
    jobs.emplace_back("layer_matrices", [p] { return check_layer_matrices(p, 4); });
    // m < p: beyond that p^a B^(a)_{mp} leaves Z_(p) (see README)
    jobs.emplace_back("dwork", [p] { return check_dwork(p, static_cast<std::int64_t>(p) - 1); });
    jobs.emplace_back("coeff_layers", [p] { return check_coeff_layers(p, 3, 3); });
    jobs.emplace_back("Y_matrix", [p] { return check_Y_matrix(p); });
    jobs.emplace_back("beukers", [p] { return check_beukers(p, 50); });
    jobs.emplace_back("layer_truncation_bound", [p] { return check_layer_truncation_bound(p, 8); });
    jobs.emplace_back("delta_consistency", [p] { return check_delta_consistency(p); });
  }
  jobs.emplace_back("coupled_cancellation", [] { return check_coupled_cancellation(5, 1); });
  jobs.emplace_back("coupled_cancellation", [] { return check_coupled_cancellation(7, 1); });
  if (!quick) jobs.emplace_back("coupled_cancellation", [] { return check_coupled_cancellation(7, 2); });
  jobs.emplace_back("diagonal_valuation", [] { return diagonal_valuation(5); });
  jobs.emplace_back("diagonal_valuation", [] { return diagonal_valuation(7); });
  return jobs;
}

}  // namespace

int cmd_verify_all(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<CheckReport> reports;
  std::string first_failed;
  for (const auto& [name, fn] : battery(cfg.profile == "quick")) {
    reports.push_back(run_guarded(name, fn));
    if (!reports.back().passed() && first_failed.empty()) first_failed = name;
  }
  if (!first_failed.empty()) err << "first failing category: " << first_failed << "\n";
  const ParamList params{{"profile", cfg.profile}};
  return emit(cfg, params, reports, out, err, [&](std::ostream& os) {
    std::size_t passed = 0;
    for (const auto& r : reports) {
      print_human(os, r, false);
      passed += r.passed();
    }
    os << passed << "/" << reports.size() << " checks passed\n";
  });
}

int cmd_series(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::int64_t N = *cfg.terms;
  const std::string& name = cfg.series_name;
  std::int64_t min_exp = 0;
  std::vector<std::string> coeffs;
  if (name == "A" || name == "B") {
    const SequenceTable a = a_seq(N - 1);
    for (std::int64_t n = 0; n < N; ++n) coeffs.push_back(to_string(name == "A" ? a.A(n) : a.B(n)));
  } else {
    TruncatedSeries s = name == "t"       ? gen_t(N + 1)
                        : name == "H"     ? gen_H(N)
                        : name == "C"     ? gen_C(N)
                        : name == "L"     ? gen_L(N)
                        : name == "Theta" ? gen_theta(N)
                                          : gen_Up(*cfg.p, N + 1);
    // N coefficients starting at the first structurally present exponent
    min_exp = s.min_exp();
    if (name == "Up") min_exp = 1;
    for (std::int64_t n = min_exp; n < min_exp + N; ++n) coeffs.push_back(to_string(s.coeff(n)));
  }
  ParamList params{{"name", name}, {"terms", std::to_string(N)}};
  if (cfg.p) params.emplace_back("p", std::to_string(*cfg.p));
  return with_output(cfg, out, err, [&](std::ostream& os) {
    if (cfg.format == OutputFormat::json) {
      json doc;
      doc["version"] = kArtifactVersion;
      doc["command"] = cfg.command;
      doc["params"] = json::object();
      for (const auto& [k, v] : params) doc["params"][k] = v;
      doc["min_exp"] = min_exp;
      doc["coefficients"] = coeffs;
      os << doc.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < coeffs.size(); ++i)
        os << min_exp + static_cast<std::int64_t>(i) << " " << coeffs[i] << "\n";
    }
  });
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "fixed-primes") return cmd_fixed_primes(cfg, out, err);
    if (cfg.command == "window") return cmd_window(cfg, out, err);
    if (cfg.command == "verify-all") return cmd_verify_all(cfg, out, err);
    if (cfg.command == "series") return cmd_series(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  err << "error: unknown command '" << cfg.command << "'\n";
  return kUsageError;
}

}  // namespace supercong::cli
