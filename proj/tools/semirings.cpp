/*
 *   Copyright 2026 The semirings authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end.
//
// Exit codes: 0 success (and, for verify, every verdict holds or is
// notApplicable), 1 axiom or hypothesis violation, 2 parse error,
// 3 a theorem failure was detected.

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <semirings/semirings.hpp>

namespace fs = std::filesystem;
using namespace semirings;

namespace {

constexpr int kExitOk = 0, kExitViolation = 1, kExitParse = 2,
              kExitFinding = 3;

FiniteSemiring load_semiring(std::string const& path) {
  return parse_semiring(read_file(path));
}

std::string opt_text(std::optional<int> v) {
  return v.has_value() ? std::to_string(*v) : "none";
}

int cmd_validate(std::string const& file) {
  auto raw = parse_semiring_tables(read_file(file));
  auto bad = FiniteSemiring::axiom_violations(raw.order, raw.add, raw.mul);
  if (bad.empty()) {
    std::cout << "valid\norder " << raw.order << "\n";
    return kExitOk;
  }
  std::cout << "invalid\nviolations " << bad.size() << "\n";
  for (auto const& v : bad) {
    std::cout << "  " << v.to_string() << "\n";
  }
  return kExitViolation;
}

int cmd_classify(std::string const& file) {
  auto s = load_semiring(file);
  std::cout << "order " << s.order() << "\n";
  std::cout << "quasiCompletelyRegular "
            << (is_quasi_completely_regular(s) ? "true" : "false") << "\n";
  std::cout << "additiveIdempotents";
  for (int e : additive_idempotents(s)) {
    std::cout << ' ' << e;
  }
  std::cout << "\n";
  for (int a = 0; a < s.order(); ++a) {
    auto p = element_profile(s, a);
    std::cout << "element " << a << "\n";
    std::cout << "  regIndex " << opt_text(p.reg_index) << "\n";
    std::cout << "  crIndex " << opt_text(p.cr_index) << "\n";
    std::cout << "  zero " << opt_text(p.zero) << "\n";
    std::cout << "  inverses";
    for (int x : additive_inverses(s, a)) {
      std::cout << ' ' << x;
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_relations(std::string const& file, std::string const& which) {
  auto s = load_semiring(file);
  BinRelation r(s.order());
  if (which == "L+") {
    r = green_l(s);
  } else if (which == "R+") {
    r = green_r(s);
  } else if (which == "J+") {
    r = green_j(s);
  } else if (which == "H+") {
    r = green_h(s);
  } else if (which == "D+") {
    r = green_d(s);
  } else if (which == "L*") {
    r = star_l(s);
  } else if (which == "R*") {
    r = star_r(s);
  } else if (which == "J*") {
    r = star_j(s);
  } else if (which == "H*") {
    r = star_h(s);
  } else if (which == "D*") {
    r = star_d(s);
  } else {
    throw SemiringError("unknown relation '" + which
                        + "' (use L+ R+ J+ H+ D+ L* R* J* H* D*)");
  }
  std::cout << "relation " << which << "\n" << r.to_string();
  if (r.is_equivalence()) {
    std::cout << "classes " << r.to_partition().to_string() << "\n";
  }
  return kExitOk;
}

int cmd_congruence(std::string const& file, std::string const& kind) {
  auto s = load_semiring(file);
  auto print = [&](std::string const& name, Partition const& p) {
    std::cout << "kind " << name << "\n";
    std::cout << "partition " << p.to_string() << "\n";
    std::cout << "classes " << p.num_classes() << "\n";
    std::cout << "congruence " << (is_congruence(s, p) ? "true" : "false")
              << "\n";
  };
  if (kind == "rho") {
    print("rho", congruence_of_kind(s, CongruenceKind::least_completely_regular));
  } else if (kind == "sigma") {
    print("sigma", congruence_of_kind(s, CongruenceKind::least_skew_ring));
  } else if (kind == "nu") {
    print("nu",
          congruence_of_kind(s, CongruenceKind::least_b_lattice_of_skew_rings));
  } else if (kind == "y") {
    print("y", congruence_of_kind(s, CongruenceKind::y_relation));
  } else if (kind == "ystar") {
    print("ystar", congruence_of_kind(s, CongruenceKind::y_star));
  } else if (kind == "all") {
    auto congs = all_congruences(s);
    std::cout << "congruences " << congs.size() << "\n";
    for (auto const& p : congs) {
      std::cout << "  " << p.to_string() << "\n";
    }
  } else {
    throw SemiringError("unknown congruence kind '" + kind
                        + "' (use rho sigma nu y ystar all)");
  }
  return kExitOk;
}

int cmd_rees(std::string const& file) {
  auto spec = load_rees_file(file);
  auto bad  = validate_p(spec);
  if (!bad.empty()) {
    std::cout << "invalid\nviolations " << bad.size() << "\n";
    for (auto const& v : bad) {
      std::cout << "  " << v.to_string() << "\n";
    }
    return kExitViolation;
  }
  auto m = rees_matrix(spec);
  std::cerr << "rees matrix semiring of order " << m.order()
            << " (completely simple)\n";
  std::cout << serialize_semiring(m);
  return kExitOk;
}

int cmd_decompose(std::string const& file) {
  auto s = load_semiring(file);
  auto d = decompose(s);
  std::cout << "components " << d.components.size() << "\n";
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    std::cout << "component " << c << "\n";
    std::cout << "  elements";
    for (int x : d.components[c].global_of) {
      std::cout << ' ' << x;
    }
    std::cout << "\n  kernel";
    for (int x : d.kernels[c]) {
      std::cout << ' ' << d.components[c].global_of[x];
    }
    std::cout << "\n";
    if (d.coords[c].has_value()) {
      auto const& sp = d.coords[c]->spec;
      std::cout << "  rees I " << sp.band_i.order << " Lambda "
                << sp.band_l.order << " ring " << sp.ring.order() << "\n";
    } else {
      std::cout << "  rees unavailable\n";
    }
  }
  if (d.blattice.has_value()) {
    std::cout << "blattice\n" << serialize_semiring(*d.blattice);
  }
  for (auto const& f : d.findings) {
    std::cout << "finding " << f << "\n";
  }
  return d.findings.empty() ? kExitOk : kExitFinding;
}

int cmd_enumerate(int order, std::vector<std::string> const& filters,
                  bool upto_iso, bool count_only) {
  EnumFilter filter;
  for (auto const& f : filters) {
    if (f == "qcr") {
      filter.quasi_completely_regular = true;
    } else if (f == "ca") {
      filter.completely_archimedean = true;
    } else if (f == "qo") {
      filter.quasi_orthodox = true;
    } else {
      throw SemiringError("unknown filter '" + f + "' (use qcr ca qo)");
    }
  }
  long n = 0;
  enumerate_semirings(order, filter, upto_iso, [&](FiniteSemiring const& s) {
    if (!count_only) {
      std::cout << "# " << n << "\n" << serialize_semiring(s) << "\n";
    }
    ++n;
  });
  if (count_only) {
    std::cout << n << "\n";
  }
  return kExitOk;
}

int cmd_verify(std::vector<std::string> const& files,
               std::string const& corpus_dir,
               std::vector<std::string> const& theorem_names,
               std::string const& format_name) {
  VerifyOptions opts;
  for (auto const& name : theorem_names) {
    auto t = parse_theorem(name);
    if (!t.has_value()) {
      throw SemiringError("unknown theorem tag '" + name + "'");
    }
    opts.selection.push_back(*t);
  }
  auto format = parse_report_format(format_name);
  if (!format.has_value()) {
    throw SemiringError("unknown format '" + format_name
                        + "' (use lines or json-like)");
  }

  std::vector<std::pair<std::string, std::string>> inputs;  // id, path
  for (auto const& f : files) {
    inputs.emplace_back(fs::path(f).filename().string(), f);
  }
  if (!corpus_dir.empty()) {
    for (auto const& entry : fs::directory_iterator(corpus_dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".sr") {
        inputs.emplace_back(entry.path().filename().string(),
                            entry.path().string());
      }
    }
  }
  if (inputs.empty()) {
    throw SemiringError("verify: no inputs (give a FILE or --corpus DIR)");
  }
  std::sort(inputs.begin(), inputs.end());

  // instances are independent; process them in parallel and aggregate in
  // input order so the report is stable
  std::vector<TheoremReport> reports(inputs.size());
  std::vector<std::string>   errors(inputs.size());
  std::atomic<std::size_t>   next{0};
  unsigned nthreads = std::min<unsigned>(
      std::max(1u, std::thread::hardware_concurrency()),
      static_cast<unsigned>(inputs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < inputs.size();
           i = next.fetch_add(1)) {
        try {
          auto s     = load_semiring(inputs[i].second);
          reports[i] = verify(s, inputs[i].first, opts);
        } catch (std::exception const& e) {
          errors[i] = e.what();
        }
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (!errors[i].empty()) {
      throw SemiringError(inputs[i].second + ": " + errors[i]);
    }
  }
  std::cout << render(reports, *format);
  for (auto const& rep : reports) {
    if (rep.count(Verdict::Kind::fails) > 0) {
      return kExitFinding;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semiring computational algebra toolkit"};
  app.require_subcommand(1);

  std::string file, which = "J*", kind = "rho", corpus, format = "lines";
  std::vector<std::string> files, filters, theorems;
  int  order = 2;
  bool upto_iso = false, count_only = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the axioms");
  validate_cmd->add_option("file", file, "a .sr file")->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "per-element regularity profile");
  classify_cmd->add_option("file", file, "a .sr file")->required();

  auto* relations_cmd =
      app.add_subcommand("relations", "Green's relations and starred forms");
  relations_cmd->add_option("file", file, "a .sr file")->required();
  relations_cmd->add_option("--which", which,
                            "L+ R+ J+ H+ D+ L* R* J* H* D*");

  auto* congruence_cmd =
      app.add_subcommand("congruence", "named congruences");
  congruence_cmd->add_option("file", file, "a .sr file")->required();
  congruence_cmd->add_option("--kind", kind, "rho sigma nu y ystar all");

  auto* rees_cmd =
      app.add_subcommand("rees", "build a Rees matrix semiring");
  rees_cmd->add_option("spec", file, "a .rees file")->required();

  auto* decompose_cmd = app.add_subcommand(
      "decompose", "b-lattice decomposition into Archimedean components");
  decompose_cmd->add_option("file", file, "a .sr file")->required();

  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "exhaustively enumerate small orders");
  enumerate_cmd->add_option("--order", order, "order (exhaustive for <= 3)")
      ->required();
  enumerate_cmd->add_option("--filter", filters,
                            "predicates: qcr ca qo (repeatable)");
  enumerate_cmd->add_flag("--upto-iso", upto_iso,
                          "deduplicate up to isomorphism");
  enumerate_cmd->add_flag("--count", count_only, "print only the count");

  auto* verify_cmd = app.add_subcommand(
      "verify", "evaluate the verification suite and print a report");
  verify_cmd->add_option("files", files, "one or more .sr files");
  verify_cmd->add_option("--corpus", corpus, "directory of .sr files");
  verify_cmd->add_option("--theorems", theorems,
                         "comma-separated theorem tags")
      ->delimiter(',');
  verify_cmd->add_option("--format", format, "lines or json-like");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      return cmd_validate(file);
    }
    if (classify_cmd->parsed()) {
      return cmd_classify(file);
    }
    if (relations_cmd->parsed()) {
      return cmd_relations(file, which);
    }
    if (congruence_cmd->parsed()) {
      return cmd_congruence(file, kind);
    }
    if (rees_cmd->parsed()) {
      return cmd_rees(file);
    }
    if (decompose_cmd->parsed()) {
      return cmd_decompose(file);
    }
    if (enumerate_cmd->parsed()) {
      return cmd_enumerate(order, filters, upto_iso, count_only);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(files, corpus, theorems, format);
    }
  } catch (ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (SemiringError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitOk;
}
