// Copyright 2026 The phasetorus Authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "phasetorus/phasetorus.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int report_error(pt_status status) {
  std::cerr << "error: " << pt_status_string(status) << ": " << pt_last_error() << "\n";
  return kExitUsage;
}

int emit_report(pt_report* report, bool json) {
  char* text = nullptr;
  pt_status st = json ? pt_report_to_json(report, &text) : pt_report_to_text(report, &text);
  if (st != PT_OK) {
    pt_report_destroy(report);
    return report_error(st);
  }
  std::fputs(text, stdout);
  pt_string_free(text);
  int pass = 0;
  pt_report_overall_pass(report, &pass);
  pt_report_destroy(report);
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantization of the plane and torus phase spaces: checks and dumps", "phasetorus"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", pt_version());

  double qa = 0.0;
  double qb = 0.0;
  double qh = 1.0;
  bool q_json = false;
  std::string q_timestamp;
  auto* quantize = app.add_subcommand("quantize", "Test whether a b / h is an integer N");
  quantize->add_option("--a", qa, "Period of p")->required();
  quantize->add_option("--b", qb, "Period of q")->required();
  quantize->add_option("--h", qh, "Planck constant")->capture_default_str();
  quantize->add_flag("--json", q_json, "Emit the JSON report");
  quantize->add_option("--timestamp", q_timestamp, "Fixed report timestamp");

  int v_N = 1;
  double v_h = 1.0;
  std::optional<double> v_a;
  std::optional<double> v_b;
  std::string v_suite = "all";
  std::optional<double> v_tol;
  bool v_json = false;
  std::string v_timestamp;
  auto* verify = app.add_subcommand("verify", "Run verification suites on the torus of dimension N");
  verify->add_option("--N", v_N, "Physical dimension")->required()->check(CLI::PositiveNumber);
  verify->add_option("--h", v_h, "Planck constant")->capture_default_str();
  verify->add_option("--a", v_a, "Period of p (default sqrt(N h))");
  verify->add_option("--b", v_b, "Period of q (default sqrt(N h))");
  verify->add_option("--suite", v_suite, "orthonormality, table1, weyl, dft, charts, commutators or all")
      ->check(CLI::IsMember({"orthonormality", "table1", "weyl", "dft", "charts", "commutators", "all"}))
      ->capture_default_str();
  verify->add_option("--tolerance", v_tol, "Replaces the default 1e-12 tolerance");
  verify->add_flag("--json", v_json, "Emit the JSON report");
  verify->add_option("--timestamp", v_timestamp, "Fixed report timestamp");

  std::string d_kind;
  int d_N = 1;
  int d_n = 0;
  int d_m = 0;
  int d_M = 0;
  bool d_reduce = false;
  double d_h = 1.0;
  std::optional<double> d_a;
  std::optional<double> d_b;
  std::string d_out;
  auto* dump = app.add_subcommand("dump", "Write a sampled torus basis state as CSV");
  dump->add_option("kind", d_kind, "qbasis or pbasis")->required()->check(CLI::IsMember({"qbasis", "pbasis"}));
  dump->add_option("--N", d_N, "Physical dimension")->required()->check(CLI::PositiveNumber);
  dump->add_option("--n", d_n, "First label");
  dump->add_option("--m", d_m, "Second label");
  dump->add_option("--M", d_M, "Grid points per side (default 8 N)")->check(CLI::PositiveNumber);
  dump->add_flag("--reduce", d_reduce, "Reduce the labels to their canonical representative first");
  dump->add_option("--h", d_h, "Planck constant")->capture_default_str();
  dump->add_option("--a", d_a, "Period of p (default sqrt(N h))");
  dump->add_option("--b", d_b, "Period of q (default sqrt(N h))");
  dump->add_option("--out", d_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (quantize->parsed()) {
    pt_report* report = nullptr;
    const pt_status st = pt_quantize(qa, qb, qh, q_timestamp.c_str(), &report);
    if (st != PT_OK) {
      std::cerr << quantize->help();
      return report_error(st);
    }
    return emit_report(report, q_json);
  }

  if (verify->parsed()) {
    pt_verify_options o;
    pt_verify_options_init(&o);
    o.N = v_N;
    o.h = v_h;
    if (v_a) {
      o.a = *v_a;
      o.has_a = 1;
    }
    if (v_b) {
      o.b = *v_b;
      o.has_b = 1;
    }
    o.suite = v_suite.c_str();
    if (v_tol) {
      o.tolerance = *v_tol;
      o.has_tolerance = 1;
    }
    o.timestamp = v_timestamp.c_str();
    pt_report* report = nullptr;
    const pt_status st = pt_verify(&o, &report);
    if (st != PT_OK) return report_error(st);
    return emit_report(report, v_json);
  }

  pt_dump_options o;
  pt_dump_options_init(&o);
  o.kind = d_kind.c_str();
  o.N = d_N;
  o.n = d_n;
  o.m = d_m;
  o.M = d_M;
  o.reduce = d_reduce ? 1 : 0;
  o.h = d_h;
  if (d_a) {
    o.a = *d_a;
    o.has_a = 1;
  }
  if (d_b) {
    o.b = *d_b;
    o.has_b = 1;
  }
  char* csv = nullptr;
  const pt_status st = pt_dump_basis_csv(&o, &csv);
  if (st != PT_OK) return report_error(st);
  int rc = kExitPass;
  if (d_out.empty()) {
    std::fputs(csv, stdout);
  } else {
    std::ofstream file(d_out, std::ios::binary);
    file << csv;
    if (!file) {
      std::cerr << "error: cannot write " << d_out << "\n";
      rc = kExitUsage;
    }
  }
  pt_string_free(csv);
  return rc;
}
