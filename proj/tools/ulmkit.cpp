// ulmkit command-line front end.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ulmkit/acceptance.hpp"
#include "ulmkit/duality.hpp"
#include "ulmkit/embed.hpp"
#include "ulmkit/error.hpp"
#include "ulmkit/io.hpp"
#include "ulmkit/local_arith.hpp"
#include "ulmkit/presentation.hpp"
#include "ulmkit/ulm.hpp"
#include "ulmkit/zgroup.hpp"

using namespace ulmkit;
using io::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

json height_json(const Height& h) {
  if (h.is_infinite()) return "inf";
  return h.value();
}

Vec parse_vector(const std::string& text, const ZModule& m) {
  auto rows = io::parse_rows(text);
  if (rows.size() != 1 || rows.front().size() != m.dim())
    throw DomainError("vector must have " + std::to_string(m.dim()) + " entries");
  Vec v;
  for (auto x : rows.front()) v.push_back(linalg::mod_reduce(x, m.ell()));
  return v;
}

std::vector<group::Element> parse_map(const std::string& text) {
  std::vector<group::Element> out;
  for (auto v : io::parse_list(text)) out.push_back(group::Element(v));
  return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ulmkit: finite F_l[[Z]]-modules, Z-groups and embedding problems"};
  app.require_subcommand(1);

  std::string input;

  auto* ulm_cmd = app.add_subcommand("ulm", "Ulm invariants of a .zmod module");
  ulm_cmd->add_option("-i,--input", input, ".zmod file")->required();

  auto* dec_cmd = app.add_subcommand("decompose", "split a module into cyclic summands");
  dec_cmd->add_option("-i,--input", input, ".zmod file")->required();

  auto* dual_cmd = app.add_subcommand("dual", "print the dual module in .zmod format");
  dual_cmd->add_option("-i,--input", input, ".zmod file")->required();

  std::string eta, vector;
  auto* height_cmd = app.add_subcommand("height", "element or homomorphism heights");
  height_cmd->add_option("-i,--input", input, ".zmod file")->required();
  auto* eta_opt = height_cmd->add_option(
      "--eta", eta, "functional on M (space separated); reports Ht of its cyclic envelope");
  auto* vec_opt = height_cmd->add_option("--vector", vector, "element of M (space separated)");
  eta_opt->excludes(vec_opt);

  std::string phi_rows;
  std::size_t lift_n = 0;
  auto* solve_cmd = app.add_subcommand("solve-embed", "lift phi: M -> V_m along V_n -> V_m");
  solve_cmd->add_option("-i,--input", input, ".zmod file for M")->required();
  solve_cmd->add_option("--phi", phi_rows, "m x dim(M) matrix, rows separated by ';'")
      ->required();
  solve_cmd->add_option("--n", lift_n, "target length n >= m")->required();

  std::string g_path, gamma_path, h_path, alpha_map, beta_map;
  std::size_t limit = 0;
  auto* gep_cmd = app.add_subcommand("group-ep", "classify and solve a Z-embedding problem");
  gep_cmd->add_option("--G", g_path, ".zgrp file for G")->required();
  gep_cmd->add_option("--Gamma", gamma_path, ".zgrp file for Gamma")->required();
  gep_cmd->add_option("--H", h_path, ".zgrp file for H")->required();
  gep_cmd->add_option("--alpha", alpha_map, "images of H's elements in Gamma, comma separated")
      ->required();
  gep_cmd->add_option("--beta", beta_map, "images of G's elements in Gamma, comma separated")
      ->required();
  gep_cmd->add_option("--limit", limit, "stop after this many solutions (0 = all)");

  std::uint64_t ell = 0, pmax = 0;
  bool detailed = false;
  auto* spec_cmd = app.add_subcommand("spectrum", "realized finite heights over Q");
  spec_cmd->add_option("--l", ell, "odd prime")->required();
  spec_cmd->add_option("--pmax", pmax, "prime bound")->required();
  spec_cmd->add_flag("--detailed", detailed, "include per-level counts");

  std::string ramified;
  std::size_t char_m = 1;
  auto* char_cmd = app.add_subcommand("char-height", "global height of an F_l-character");
  char_cmd->add_option("--l", ell, "odd prime")->required();
  char_cmd->add_option("--ramified", ramified, "ramified primes, comma separated")->required();
  char_cmd->add_option("--m", char_m, "target length m");

  std::size_t max_level = 0, free_mult = 0, trunc = 1, opaque = 0;
  std::string mult_spec, format = "json";
  bool countable = false;
  auto* pres_cmd = app.add_subcommand("present", "emit a truncated presentation");
  pres_cmd->add_option("--l", ell, "prime")->required();
  pres_cmd->add_option("--N", max_level, "maximal level N")->required();
  pres_cmd->add_option("--mult", mult_spec, "k=m,... multiplicities of F_l[Z/l^k]");
  pres_cmd->add_option("--free", free_mult, "number of truncated free families");
  pres_cmd->add_option("--trunc", trunc, "truncation length T of free families");
  pres_cmd->add_flag("--countable", countable, "mark the multiplicities as countable");
  pres_cmd->add_option("--opaque-high", opaque, "families above level N (metadata only)");
  pres_cmd->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::uint64_t seed = 20240601;
  int criterion = 0;
  auto* self_cmd = app.add_subcommand("selftest", "run the acceptance suite");
  self_cmd->add_option("--seed", seed, "seed for random instances");
  self_cmd->add_option("--criterion", criterion, "run a single criterion (1-10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*ulm_cmd) {
      emit(io::ulm_json(ulm::ulm_invariants(io::read_zmod(input))));
    } else if (*dec_cmd) {
      emit(io::decomposition_json(ulm::decompose(io::read_zmod(input))));
    } else if (*dual_cmd) {
      std::cout << io::write_zmod(duality::dualize(io::read_zmod(input)));
    } else if (*height_cmd) {
      const ZModule m = io::read_zmod(input);
      if (*vec_opt) {
        emit({{"height", height_json(element_height(m, parse_vector(vector, m)))}});
      } else if (*eta_opt) {
        const duality::DualElement f(m, parse_vector(eta, m));
        if (f.is_zero()) throw DomainError("eta must be nonzero");
        const auto env = duality::cyclic_envelope(f);
        emit({{"m", env.length},
              {"hom_height", height_json(embed::hom_height(env.eta_star))},
              {"dual_height", height_json(element_height(duality::dualize(m), f.coeffs()))}});
      } else {
        throw DomainError("height needs --vector or --eta");
      }
    } else if (*solve_cmd) {
      const ZModule m = io::read_zmod(input);
      auto rows = io::parse_rows(phi_rows);
      if (rows.empty() || rows.front().size() != m.dim())
        throw DomainError("phi must have dim(M) = " + std::to_string(m.dim()) + " columns");
      std::vector<std::int64_t> flat;
      for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
      FpMatrix a(m.ell(), rows.size(), m.dim(), flat);
      ZHom phi(m, make_cyclic(m.ell(), std::int64_t(rows.size())), a);
      const auto sol = embed::solve_module_ep(embed::ModuleEP(phi, lift_n));
      json out{{"solvable", sol.psi.has_value()}, {"surjective", sol.surjective}};
      if (sol.psi) out["psi"] = io::matrix_json(sol.psi->matrix());
      emit(out);
    } else if (*gep_cmd) {
      const auto g = io::read_zgrp(g_path);
      const auto gamma = io::read_zgrp(gamma_path);
      const auto h = io::read_zgrp(h_path);
      group::GroupEP ep(group::GroupHom(h, gamma, parse_map(alpha_map)),
                        group::GroupHom(g, gamma, parse_map(beta_map)));
      const auto cls = group::classify_ep(ep);
      const auto sols = group::enumerate_solutions(ep, limit);
      std::size_t proper = 0;
      for (const auto& s : sols) proper += s.is_surjective();
      json out{{"split", cls.split},
               {"frattini", cls.frattini},
               {"solutions", io::count(sols.size())},
               {"proper", io::count(proper)},
               {"complete", limit == 0 || sols.size() < limit}};
      if (cls.section) out["section"] = cls.section->images();
      if (!sols.empty()) out["example"] = sols.front().images();
      emit(out);
    } else if (*spec_cmd) {
      emit(io::spectrum_json(arith::ulm_spectrum(arith::CycloContext(ell), pmax), detailed));
    } else if (*char_cmd) {
      const auto primes = io::parse_list(ramified);
      arith::CharacterSpec spec(arith::CycloContext(ell),
                                std::set<std::uint64_t>(primes.begin(), primes.end()), char_m);
      emit(io::global_height_json(spec, arith::global_height(spec)));
    } else if (*pres_cmd) {
      present::PresentationBudget b;
      if (ell >= (std::uint64_t{1} << 31)) throw DomainError("l is too large");
      b.ell = Scalar(ell);
      b.max_level = max_level;
      if (!mult_spec.empty()) {
        std::size_t pos = 0;
        while (pos <= mult_spec.size()) {
          std::size_t end = mult_spec.find(',', pos);
          if (end == std::string::npos) end = mult_spec.size();
          const std::string item = mult_spec.substr(pos, end - pos);
          const auto eq = item.find('=');
          if (eq == std::string::npos) throw DomainError("--mult items look like k=m");
          b.mult[io::parse_list(item.substr(0, eq)).at(0)] +=
              io::parse_list(item.substr(eq + 1)).at(0);
          pos = end + 1;
        }
      }
      b.free_mult = free_mult;
      b.trunc = trunc;
      b.countable = countable;
      b.opaque_high = opaque;
      const auto pres = present::emit(b);
      if (format == "text")
        std::cout << pres.listing();
      else
        emit(io::presentation_json(pres));
    } else if (*self_cmd) {
      bool ok = true;
      if (criterion) {
        const auto r = acceptance::run_one(criterion, seed);
        acceptance::print(std::cout, r);
        ok = r.passed;
      } else {
        for (const auto& r : acceptance::run_all(seed)) {
          acceptance::print(std::cout, r);
          ok = ok && r.passed;
        }
      }
      return ok ? 0 : kExitDomain;
    }
  } catch (const ParseError& e) {
    json err = io::error_json(e.kind(), e.what());
    err["error"]["line"] = e.line();
    err["error"]["column"] = e.column();
    std::cerr << err.dump() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << io::error_json(e.kind(), e.what()).dump() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << io::error_json("error", e.what()).dump() << "\n";
    return kExitDomain;
  }
  return 0;
}
